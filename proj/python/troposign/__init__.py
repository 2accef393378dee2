"""Exact arithmetic over the symmetrized tropical semiring."""

from ._core import (  # noqa: F401
    SignedTrop,
    TropError,
    balances,
    check_cone,
    comatrix,
    cp_factorize,
    det_signed,
    encode_3sat,
    is_copositive,
    is_cp,
    is_cpsd,
    is_psd_signed,
    is_psd_trop,
    kleene_star,
    leq,
    lift_psd,
    lift_scalar,
    lt,
    minimize_poly,
    modulus,
    polar_contains,
    poly_roots,
    sat_feasible,
    separate,
    solve_quadratic,
    sval_extract,
    verify_collapse,
    verify_polar_commutation,
)
