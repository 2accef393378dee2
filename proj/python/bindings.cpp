#include <cmath>

#include <pybind11/gil_safe_call_once.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "troposign/json_io.hpp"

namespace py = pybind11;
using namespace troposign;

namespace {

// Cached callables live until interpreter shutdown without a C++ destructor.
const py::object& cached_attr(py::gil_safe_call_once_and_store<py::object>& storage, const char* module,
                              const char* name) {
  return storage.call_once_and_store_result([&] { return py::module_::import(module).attr(name); }).get_stored();
}

py::object fraction(const Rational& q) {
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> cls;
  return cached_attr(cls, "fractions", "Fraction")(to_string(q));
}

py::object from_json(const io::Json& j) {
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> loads;
  return cached_attr(loads, "json", "loads")(j.dump());
}

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) throw Error("booleans are not rationals");
  return parse_rational(py::str(h).cast<std::string>());
}

TropNum to_trop(const py::handle& h) {
  if (h.is_none()) return TropNum::neg_inf();
  if (py::isinstance<py::float_>(h) && std::isinf(h.cast<double>()) && h.cast<double>() < 0) {
    return TropNum::neg_inf();
  }
  const std::string s = py::str(h).cast<std::string>();
  if (s == "-inf") return TropNum::neg_inf();
  return TropNum(parse_rational(s));
}

py::object from_trop(const TropNum& x) { return x.is_neg_inf() ? py::none() : fraction(x.value()); }

SignedTrop to_signed(const py::handle& h) {
  if (py::isinstance<SignedTrop>(h)) return h.cast<SignedTrop>();
  if (h.is_none()) return SignedTrop::zero();
  return io::parse_signed(py::str(h).cast<std::string>());
}

template <class T, class F>
Matrix<T> to_matrix(const py::handle& rows, F convert) {
  std::vector<std::vector<T>> data;
  for (const auto& r : rows) {
    std::vector<T> row;
    for (const auto& e : r) row.push_back(convert(e));
    data.push_back(std::move(row));
  }
  return Matrix<T>::from_rows(data);
}

SignedMat signed_matrix(const py::handle& rows) { return to_matrix<SignedTrop>(rows, to_signed); }
TropMat trop_matrix(const py::handle& rows) { return to_matrix<TropNum>(rows, to_trop); }

SignedVec signed_vector(const py::handle& v) {
  SignedVec out;
  for (const auto& e : v) out.push_back(to_signed(e));
  return out;
}

TropVec trop_vector(const py::handle& v) {
  TropVec out;
  for (const auto& e : v) out.push_back(to_trop(e));
  return out;
}

FinitePointSet point_set(const py::handle& pts) {
  std::vector<TropVec> v;
  for (const auto& p : pts) v.push_back(trop_vector(p));
  return FinitePointSet(std::move(v));
}

py::list signed_list(const SignedVec& v) {
  py::list out;
  for (const auto& x : v) out.append(py::cast(x));
  return out;
}

py::list signed_rows(const SignedMat& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(signed_list(m.row(i)));
  return out;
}

py::list trop_rows(const TropMat& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.append(from_trop(m(i, j)));
    out.append(r);
  }
  return out;
}

RationalLift make_lift(const py::handle& t) { return RationalLift(to_rational(t)); }

Cnf make_cnf(int num_vars, const std::vector<std::array<int, 3>>& clauses) {
  Cnf cnf{num_vars, clauses};
  for (const auto& c : clauses)
    for (int lit : c)
      if (lit == 0 || std::abs(lit) > num_vars) throw Error("malformed clause: literal out of range");
  return cnf;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic over the symmetrized tropical semiring";
  py::register_exception<Error>(m, "TropError", PyExc_ValueError);

  py::class_<SignedTrop>(m, "SignedTrop")
      .def(py::init([](const py::object& v) { return to_signed(v); }), py::arg("value") = py::none())
      .def_static("zero", &SignedTrop::zero)
      .def_static("one", &SignedTrop::one)
      .def_static("pos", [](const py::object& m) { return SignedTrop::pos(to_trop(m)); })
      .def_static("neg", [](const py::object& m) { return SignedTrop::neg(to_trop(m)); })
      .def_static("bal", [](const py::object& m) { return SignedTrop::bal(to_rational(m)); })
      .def_static("top", &SignedTrop::top)
      .def_static("bot", &SignedTrop::bot)
      .def_static("parse", &io::parse_signed)
      .def_property_readonly("sign", [](const SignedTrop& x) { return std::string(sign_name(x.sign())); })
      .def_property_readonly("magnitude",
                             [](const SignedTrop& x) { return x.has_magnitude() ? fraction(x.magnitude()) : py::none(); })
      .def("is_signed", [](const SignedTrop& x) { return is_signed(x); })
      .def("__add__", [](const SignedTrop& a, const py::object& b) { return oplus(a, to_signed(b)); })
      .def("__radd__", [](const SignedTrop& a, const py::object& b) { return oplus(to_signed(b), a); })
      .def("__mul__", [](const SignedTrop& a, const py::object& b) { return otimes(a, to_signed(b)); })
      .def("__rmul__", [](const SignedTrop& a, const py::object& b) { return otimes(to_signed(b), a); })
      .def("__sub__", [](const SignedTrop& a, const py::object& b) { return ominus(a, to_signed(b)); })
      .def("__neg__", [](const SignedTrop& a) { return ominus(a); })
      .def("__eq__", [](const SignedTrop& a, const py::object& b) {
        try {
          return a == to_signed(b);
        } catch (const Error&) {
          return false;
        }
      })
      .def("__hash__", [](const SignedTrop& a) { return py::hash(py::str(to_string(a))); })
      .def("__str__", [](const SignedTrop& a) { return to_string(a); })
      .def("__repr__", [](const SignedTrop& a) { return "SignedTrop('" + to_string(a) + "')"; });

  m.def("leq", [](const py::object& a, const py::object& b) { return leq(to_signed(a), to_signed(b)); });
  m.def("lt", [](const py::object& a, const py::object& b) { return lt(to_signed(a), to_signed(b)); });
  m.def("balances", [](const py::object& a, const py::object& b) { return balances(to_signed(a), to_signed(b)); });
  m.def("modulus", [](const py::object& a) { return from_trop(modulus(to_signed(a))); });

  m.def("det_signed", [](const py::object& a) { return det_signed(signed_matrix(a)); });
  m.def("comatrix", [](const py::object& a) { return signed_rows(comatrix(signed_matrix(a))); });
  m.def("kleene_star", [](const py::object& a) { return signed_rows(kleene_star(signed_matrix(a))); });

  m.def("check_cone", [](const std::string& cone, const py::object& a) {
    return from_json(io::to_json(check_cone(parse_cone(cone), signed_matrix(a))));
  });
  m.def("is_psd_signed", [](const py::object& a) { return is_psd_signed(signed_matrix(a)).member; });
  m.def("is_copositive", [](const py::object& a) { return is_copositive(signed_matrix(a)).member; });
  m.def("is_cp", [](const py::object& x) { return is_cp(trop_matrix(x)).member; });
  m.def("is_cpsd", [](const py::object& x) { return is_cpsd(trop_matrix(x)).member; });
  m.def("is_psd_trop", [](const py::object& x) { return is_psd_trop(trop_matrix(x)).member; });
  m.def("cp_factorize", [](const py::object& x) { return trop_rows(cp_factorize(trop_matrix(x))); });

  m.def("polar_contains",
        [](const py::object& pts, const py::object& x) { return polar_contains(point_set(pts), signed_vector(x)); });
  m.def("separate", [](const py::object& pts, const py::object& z) -> py::object {
    const auto u = separate(point_set(pts), trop_vector(z));
    return u ? py::object(signed_list(*u)) : py::none();
  });

  m.def("poly_roots", [](const py::object& coeffs) { return signed_list(poly_roots(SignedPoly(signed_vector(coeffs)))); });
  m.def("minimize_poly", [](const py::object& coeffs) {
    const SignedPoly f(signed_vector(coeffs));
    return from_json(io::to_json(minimize_poly(f), poly_roots(f)));
  });
  m.def("solve_quadratic", [](const py::object& a, const py::object& b) {
    return from_json(io::to_json(solve_quadratic({signed_matrix(a), signed_vector(b)})));
  });

  m.def("encode_3sat", [](int num_vars, const std::vector<std::array<int, 3>>& clauses) {
    return from_json(io::to_json(encode_3sat(make_cnf(num_vars, clauses))));
  });
  m.def("sat_feasible", [](int num_vars, const std::vector<std::array<int, 3>>& clauses) {
    const QuadSystem sys = encode_3sat(make_cnf(num_vars, clauses));
    return from_json(io::to_json(feasibility_bruteforce(sys, boolean_domain()), sys));
  });

  m.def("lift_scalar", [](const py::object& x, const py::object& t) { return fraction(lift_scalar(to_signed(x), make_lift(t))); },
        py::arg("x"), py::arg("t") = "1000000");
  m.def(
      "sval_extract",
      [](const py::object& v, const py::object& t) {
        const SvalEstimate s = sval_extract(to_rational(v), make_lift(t));
        py::dict d;
        d["value"] = s.to_signed();
        d["raw"] = s.raw;
        d["exact"] = s.exact;
        return d;
      },
      py::arg("v"), py::arg("t") = "1000000");
  m.def(
      "lift_psd", [](const py::object& a, const py::object& t) { return from_json(io::to_json(lift_psd(signed_matrix(a), make_lift(t)))); },
      py::arg("a"), py::arg("t") = "1000000");
  m.def(
      "verify_polar_commutation",
      [](const py::object& pts, const py::object& t, std::size_t samples, std::uint64_t seed) {
        Rng rng(seed);
        return from_json(io::to_json(verify_polar_commutation(point_set(pts), make_lift(t), samples, rng)));
      },
      py::arg("points"), py::arg("t") = "1000000", py::arg("samples") = 200, py::arg("seed") = kDefaultSeed);
  m.def(
      "verify_collapse",
      [](std::size_t n, const py::object& t, std::size_t samples, std::uint64_t seed) {
        Rng rng(seed);
        return from_json(io::to_json(verify_collapse(n, make_lift(t), samples, rng)));
      },
      py::arg("n"), py::arg("t") = "1000000", py::arg("samples") = 100, py::arg("seed") = kDefaultSeed);
}
