#include "doctest.h"

#include <set>
#include <sstream>

#include "troposign/random.hpp"
#include "troposign/sat.hpp"

using namespace troposign;

namespace {

SignedTrop P(long m) { return SignedTrop::pos(m); }

// Plain truth-table evaluation, independent of the library's checker.
bool satisfiable_by_table(const Cnf& cnf) {
  for (unsigned long mask = 0; mask < (1UL << cnf.num_vars); ++mask) {
    bool all = true;
    for (const auto& c : cnf.clauses) {
      bool any = false;
      for (int lit : c) {
        const bool val = (mask >> (std::abs(lit) - 1)) & 1UL;
        any |= lit > 0 ? val : !val;
      }
      all &= any;
      if (!all) break;
    }
    if (all) return true;
  }
  return false;
}

Cnf random_cnf(Rng& rng, int max_vars, std::size_t max_clauses) {
  Cnf cnf;
  cnf.num_vars = static_cast<int>(rng.uniform(1, max_vars));
  const auto count = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_clauses)));
  for (std::size_t c = 0; c < count; ++c) {
    std::array<int, 3> clause{};
    for (int& lit : clause) {
      lit = static_cast<int>(rng.uniform(1, cnf.num_vars));
      if (rng.chance(1, 2)) lit = -lit;
    }
    cnf.clauses.push_back(clause);
  }
  return cnf;
}

}  // namespace

TEST_CASE("DIMACS parsing") {
  std::istringstream in("c example\np cnf 3 2\n1 -2 3 0\n-1 2 3 0\n");
  const Cnf cnf = parse_dimacs(in);
  CHECK(cnf.num_vars == 3);
  REQUIRE(cnf.clauses.size() == 2);
  CHECK(cnf.clauses[0] == std::array<int, 3>{1, -2, 3});

  std::ostringstream out;
  write_dimacs(out, cnf, "round trip");
  std::istringstream back(out.str());
  const Cnf again = parse_dimacs(back);
  CHECK(again.num_vars == cnf.num_vars);
  CHECK(again.clauses == cnf.clauses);

  std::istringstream two("p cnf 2 1\n1 2 0\n");
  CHECK_THROWS_AS(parse_dimacs(two), Error);
  std::istringstream count("p cnf 2 2\n1 2 -1 0\n");
  CHECK_THROWS_AS(parse_dimacs(count), Error);
  std::istringstream range("p cnf 2 1\n1 2 3 0\n");
  CHECK_THROWS_AS(parse_dimacs(range), Error);
  std::istringstream noheader("1 2 3 0\n");
  CHECK_THROWS_AS(parse_dimacs(noheader), Error);
}

TEST_CASE("encoding of a single clause") {
  const Cnf cnf{3, {{1, -2, 3}}};
  const QuadSystem sys = encode_3sat(cnf);
  CHECK(sys.num_vars == 6);
  CHECK(sys.var_names == std::vector<std::string>{"x1", "x2", "x3", "y1", "y2", "y3"});
  CHECK(sys.constraints.size() == 2 * (6 + 3 + 1));
  std::size_t clause_count = 0;
  for (const auto& c : sys.constraints) {
    if (c.tag != "clause 1") continue;
    ++clause_count;
    std::set<std::size_t> vars;
    for (const auto& t : c.f.linear) {
      vars.insert(t.i);
      CHECK(t.coeff == P(0));
    }
    CHECK(vars == std::set<std::size_t>{0, 4, 2});
    CHECK(c.f.constant == SignedTrop::neg(1));
  }
  CHECK(clause_count == 2);
}

TEST_CASE("empty and contradictory formulas") {
  const Cnf empty{2, {}};
  const Feasibility f = feasibility_bruteforce(encode_3sat(empty), boolean_domain());
  CHECK(f.feasible);

  const Cnf contra{1, {{1, 1, 1}, {-1, -1, -1}}};
  CHECK_FALSE(feasibility_bruteforce(encode_3sat(contra), boolean_domain()).feasible);
  CHECK_FALSE(cnf_satisfiable(contra));
}

TEST_CASE("domain constraint admits exactly the tropical booleans") {
  const QuadSystem sys = encode_3sat({1, {}});
  const QuadConstraint& le = sys.constraints[0];
  const QuadConstraint& ge = sys.constraints[1];
  CHECK(le.tag == "domain x1");
  for (long m = -3; m <= 3; ++m)
    for (const SignedTrop& s : {SignedTrop::pos(m), SignedTrop::neg(m)}) {
      const SignedVec x{s, P(0)};
      const bool ok = le.holds(x) && ge.holds(x);
      CHECK(ok == (s == P(0) || s == P(1)));
      CHECK(ok == balances(le.f.eval(x), SignedTrop::zero()));
    }
  CHECK_FALSE((le.holds({SignedTrop::zero(), P(0)}) && ge.holds({SignedTrop::zero(), P(0)})));
}

TEST_CASE("feasibility agrees with the truth table") {
  Rng rng(71);
  for (int s = 0; s < 150; ++s) {
    const Cnf cnf = random_cnf(rng, 8, 15);
    const bool expected = satisfiable_by_table(cnf);
    CHECK(cnf_satisfiable(cnf) == expected);
    const Feasibility f = feasibility_bruteforce(encode_3sat(cnf), boolean_domain());
    CHECK(f.feasible == expected);
    if (f.feasible) {
      REQUIRE(f.witness);
      CHECK(cnf_holds(cnf, decode_assignment(*f.witness, cnf.num_vars)));
    }
  }
}

TEST_CASE("a wider domain does not change feasibility") {
  Rng rng(72);
  const std::vector<SignedTrop> wide{SignedTrop::zero(), SignedTrop::neg(0), P(-1), P(0), P(1), P(2)};
  for (int s = 0; s < 40; ++s) {
    const Cnf cnf = random_cnf(rng, 3, 6);
    const QuadSystem sys = encode_3sat(cnf);
    const Feasibility f = feasibility_bruteforce(sys, wide);
    CHECK(f.feasible == satisfiable_by_table(cnf));
    if (f.witness)
      for (const auto& c : sys.constraints) CHECK(c.holds(*f.witness));
  }
}

TEST_CASE("brute force returns the lexicographically first witness") {
  QuadSystem sys;
  sys.num_vars = 2;
  sys.var_names = {"a", "b"};
  // a ⊕ b ⪰ 1
  QuadForm f;
  f.linear = {{0, P(0)}, {1, P(0)}};
  f.constant = SignedTrop::neg(1);
  sys.constraints.push_back({f, Relation::geq_zero, "sum"});
  const Feasibility r = feasibility_bruteforce(sys, {P(0), P(1), P(2)});
  REQUIRE(r.witness);
  CHECK(*r.witness == SignedVec{P(0), P(1)});
  CHECK(r.nodes > 0);
  CHECK_THROWS_AS(feasibility_bruteforce(sys, std::vector<std::vector<SignedTrop>>{{P(0)}}), Error);
}

TEST_CASE("relations") {
  for (Relation r : {Relation::leq_zero, Relation::geq_zero, Relation::balances_zero})
    CHECK(parse_relation(relation_symbol(r)) == r);
  CHECK_THROWS_AS(parse_relation("=0"), Error);
}
