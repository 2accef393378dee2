#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "troposign/matrix.hpp"

namespace troposign {

// Coefficient c on x_i·x_j. For i ≠ j this is the symmetric entry A_ij = A_ji;
// both halves of the quadratic form agree, so one term suffices.
struct QuadTerm {
  std::size_t i;
  std::size_t j;
  SignedTrop coeff;
};

struct LinTerm {
  std::size_t i;
  SignedTrop coeff;
};

// f(x) = xᵀAx ⊕ bᵀx ⊕ c in sparse form.
struct QuadForm {
  std::vector<QuadTerm> quadratic;
  std::vector<LinTerm> linear;
  SignedTrop constant;

  SignedTrop eval(const SignedVec& x) const;
  // Largest variable index used, or -1 when constant.
  long max_index() const;
};

enum class Relation { leq_zero, geq_zero, balances_zero };

const char* relation_symbol(Relation r);  // "<=0", ">=0", "~0"
Relation parse_relation(const std::string& s);

struct QuadConstraint {
  QuadForm f;
  Relation relation;
  std::string tag;  // e.g. "domain x3", "link 2", "clause 1"

  bool holds(const SignedVec& x) const;
};

struct QuadSystem {
  std::size_t num_vars = 0;
  std::vector<std::string> var_names;
  std::vector<QuadConstraint> constraints;
};

// Literals are ±v with v in 1..num_vars.
struct Cnf {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

Cnf parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Cnf& cnf, const std::string& comment = "");
bool cnf_satisfiable(const Cnf& cnf, std::vector<bool>* witness = nullptr);
bool cnf_holds(const Cnf& cnf, const std::vector<bool>& assignment);

// Unknowns x_1..x_m are indices 0..m-1 and y_1..y_m are m..2m-1.
QuadSystem encode_3sat(const Cnf& cnf);
std::vector<bool> decode_assignment(const SignedVec& witness, int num_vars);

struct Feasibility {
  bool feasible = false;
  std::optional<SignedVec> witness;
  std::uint64_t nodes = 0;  // partial assignments visited
};

// Exhaustive search over domain^n in lexicographic order (domain order, first
// variable most significant); each constraint is checked as soon as all its
// variables are assigned, so the first witness found is the lexicographically
// first one.
Feasibility feasibility_bruteforce(const QuadSystem& sys, const std::vector<SignedTrop>& domain);
Feasibility feasibility_bruteforce(const QuadSystem& sys,
                                   const std::vector<std::vector<SignedTrop>>& domains);

// {Pos(0), Pos(1)}, i.e. tropical 0 and 1.
std::vector<SignedTrop> boolean_domain();

}  // namespace troposign
