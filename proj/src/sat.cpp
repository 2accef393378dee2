#include "troposign/sat.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace troposign {

SignedTrop QuadForm::eval(const SignedVec& x) const {
  SignedTrop acc = constant;
  for (const auto& t : quadratic) acc = oplus(acc, otimes(otimes(x.at(t.i), t.coeff), x.at(t.j)));
  for (const auto& t : linear) acc = oplus(acc, otimes(t.coeff, x.at(t.i)));
  return acc;
}

long QuadForm::max_index() const {
  long m = -1;
  for (const auto& t : quadratic) m = std::max({m, static_cast<long>(t.i), static_cast<long>(t.j)});
  for (const auto& t : linear) m = std::max(m, static_cast<long>(t.i));
  return m;
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::leq_zero: return "<=0";
    case Relation::geq_zero: return ">=0";
    case Relation::balances_zero: return "~0";
  }
  return "?";
}

Relation parse_relation(const std::string& s) {
  if (s == "<=0") return Relation::leq_zero;
  if (s == ">=0") return Relation::geq_zero;
  if (s == "~0") return Relation::balances_zero;
  throw Error("unknown relation '" + s + "'");
}

bool QuadConstraint::holds(const SignedVec& x) const {
  const SignedTrop v = f.eval(x);
  const SignedTrop zero;
  switch (relation) {
    case Relation::leq_zero: return leq(v, zero);
    case Relation::geq_zero: return geq(v, zero);
    case Relation::balances_zero: return balances(v, zero);
  }
  return false;
}

Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  bool header = false;
  long declared_clauses = -1;
  std::vector<int> pending;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> cnf.num_vars >> declared_clauses) || fmt != "cnf" || cnf.num_vars < 0 ||
          declared_clauses < 0) {
        throw Error("DIMACS line " + std::to_string(lineno) + ": malformed problem line");
      }
      header = true;
      continue;
    }
    if (!header) throw Error("DIMACS line " + std::to_string(lineno) + ": clause before problem line");
    std::istringstream cl(line);
    long lit = 0;
    while (cl >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) {
          throw Error("DIMACS line " + std::to_string(lineno) + ": malformed clause (expected 3 literals, got " +
                      std::to_string(pending.size()) + ")");
        }
        cnf.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (std::labs(lit) > cnf.num_vars) {
          throw Error("DIMACS line " + std::to_string(lineno) + ": literal " + std::to_string(lit) +
                      " out of range");
        }
        pending.push_back(static_cast<int>(lit));
      }
    }
    if (!cl.eof()) throw Error("DIMACS line " + std::to_string(lineno) + ": malformed literal");
  }
  if (!header) throw Error("DIMACS input has no problem line");
  if (!pending.empty()) throw Error("DIMACS input ends inside a clause");
  if (declared_clauses >= 0 && static_cast<std::size_t>(declared_clauses) != cnf.clauses.size()) {
    throw Error("DIMACS clause count mismatch: declared " + std::to_string(declared_clauses) + ", found " +
                std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

void write_dimacs(std::ostream& out, const Cnf& cnf, const std::string& comment) {
  if (!comment.empty()) out << "c " << comment << "\n";
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& c : cnf.clauses) out << c[0] << " " << c[1] << " " << c[2] << " 0\n";
}

bool cnf_holds(const Cnf& cnf, const std::vector<bool>& assignment) {
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (int lit : c) {
      const bool v = assignment.at(static_cast<std::size_t>(std::abs(lit) - 1));
      if ((lit > 0) == v) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

bool cnf_satisfiable(const Cnf& cnf, std::vector<bool>* witness) {
  if (cnf.num_vars > 24) throw Error("cnf_satisfiable: too many variables for exhaustive search");
  const std::uint64_t total = std::uint64_t{1} << cnf.num_vars;
  std::vector<bool> a(static_cast<std::size_t>(cnf.num_vars));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int v = 0; v < cnf.num_vars; ++v) a[static_cast<std::size_t>(v)] = (mask >> v) & 1U;
    if (cnf_holds(cnf, a)) {
      if (witness != nullptr) *witness = a;
      return true;
    }
  }
  return false;
}

QuadSystem encode_3sat(const Cnf& cnf) {
  const auto m = static_cast<std::size_t>(cnf.num_vars);
  QuadSystem sys;
  sys.num_vars = 2 * m;
  for (std::size_t v = 1; v <= m; ++v) sys.var_names.push_back("x" + std::to_string(v));
  for (std::size_t v = 1; v <= m; ++v) sys.var_names.push_back("y" + std::to_string(v));

  const SignedTrop one = SignedTrop::pos(1);
  auto emit_balance = [&sys](QuadForm f, const std::string& tag) {
    sys.constraints.push_back({f, Relation::leq_zero, tag});
    sys.constraints.push_back({std::move(f), Relation::geq_zero, tag});
  };

  // s² ⊖ 1·s ⊕ 1 ∇ 𝟘 forces s ∈ {0, 1}.
  for (std::size_t s = 0; s < 2 * m; ++s) {
    QuadForm f;
    f.quadratic.push_back({s, s, SignedTrop::one()});
    f.linear.push_back({s, ominus(one)});
    f.constant = one;
    emit_balance(std::move(f), "domain " + sys.var_names[s]);
  }
  // x_i ⊙ y_i ∇ 1
  for (std::size_t v = 0; v < m; ++v) {
    QuadForm f;
    f.quadratic.push_back({v, m + v, SignedTrop::one()});
    f.constant = ominus(one);
    emit_balance(std::move(f), "link " + std::to_string(v + 1));
  }
  // l₁ ⊕ l₂ ⊕ l₃ ∇ 1, with y for negated literals.
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
    QuadForm f;
    for (int lit : cnf.clauses[c]) {
      if (lit == 0 || std::abs(lit) > cnf.num_vars) {
        throw Error("malformed clause " + std::to_string(c + 1) + ": literal " + std::to_string(lit));
      }
      std::size_t var = static_cast<std::size_t>(std::abs(lit) - 1) + (lit < 0 ? m : 0);
      bool dup = std::any_of(f.linear.begin(), f.linear.end(), [&](const LinTerm& t) { return t.i == var; });
      if (!dup) f.linear.push_back({var, SignedTrop::one()});
    }
    f.constant = ominus(one);
    emit_balance(std::move(f), "clause " + std::to_string(c + 1));
  }
  return sys;
}

std::vector<bool> decode_assignment(const SignedVec& witness, int num_vars) {
  std::vector<bool> out;
  for (int v = 0; v < num_vars; ++v) out.push_back(witness.at(static_cast<std::size_t>(v)) == SignedTrop::pos(1));
  return out;
}

std::vector<SignedTrop> boolean_domain() { return {SignedTrop::pos(0), SignedTrop::pos(1)}; }

Feasibility feasibility_bruteforce(const QuadSystem& sys, const std::vector<SignedTrop>& domain) {
  return feasibility_bruteforce(sys, std::vector<std::vector<SignedTrop>>(sys.num_vars, domain));
}

Feasibility feasibility_bruteforce(const QuadSystem& sys,
                                   const std::vector<std::vector<SignedTrop>>& domains) {
  const std::size_t n = sys.num_vars;
  if (domains.size() != n) throw Error("feasibility_bruteforce: one domain per variable required");
  for (const auto& d : domains) {
    if (d.empty()) throw Error("feasibility_bruteforce: domain empty");
    for (const auto& v : d)
      if (!is_signed(v)) throw Error("feasibility_bruteforce: domain values must be signed");
  }

  // Constraints grouped by the depth at which they become fully assigned.
  std::vector<std::vector<const QuadConstraint*>> ready(n + 1);
  for (const auto& c : sys.constraints) {
    long mi = c.f.max_index();
    if (mi >= static_cast<long>(n)) throw Error("constraint references an unknown variable");
    ready[static_cast<std::size_t>(mi + 1)].push_back(&c);
  }

  Feasibility result;
  for (const auto* c : ready[0])
    if (!c->holds(SignedVec(n))) return result;

  SignedVec x(n);
  std::vector<std::size_t> choice(n, 0);
  std::size_t depth = 0;  // number of assigned variables
  bool descend = true;
  while (true) {
    if (descend) {
      if (depth == n) {
        result.feasible = true;
        result.witness = x;
        return result;
      }
      choice[depth] = 0;
    } else {
      if (depth == 0) return result;
      --depth;
      if (++choice[depth] >= domains[depth].size()) {
        x[depth] = SignedTrop::zero();
        descend = false;
        continue;
      }
    }
    x[depth] = domains[depth][choice[depth]];
    ++result.nodes;
    bool ok = true;
    for (const auto* c : ready[depth + 1])
      if (!c->holds(x)) {
        ok = false;
        break;
      }
    if (ok) {
      ++depth;
      descend = true;
    } else {
      ++depth;  // backtrack from this value
      descend = false;
    }
  }
}

}  // namespace troposign
