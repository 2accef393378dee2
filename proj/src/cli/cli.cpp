#include "troposign/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "troposign/json_io.hpp"

namespace troposign::cli {

namespace {

using io::Json;

struct Options {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
  bool format_set = false;

  std::string in, cone = "psd-signed";
  std::string a_path, x_path, pair_path, b_path, r_path, z_path;
  std::string coeffs, cnf, system, domain = "01";
  std::string t = "1000000";
  long max_denominator = 4;
  std::size_t samples = 200;
  std::size_t n = 2;
  std::size_t count = 10;
  std::string kind;
  std::string range = "-6:6";
  std::string step = "1/4";
};

std::uint64_t effective_seed(const Options& o) { return o.seed ? *o.seed : seed_from_env(); }

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void text(const std::string& s) {
    if (o_.out.empty()) {
      out_ << s;
      return;
    }
    std::ofstream f(o_.out, std::ios::binary);
    if (!f) throw Error("cannot write '" + o_.out + "'");
    f << s;
  }
  void json(const Json& j) { text(j.dump(2) + "\n"); }
  std::ostream& console() { return out_; }

 private:
  const Options& o_;
  std::ostream& out_;
};

Json load(const std::string& path, const char* flag) {
  if (path.empty()) throw Error(std::string("missing required option ") + flag);
  return io::read_file(path);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RationalLift make_lift(const Options& o) { return RationalLift(parse_rational(o.t), o.max_denominator); }

std::vector<SignedTrop> parse_domain(const std::string& spec) {
  if (spec == "01") return boolean_domain();
  std::vector<SignedTrop> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(io::parse_signed(item));
  if (out.empty()) throw Error("domain '" + spec + "' is empty");
  return out;
}

std::pair<Rational, Rational> parse_range(const std::string& r) {
  const auto colon = r.find(':');
  if (colon == std::string::npos) throw Error("range must look like lo:hi, got '" + r + "'");
  Rational lo = parse_rational(r.substr(0, colon)), hi = parse_rational(r.substr(colon + 1));
  if (lo > hi) throw Error("range lower end exceeds upper end");
  return {lo, hi};
}

int cmd_cone_check(const Options& o, Emitter& e) {
  const Cone cone = parse_cone(o.cone);
  const SignedMat m = io::signed_mat_from_json(load(o.in, "--in"));
  const ConeVerdict v = check_cone(cone, m);
  e.json(io::to_json(v));
  return v.member ? kOk : kFalse;
}

int cmd_cone_factorize(const Options& o, Emitter& e) {
  const SignedMat m = io::signed_mat_from_json(load(o.in, "--in"));
  const TropMat x = as_trop(m);
  const TropMat y = cp_factorize(x);
  e.json({{"y", io::to_json(y)}, {"columns", y.cols()}});
  return kOk;
}

int cmd_polar_member(const Options& o, Emitter& e) {
  const FinitePointSet a = io::point_set_from_json(load(o.a_path, "--A"));
  const SignedVec x = io::signed_vec_from_json(load(o.x_path, "--x"));
  const bool m = polar_contains(a, x);
  e.json({{"member", m}});
  return m ? kOk : kFalse;
}

int cmd_polar_two_sided(const Options& o, Emitter& e) {
  const FinitePointSet a = io::point_set_from_json(load(o.a_path, "--A"));
  const SignedPair p = io::pair_from_json(load(o.pair_path, "--pair"));
  const bool m = two_sided_contains(a, p);
  e.json({{"member", m}});
  return m ? kOk : kFalse;
}

int cmd_polar_one_sided(const Options& o, Emitter& e) {
  const FinitePairSet b = io::pair_set_from_json(load(o.b_path, "--B"));
  const TropVec a = io::trop_vec_from_json(load(o.x_path, "--a"));
  const bool m = one_sided_contains(b, a);
  e.json({{"member", m}});
  return m ? kOk : kFalse;
}

int cmd_polar_axioms(const Options& o, Emitter& e) {
  Rng rng(effective_seed(o));
  SampleBudget budget;
  budget.samples = o.samples;
  BendReport report;
  if (!o.r_path.empty()) {
    report = check_bend_axioms(io::pair_set_from_json(io::read_file(o.r_path)), budget, rng);
  } else {
    const FinitePointSet a = io::point_set_from_json(load(o.a_path, "--R or --A"));
    std::vector<SignedPair> gens;
    for (const auto& x : sample_polar_members(a, 8, budget.grid, rng)) gens.push_back(pair_from_signed(x));
    report = check_bend_axioms(polar_membership(a), a.dim(), gens, budget, rng);
  }
  e.json(io::to_json(report));
  return report.consistent ? kOk : kFalse;
}

int cmd_polar_separate(const Options& o, Emitter& e) {
  const FinitePointSet a = io::point_set_from_json(load(o.a_path, "--A"));
  const TropVec z = io::trop_vec_from_json(load(o.z_path, "--z"));
  const auto u = separate(a, z);
  Json j = {{"in_hull", !u.has_value()}};
  j["separator"] = u ? io::to_json(*u) : Json(nullptr);
  if (u) j["value"] = io::to_json(dot_signed(*u, z));
  e.json(j);
  return u ? kOk : kFalse;
}

int cmd_opt_poly(const Options& o, Emitter& e) {
  const SignedPoly f = io::poly_from_json(load(o.coeffs, "--coeffs"));
  e.json(io::to_json(minimize_poly(f), poly_roots(f)));
  return kOk;
}

int cmd_opt_quad(const Options& o, Emitter& e) {
  const QuadProblem p = io::quad_problem_from_json(load(o.in, "--in"));
  e.json(io::to_json(solve_quadratic(p)));
  return kOk;
}

int cmd_opt_copositive_qp(const Options& o, Emitter& e) {
  const SignedMat a = io::signed_mat_from_json(load(o.in, "--in"));
  e.json(io::to_json(copositive_qp_value(a)));
  return kOk;
}

int cmd_sat_encode(const Options& o, Emitter& e) {
  if (o.cnf.empty()) throw Error("missing required option --cnf");
  std::istringstream in(slurp(o.cnf));
  e.json(io::to_json(encode_3sat(parse_dimacs(in))));
  return kOk;
}

int cmd_sat_check(const Options& o, Emitter& e) {
  const QuadSystem sys = io::quad_system_from_json(load(o.system, "--system"));
  const Feasibility f = feasibility_bruteforce(sys, parse_domain(o.domain));
  e.json(io::to_json(f, sys));
  return f.feasible ? kOk : kFalse;
}

int cmd_lift_verify_polar(const Options& o, Emitter& e) {
  const FinitePointSet a = io::point_set_from_json(load(o.a_path, "--A"));
  Rng rng(effective_seed(o));
  const VerifyReport r = verify_polar_commutation(a, make_lift(o), o.samples, rng);
  e.json(io::to_json(r));
  return r.counterexamples.empty() ? kOk : kFalse;
}

int cmd_lift_verify_collapse(const Options& o, Emitter& e) {
  Rng rng(effective_seed(o));
  const VerifyReport r = verify_collapse(o.n, make_lift(o), o.samples, rng);
  e.json(io::to_json(r));
  return r.counterexamples.empty() ? kOk : kFalse;
}

int cmd_lift_psd(const Options& o, Emitter& e) {
  const SignedMat a = io::signed_mat_from_json(load(o.in, "--in"));
  e.json(io::to_json(lift_psd(a, make_lift(o))));
  return kOk;
}

int cmd_plot_poly(const Options& o, Emitter& e) {
  const SignedPoly f = io::poly_from_json(load(o.coeffs, "--coeffs"));
  const auto [lo, hi] = parse_range(o.range);
  const Rational step = parse_rational(o.step);
  const std::string tsv = plot_poly_tsv(f, lo, hi, step);
  if (!o.format_set || o.format == "tsv") {
    e.text(tsv);
    return kOk;
  }
  // JSON rows keyed by the TSV header.
  std::istringstream in(tsv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> header;
  {
    std::istringstream h(line);
    std::string col;
    while (std::getline(h, col, '\t')) header.push_back(col);
  }
  Json rows = Json::array();
  while (std::getline(in, line)) {
    std::istringstream r(line);
    std::string cell;
    Json row = Json::object();
    for (std::size_t c = 0; std::getline(r, cell, '\t') && c < header.size(); ++c) row[header[c]] = cell;
    rows.push_back(std::move(row));
  }
  e.json(rows);
  return kOk;
}

int cmd_gen_corpus(const Options& o, Emitter& e) {
  if (o.out.empty()) throw Error("gen corpus needs --out DIR");
  CorpusSpec spec{o.kind, o.n, o.count, effective_seed(o), o.out};
  const auto files = gen_corpus(spec);
  const Json j = {{"kind", o.kind}, {"count", o.count}, {"seed", spec.seed}, {"out", o.out}, {"files", files}};
  e.console() << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact arithmetic over the symmetrized tropical semiring", "troposign"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "RNG seed (default: $TROPOSIGN_SEED or a fixed constant)");
  app.add_option("--out", o.out, "Write output to this file (directory for gen corpus)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

  std::function<int(const Options&, Emitter&)> action;
  auto leaf = [&action](CLI::App* parent, const std::string& name, const std::string& help,
                        std::function<int(const Options&, Emitter&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  CLI::App* cone = app.add_subcommand("cone", "Matrix cone membership")->require_subcommand(1);
  auto* cc = leaf(cone, "check", "Decide membership with a certificate", cmd_cone_check);
  cc->add_option("--cone", o.cone, "psd, psd-signed, pd, cp, cpsd, copositive");
  cc->add_option("--in", o.in, "Matrix JSON")->required();
  auto* cf = leaf(cone, "factorize", "Tropical CP factorization Y with Y Y^T = X", cmd_cone_factorize);
  cf->add_option("--in", o.in, "Matrix JSON")->required();

  CLI::App* polar = app.add_subcommand("polar", "Signed polars and bend cones")->require_subcommand(1);
  auto* pm = leaf(polar, "member", "x in A°", cmd_polar_member);
  pm->add_option("--A", o.a_path, "Point set JSON")->required();
  pm->add_option("--x", o.x_path, "Signed vector JSON")->required();
  auto* pt = leaf(polar, "two-sided", "Pair in the two-sided polar of A", cmd_polar_two_sided);
  pt->add_option("--A", o.a_path, "Point set JSON")->required();
  pt->add_option("--pair", o.pair_path, "Pair JSON")->required();
  auto* po = leaf(polar, "one-sided", "Point in the one-sided polar of B", cmd_polar_one_sided);
  po->add_option("--B", o.b_path, "Pair set JSON")->required();
  po->add_option("--a", o.x_path, "Tropical vector JSON")->required();
  auto* pa = leaf(polar, "axioms", "Sampled signed bend cone axiom check", cmd_polar_axioms);
  pa->add_option("--R", o.r_path, "Pair set JSON (literal membership)");
  pa->add_option("--A", o.a_path, "Point set JSON (two-sided polar membership)");
  pa->add_option("--samples", o.samples, "Sample budget")->capture_default_str();
  auto* ps = leaf(polar, "separate", "Separator in A° strictly violated by z", cmd_polar_separate);
  ps->add_option("--A", o.a_path, "Point set JSON")->required();
  ps->add_option("--z", o.z_path, "Tropical vector JSON")->required();

  CLI::App* opt = app.add_subcommand("opt", "Optimization")->require_subcommand(1);
  leaf(opt, "poly", "Minimize a univariate signed polynomial", cmd_opt_poly)
      ->add_option("--coeffs", o.coeffs, "Coefficients a0..an JSON")
      ->required();
  leaf(opt, "quad", "Minimize x^T A x + b^T x for A positive definite", cmd_opt_quad)
      ->add_option("--in", o.in, "Problem JSON {A, b}")
      ->required();
  leaf(opt, "copositive-qp", "inf x^T A x over x >= 0", cmd_opt_copositive_qp)
      ->add_option("--in", o.in, "Matrix JSON")
      ->required();

  CLI::App* sat = app.add_subcommand("sat", "3-SAT reduction")->require_subcommand(1);
  leaf(sat, "encode", "Encode a DIMACS 3-CNF as quadratic constraints", cmd_sat_encode)
      ->add_option("--cnf", o.cnf, "DIMACS file")
      ->required();
  auto* sc = leaf(sat, "check", "Exhaustive feasibility over a finite domain", cmd_sat_check);
  sc->add_option("--system", o.system, "System JSON")->required();
  sc->add_option("--domain", o.domain, "\"01\" or a comma-separated list of values")->capture_default_str();

  CLI::App* lift = app.add_subcommand("lift", "Monomial lifts at a fixed t")->require_subcommand(1);
  auto add_t = [&o](CLI::App* s) {
    s->add_option("--t", o.t, "Lift parameter")->capture_default_str();
    s->add_option("--max-denominator", o.max_denominator, "Exponent denominator bound")->capture_default_str();
  };
  auto* lp = leaf(lift, "verify-polar", "Sampled check of sval(polar) = polar(val)", cmd_lift_verify_polar);
  lp->add_option("--A", o.a_path, "Point set JSON")->required();
  lp->add_option("--samples", o.samples, "Samples per direction")->capture_default_str();
  add_t(lp);
  auto* lc = leaf(lift, "verify-collapse", "Sampled check of the hierarchy collapse", cmd_lift_verify_collapse);
  lc->add_option("--n", o.n, "Dimension (1..4)")->capture_default_str();
  lc->add_option("--samples", o.samples, "Samples per direction")->capture_default_str();
  add_t(lc);
  auto* lps = leaf(lift, "psd", "Lift a signed PSD matrix and certify it", cmd_lift_psd);
  lps->add_option("--in", o.in, "Matrix JSON")->required();
  add_t(lps);

  CLI::App* plot = app.add_subcommand("plot", "Plot data")->require_subcommand(1);
  auto* pp = leaf(plot, "poly", "Tabulate a signed polynomial", cmd_plot_poly);
  pp->add_option("--coeffs", o.coeffs, "Coefficients a0..an JSON")->required();
  pp->add_option("--range", o.range, "Magnitude range lo:hi")->capture_default_str();
  pp->add_option("--step", o.step, "Magnitude step")->capture_default_str();

  CLI::App* gen = app.add_subcommand("gen", "Test corpora")->require_subcommand(1);
  auto* gc = leaf(gen, "corpus", "Deterministic corpus with a manifest", cmd_gen_corpus);
  gc->add_option("--kind", o.kind, "psd, cp, copositive, polar, sat")
      ->required()
      ->check(CLI::IsMember({"psd", "cp", "copositive", "polar", "sat"}));
  gc->add_option("--n", o.n, "Dimension (variables for sat)")->capture_default_str();
  gc->add_option("--count", o.count, "Number of instances")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  o.format_set = app.get_option("--format")->count() > 0;

  try {
    Emitter emitter(o, out);
    return action(o, emitter);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace troposign::cli
