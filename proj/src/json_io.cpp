#include "troposign/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace troposign::io {

namespace {

const std::string kOminus = "⊖";
const std::string kBullet = "•";

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }
bool ends_with(const std::string& s, const std::string& p) {
  return s.size() >= p.size() && s.compare(s.size() - p.size(), p.size(), p) == 0;
}

std::string number_text(const Json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
  // Floats go through their shortest round-trip decimal form.
  return j.dump();
}

const Json& unwrap(const Json& j, const char* key) {
  if (j.is_object()) {
    if (!j.contains(key)) throw Error(std::string("expected an array or an object with \"") + key + "\"");
    return j.at(key);
  }
  return j;
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw Error(std::string(what) + " must be a positive 1-based index");
  }
  return static_cast<std::size_t>(j.get<long long>() - 1);
}

template <class T, class F>
std::vector<T> array_of(const Json& j, F convert, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be a JSON array");
  std::vector<T> out;
  for (const auto& e : j) out.push_back(convert(e));
  return out;
}

template <class T, class F>
Matrix<T> matrix_of(const Json& j, F convert) {
  const Json& rows = unwrap(j, "matrix");
  if (!rows.is_array()) throw Error("matrix must be an array of rows");
  std::vector<std::vector<T>> data;
  for (const auto& r : rows) data.push_back(array_of<T>(r, convert, "matrix row"));
  return Matrix<T>::from_rows(data);
}

ConeViolation::Kind kind_from_name(const std::string& s) {
  for (auto k : {ConeViolation::Kind::symmetry, ConeViolation::Kind::diagonal, ConeViolation::Kind::offdiagonal})
    if (s == kind_name(k)) return k;
  throw Error("unknown violation kind '" + s + "'");
}

Json form_to_json(const QuadForm& f) {
  Json q = Json::array();
  for (const auto& t : f.quadratic) q.push_back({{"i", t.i + 1}, {"j", t.j + 1}, {"c", to_json(t.coeff)}});
  Json l = Json::array();
  for (const auto& t : f.linear) l.push_back({{"i", t.i + 1}, {"c", to_json(t.coeff)}});
  return {{"quadratic", q}, {"linear", l}, {"constant", to_json(f.constant)}};
}

QuadForm form_from_json(const Json& j) {
  QuadForm f;
  for (const auto& t : j.value("quadratic", Json::array()))
    f.quadratic.push_back(
        {index_from_json(t.at("i"), "i"), index_from_json(t.at("j"), "j"), signed_from_json(t.at("c"))});
  for (const auto& t : j.value("linear", Json::array()))
    f.linear.push_back({index_from_json(t.at("i"), "i"), signed_from_json(t.at("c"))});
  if (j.contains("constant")) f.constant = signed_from_json(j.at("constant"));
  return f;
}

}  // namespace

std::string decimal_string(const Rational& q) {
  mpz_class den = q.get_den();
  long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return to_string(q);
  const long digits = std::max(twos, fives);
  if (digits == 0) return q.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class scaled = q.get_num() * scale / q.get_den();
  std::string body = mpz_class(abs(scaled)).get_str();
  if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return (scaled < 0 ? "-" : "") + body;
}

Json to_json(const Rational& q) { return decimal_string(q); }

Json to_json(const TropNum& x) { return x.is_neg_inf() ? Json("-inf") : Json(decimal_string(x.value())); }

Json to_json(const SignedTrop& x) {
  switch (x.sign()) {
    case Sign::zero: return {{"s", "z"}};
    case Sign::positive: return {{"s", "+"}, {"m", decimal_string(x.magnitude())}};
    case Sign::negative: return {{"s", "-"}, {"m", decimal_string(x.magnitude())}};
    case Sign::balanced: return {{"s", "o"}, {"m", decimal_string(x.magnitude())}};
    case Sign::top: return {{"s", "top"}};
    case Sign::bot: return {{"s", "bot"}};
  }
  return nullptr;
}

Json to_json(const TropVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const SignedVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const TropMat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const SignedMat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const SignedPair& p) { return {{"plus", to_json(p.plus)}, {"minus", to_json(p.minus)}}; }

Json to_json(const ConeVerdict& v) {
  Json cert = std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ConeViolation>) {
          return {{"type", "violation"},   {"kind", kind_name(c.kind)}, {"i", c.i + 1},
                  {"j", c.j + 1},          {"inequality", c.inequality}, {"lhs", to_json(c.lhs)},
                  {"rhs", to_json(c.rhs)}};
        } else if constexpr (std::is_same_v<T, GramFactor>) {
          return {{"type", "gram"}, {"y", to_json(c.y)}};
        } else if constexpr (std::is_same_v<T, CpsdFactor>) {
          Json blocks = Json::array();
          for (const auto& b : c.blocks) blocks.push_back(to_json(b));
          return {{"type", "cpsd"}, {"blocks", blocks}};
        } else {
          return {{"type", "inequalities"}, {"checked", c.checked}};
        }
      },
      v.certificate);
  return {{"member", v.member}, {"certificate", cert}};
}

Json to_json(const OptResult& r, const std::vector<SignedTrop>& roots) {
  Json j = {{"value", to_json(r.value)}, {"attainment", r.describe()}, {"kind", attainment_name(r.attainment)}};
  j["point"] = r.point ? to_json(*r.point) : Json(nullptr);
  j["side"] = r.side ? Json(side_name(*r.side)) : Json(nullptr);
  j["roots"] = to_json(roots);
  return j;
}

Json to_json(const QuadSolution& s) {
  return {{"value", to_json(s.value)},
          {"xbar", to_json(s.xbar)},
          {"xstar", s.xstar ? to_json(*s.xstar) : Json(nullptr)},
          {"det", to_json(s.det)},
          {"com_t_b", to_json(s.com_t_b)}};
}

Json to_json(const CopositiveQp& q) {
  return {{"value", to_json(q.value)},
          {"bounded", !q.witness.has_value()},
          {"witness", q.witness ? to_json(*q.witness) : Json(nullptr)},
          {"witness_value", q.witness ? to_json(q.witness_value) : Json(nullptr)}};
}

Json to_json(const QuadSystem& sys) {
  Json cs = Json::array();
  for (const auto& c : sys.constraints) {
    Json e = form_to_json(c.f);
    e["relation"] = relation_symbol(c.relation);
    e["tag"] = c.tag;
    cs.push_back(std::move(e));
  }
  return {{"num_vars", sys.num_vars}, {"var_names", sys.var_names}, {"constraints", cs}};
}

Json to_json(const Feasibility& f, const QuadSystem& sys) {
  Json j = {{"feasible", f.feasible}, {"nodes", f.nodes}};
  if (f.witness) {
    Json w = Json::object();
    for (std::size_t i = 0; i < f.witness->size(); ++i) {
      const std::string name = i < sys.var_names.size() ? sys.var_names[i] : "v" + std::to_string(i + 1);
      w[name] = to_json((*f.witness)[i]);
    }
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const VerifyReport& r) {
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) ce.push_back({{"check", c.check}, {"description", c.description}});
  return {{"status", r.status},
          {"checked", r.checked},
          {"counterexamples", ce},
          {"retried", r.retried},
          {"notes", r.notes}};
}

Json to_json(const BendReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json inputs = Json::array();
    for (const auto& p : v.inputs) inputs.push_back(to_json(p));
    Json e = {{"axiom", v.axiom}, {"inputs", inputs}, {"result", to_json(v.result)}};
    e["lambda"] = v.lambda ? to_json(*v.lambda) : Json(nullptr);
    e["index"] = v.index ? Json(*v.index + 1) : Json(nullptr);
    vs.push_back(std::move(e));
  }
  return {{"consistent", r.consistent}, {"samples", r.samples_run}, {"violations", vs}};
}

Json to_json(const LiftedPsd& l) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < l.matrix.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < l.matrix.cols(); ++j) r.push_back(decimal_string(l.matrix(i, j)));
    rows.push_back(std::move(r));
  }
  return {{"status", "psd"}, {"t", decimal_string(l.t)}, {"retried", l.retried}, {"matrix", rows}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number()) return parse_rational(number_text(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("expected a rational number, got " + j.dump());
}

TropNum trop_from_json(const Json& j) {
  if (j.is_null()) return TropNum::neg_inf();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "-inf" || s == "−∞" || s == "-∞" || s == "𝟘") return TropNum::neg_inf();
    return TropNum(parse_rational(s));
  }
  if (j.is_number()) return TropNum(rational_from_json(j));
  if (j.is_object()) {
    const SignedTrop s = signed_from_json(j);
    if (s.is_zero()) return TropNum::neg_inf();
    if (s.sign() != Sign::positive) throw Error("tropical entry must be positive, got " + to_string(s));
    return TropNum(s.magnitude());
  }
  throw Error("expected a tropical number, got " + j.dump());
}

SignedTrop parse_signed(const std::string& text) {
  std::string s = text;
  if (s == "𝟘" || s == "zero" || s == "-inf" || s == "−∞") return SignedTrop::zero();
  if (s == "⊤" || s == "top") return SignedTrop::top();
  if (s == "⊥" || s == "bot") return SignedTrop::bot();
  if (ends_with(s, kBullet)) return SignedTrop::bal(parse_rational(s.substr(0, s.size() - kBullet.size())));
  if (starts_with(s, kOminus)) return SignedTrop::neg(parse_rational(s.substr(kOminus.size())));
  return SignedTrop::pos(parse_rational(s));
}

SignedTrop signed_from_json(const Json& j) {
  if (j.is_number()) return SignedTrop::pos(rational_from_json(j));
  if (j.is_string()) return parse_signed(j.get<std::string>());
  if (!j.is_object() || !j.contains("s")) throw Error("expected a signed scalar, got " + j.dump());
  const auto s = j.at("s").get<std::string>();
  auto mag = [&]() {
    if (!j.contains("m")) throw Error("signed scalar '" + s + "' needs a magnitude \"m\"");
    return trop_from_json(j.at("m"));
  };
  if (s == "z") return SignedTrop::zero();
  if (s == "+") return SignedTrop::pos(mag());
  if (s == "-") return SignedTrop::neg(mag());
  if (s == "o") {
    const TropNum m = mag();
    return m.is_neg_inf() ? SignedTrop::zero() : SignedTrop::bal(m.value());
  }
  if (s == "top") return SignedTrop::top();
  if (s == "bot") return SignedTrop::bot();
  throw Error("unknown sign '" + s + "'");
}

TropVec trop_vec_from_json(const Json& j) { return array_of<TropNum>(j, trop_from_json, "vector"); }

SignedVec signed_vec_from_json(const Json& j) { return array_of<SignedTrop>(j, signed_from_json, "vector"); }

SignedMat signed_mat_from_json(const Json& j) { return matrix_of<SignedTrop>(j, signed_from_json); }

TropMat trop_mat_from_json(const Json& j) { return matrix_of<TropNum>(j, trop_from_json); }

SignedPair pair_from_json(const Json& j) {
  if (j.is_array()) return pair_from_signed(signed_vec_from_json(j));
  if (!j.is_object() || !j.contains("plus") || !j.contains("minus")) {
    throw Error("expected a pair {\"plus\": [...], \"minus\": [...]}");
  }
  SignedPair p{trop_vec_from_json(j.at("plus")), trop_vec_from_json(j.at("minus"))};
  if (p.plus.size() != p.minus.size()) throw Error("pair components differ in length");
  return p;
}

FinitePointSet point_set_from_json(const Json& j) {
  const Json& pts = unwrap(j, "points");
  return FinitePointSet(array_of<TropVec>(pts, trop_vec_from_json, "point set"));
}

FinitePairSet pair_set_from_json(const Json& j) {
  const Json& ps = unwrap(j, "pairs");
  auto pairs = array_of<SignedPair>(ps, pair_from_json, "pair set");
  if (pairs.empty()) {
    if (!j.is_object() || !j.contains("dim")) throw Error("an empty pair set needs \"dim\"");
    return FinitePairSet(j.at("dim").get<std::size_t>(), {});
  }
  const std::size_t dim = pairs.front().dim();
  return FinitePairSet(dim, std::move(pairs));
}

ConeVerdict verdict_from_json(const Json& j) {
  const bool member = j.at("member").get<bool>();
  const Json& c = j.at("certificate");
  const auto type = c.at("type").get<std::string>();
  if (type == "violation") {
    return {member, ConeViolation{kind_from_name(c.at("kind").get<std::string>()), index_from_json(c.at("i"), "i"),
                                  index_from_json(c.at("j"), "j"), c.at("inequality").get<std::string>(),
                                  signed_from_json(c.at("lhs")), signed_from_json(c.at("rhs"))}};
  }
  if (type == "gram") return {member, GramFactor{trop_mat_from_json(c.at("y"))}};
  if (type == "cpsd") {
    CpsdFactor f;
    for (const auto& b : c.at("blocks")) f.blocks.push_back(trop_mat_from_json(b));
    return {member, std::move(f)};
  }
  if (type == "inequalities") return {member, InequalitiesHold{c.at("checked").get<std::size_t>()}};
  throw Error("unknown certificate type '" + type + "'");
}

SignedPoly poly_from_json(const Json& j) { return SignedPoly(signed_vec_from_json(unwrap(j, "coeffs"))); }

OptResult opt_result_from_json(const Json& j) {
  OptResult r;
  r.value = signed_from_json(j.at("value"));
  const auto kind = j.at("kind").get<std::string>();
  bool found = false;
  for (auto a : {Attainment::attained_at, Attainment::one_sided_limit_at, Attainment::unbounded,
                 Attainment::at_zero})
    if (kind == attainment_name(a)) {
      r.attainment = a;
      found = true;
    }
  if (!found) throw Error("unknown attainment kind '" + kind + "'");
  if (j.contains("point") && !j.at("point").is_null()) r.point = signed_from_json(j.at("point"));
  if (j.contains("side") && !j.at("side").is_null()) {
    const auto s = j.at("side").get<std::string>();
    if (s != "left" && s != "right") throw Error("unknown side '" + s + "'");
    r.side = s == "left" ? Side::left : Side::right;
  }
  return r;
}

QuadProblem quad_problem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("b")) throw Error("quadratic problem needs \"A\" and \"b\"");
  return {signed_mat_from_json(j.at("A")), signed_vec_from_json(j.at("b"))};
}

QuadSolution quad_solution_from_json(const Json& j) {
  QuadSolution s;
  s.value = signed_from_json(j.at("value"));
  s.xbar = signed_vec_from_json(j.at("xbar"));
  if (!j.at("xstar").is_null()) s.xstar = signed_vec_from_json(j.at("xstar"));
  s.det = signed_from_json(j.at("det"));
  s.com_t_b = signed_vec_from_json(j.at("com_t_b"));
  return s;
}

QuadSystem quad_system_from_json(const Json& j) {
  QuadSystem sys;
  sys.num_vars = j.at("num_vars").get<std::size_t>();
  if (j.contains("var_names")) sys.var_names = j.at("var_names").get<std::vector<std::string>>();
  for (const auto& c : j.at("constraints")) {
    QuadConstraint qc{form_from_json(c), parse_relation(c.at("relation").get<std::string>()),
                      c.value("tag", std::string())};
    if (qc.f.max_index() >= static_cast<long>(sys.num_vars)) {
      throw Error("constraint '" + qc.tag + "' references a variable beyond num_vars");
    }
    sys.constraints.push_back(std::move(qc));
  }
  return sys;
}

VerifyReport verify_report_from_json(const Json& j) {
  VerifyReport r;
  r.status = j.at("status").get<std::string>();
  r.checked = j.at("checked").get<std::size_t>();
  for (const auto& c : j.at("counterexamples"))
    r.counterexamples.push_back({c.at("check").get<std::string>(), c.at("description").get<std::string>()});
  r.retried = j.value("retried", false);
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace troposign::io
