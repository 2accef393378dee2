#include <filesystem>
#include <fstream>
#include <sstream>

#include "troposign/cli.hpp"
#include "troposign/json_io.hpp"

namespace troposign::cli {

namespace {

using io::Json;

constexpr std::size_t kMaxAttempts = 10000;

std::string numbered(const std::string& kind, std::size_t k, const char* ext) {
  std::ostringstream os;
  os << kind << "_";
  os.width(4);
  os.fill('0');
  os << (k + 1) << ext;
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << text;
}

SignedMat random_matrix_for(const std::string& kind, std::size_t n, Rng& rng, const Grid& g) {
  if (kind == "cp") return embed_positive(random_symmetric_trop(rng, n, g));
  SignedMat m = random_symmetric_signed(rng, n, g);
  // Nonnegative diagonals make members reachable by rejection.
  for (std::size_t i = 0; i < n; ++i)
    if (m(i, i).sign() == Sign::negative) m(i, i) = SignedTrop::pos(m(i, i).magnitude());
  return m;
}

Cone cone_for(const std::string& kind) {
  if (kind == "psd") return Cone::psd_signed;
  if (kind == "cp") return Cone::cp;
  return Cone::copositive;
}

Cnf random_cnf(std::size_t m, Rng& rng) {
  Cnf cnf;
  cnf.num_vars = static_cast<int>(m);
  const std::size_t clauses = std::min<std::size_t>(15, (43 * m + 5) / 10);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::array<int, 3> cl{};
    for (std::size_t k = 0; k < 3; ++k) {
      int v = 0;
      bool fresh = false;
      while (!fresh) {
        v = static_cast<int>(rng.uniform(1, static_cast<long>(m)));
        fresh = true;
        for (std::size_t p = 0; p < k; ++p)
          if (std::abs(cl[p]) == v) fresh = false;
      }
      cl[k] = rng.chance(1, 2) ? v : -v;
    }
    cnf.clauses.push_back(cl);
  }
  return cnf;
}

}  // namespace

std::vector<std::string> gen_corpus(const CorpusSpec& spec) {
  const bool sat = spec.kind == "sat";
  if (sat ? (spec.n < 3 || spec.n > 20) : (spec.n < 1 || spec.n > 6)) {
    throw Error(sat ? "sat corpus needs 3 <= n <= 20 variables" : "corpus dimension must lie in 1..6");
  }
  if (spec.kind != "psd" && spec.kind != "cp" && spec.kind != "copositive" && spec.kind != "polar" && !sat) {
    throw Error("unknown corpus kind '" + spec.kind + "'");
  }
  const std::filesystem::path dir(spec.out_dir);
  std::filesystem::create_directories(dir);

  Rng rng(spec.seed);
  const Grid grid;
  std::vector<std::string> files;
  Json entries = Json::array();
  for (std::size_t k = 0; k < spec.count; ++k) {
    Json entry;
    if (sat) {
      const Cnf cnf = random_cnf(spec.n, rng);
      std::vector<bool> witness;
      const bool satisfiable = cnf_satisfiable(cnf, &witness);
      std::ostringstream os;
      write_dimacs(os, cnf, std::string("satisfiable: ") + (satisfiable ? "yes" : "no"));
      const std::string name = numbered("sat", k, ".cnf");
      write_text(dir / name, os.str());
      entry = {{"file", name}, {"satisfiable", satisfiable}};
      if (satisfiable) {
        Json w = Json::array();
        for (bool b : witness) w.push_back(b);
        entry["witness"] = w;
      }
      files.push_back(name);
    } else if (spec.kind == "polar") {
      std::vector<TropVec> pts;
      const std::size_t m = 1 + rng.index(3);
      for (std::size_t p = 0; p < m; ++p) pts.push_back(random_trop_vec(rng, spec.n, grid));
      const FinitePointSet a(pts);
      const auto members = sample_polar_members(a, 5, grid, rng);
      Json pj = Json::array();
      for (const auto& p : pts) pj.push_back(io::to_json(p));
      Json mj = Json::array();
      for (const auto& x : members) mj.push_back(io::to_json(x));
      const std::string name = numbered("polar", k, ".json");
      const Json doc = {{"kind", "polar"}, {"n", spec.n}, {"points", pj}, {"members", mj}};
      write_text(dir / name, doc.dump(2) + "\n");
      entry = {{"file", name}, {"members", members.size()}};
      files.push_back(name);
    } else {
      const bool want = k % 2 == 0;
      const Cone cone = cone_for(spec.kind);
      SignedMat m = random_matrix_for(spec.kind, spec.n, rng, grid);
      ConeVerdict v = check_cone(cone, m);
      for (std::size_t attempt = 1; attempt < kMaxAttempts && v.member != want; ++attempt) {
        m = random_matrix_for(spec.kind, spec.n, rng, grid);
        v = check_cone(cone, m);
      }
      const std::string name = numbered(spec.kind, k, ".json");
      Json doc = {{"kind", spec.kind}, {"cone", cone_name(cone)}, {"n", spec.n}, {"matrix", io::to_json(m)}};
      const Json verdict = io::to_json(v);
      doc["member"] = verdict["member"];
      doc["certificate"] = verdict["certificate"];
      write_text(dir / name, doc.dump(2) + "\n");
      entry = {{"file", name}, {"member", v.member}};
      files.push_back(name);
    }
    entries.push_back(std::move(entry));
  }
  const Json manifest = {{"kind", spec.kind}, {"n", spec.n},           {"count", spec.count},
                         {"seed", spec.seed}, {"entries", entries}};
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
  files.push_back("manifest.json");
  return files;
}

std::string plot_poly_tsv(const SignedPoly& f, const Rational& lo, const Rational& hi, const Rational& step) {
  if (step <= 0) throw Error("plot step must be positive");
  if (lo > hi) throw Error("plot range is empty");
  if ((hi - lo) / step > 100000) throw Error("plot grid too large");
  std::vector<Rational> mags;
  for (Rational m = lo; m <= hi; m += step) mags.push_back(m);

  std::vector<SignedTrop> xs;
  for (auto it = mags.rbegin(); it != mags.rend(); ++it) xs.push_back(SignedTrop::neg(*it));
  xs.push_back(SignedTrop::zero());
  for (const auto& m : mags) xs.push_back(SignedTrop::pos(m));

  auto mag_text = [](const SignedTrop& v) { return v.has_magnitude() ? to_string(v.magnitude()) : "-inf"; };
  std::ostringstream os;
  os << "x\tx_sign\tx_mag\tfx\tfx_sign\tfx_mag\tdominant\n";
  for (const auto& x : xs) {
    const SignedTrop fx = eval_poly(f, x);
    const auto dom = dominant_degrees(f, x);
    std::string d;
    for (std::size_t k : dom) d += (d.empty() ? "" : ",") + std::to_string(k);
    os << to_string(x) << '\t' << sign_name(x.sign()) << '\t' << mag_text(x) << '\t' << to_string(fx) << '\t'
       << sign_name(fx.sign()) << '\t' << mag_text(fx) << '\t' << (d.empty() ? "-" : d) << '\n';
  }
  return os.str();
}

}  // namespace troposign::cli
