#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "troposign/cli.hpp"
#include "troposign/json_io.hpp"

using namespace troposign;
using io::Json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "troposign");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / ("troposign_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kExPol = R"([0, 4, 4])";

}  // namespace

TEST_CASE("cone check exit codes and certificate") {
  const std::string m = write("m.json", "[[2,3],[3,2]]");
  const Result r = run_cli({"cone", "check", "--cone", "psd-signed", "--in", m});
  CHECK(r.code == cli::kFalse);
  const Json j = Json::parse(r.out);
  CHECK(j["member"] == false);
  CHECK(j["certificate"]["i"] == 1);
  CHECK(j["certificate"]["j"] == 2);
  CHECK(io::to_json(io::verdict_from_json(j)) == j);

  const std::string ok = write("ok.json", "[[2,2],[2,2]]");
  CHECK(run_cli({"cone", "check", "--cone", "cp", "--in", ok}).code == cli::kOk);
  CHECK(run_cli({"cone", "check", "--cone", "copositive", "--in", m}).code == cli::kOk);
  const Result f = run_cli({"cone", "factorize", "--in", ok});
  CHECK(f.code == cli::kOk);
  CHECK(Json::parse(f.out)["columns"] == 3);
}

TEST_CASE("input errors exit with code 2") {
  const std::string bad = write("bad.json", "[[1, 2], ");
  const Result r = run_cli({"cone", "check", "--in", bad});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("malformed JSON") != std::string::npos);
  CHECK(run_cli({"cone", "check", "--in", (scratch() / "missing.json").string()}).code == cli::kInputError);
  CHECK(run_cli({"cone", "check", "--cone", "nope", "--in", write("one.json", "[[1]]")}).code == cli::kInputError);
  CHECK(run_cli({"cone", "frobnicate"}).code == cli::kInputError);
  CHECK(run_cli({}).code == cli::kInputError);
  CHECK(run_cli({"opt", "quad", "--in", write("q.json", R"({"A": [[0,0],[0,0]], "b": [0,0]})")}).code ==
        cli::kInputError);
  CHECK(run_cli({"--help"}).code == cli::kOk);
}

TEST_CASE("opt subcommands") {
  const Result r = run_cli({"opt", "poly", "--coeffs", write("f.json", kExPol)});
  CHECK(r.code == cli::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["value"] == Json::parse(R"({"s":"-","m":"4"})"));
  CHECK(j["attainment"] == "limit at ⊖0");
  CHECK(j["roots"] == io::to_json(SignedVec{SignedTrop::neg(0), SignedTrop::neg(-4)}));

  const std::string prob = write("p.json", R"({"A": [[0, {"s":"-","m":"-1"}], [{"s":"-","m":"-1"}, 0]], "b": [0, 2]})");
  const Json q = Json::parse(run_cli({"opt", "quad", "--in", prob}).out);
  CHECK(q["xbar"] == io::to_json(SignedVec{SignedTrop::neg(0), SignedTrop::neg(2)}));
  CHECK(q["xstar"] == io::to_json(SignedVec{SignedTrop::neg(1), SignedTrop::neg(2)}));

  const Json c = Json::parse(run_cli({"opt", "copositive-qp", "--in", write("c.json", R"([[0, "⊖5"], ["⊖5", 0]])")}).out);
  CHECK(c["bounded"] == false);
}

TEST_CASE("polar subcommands") {
  const std::string a = write("a.json", R"({"points": [[0, "-inf"], ["-inf", 0]]})");
  CHECK(run_cli({"polar", "member", "--A", a, "--x", write("x.json", R"([0, "⊖1"])")}).code == cli::kFalse);
  CHECK(run_cli({"polar", "member", "--A", a, "--x", write("y.json", "[0, 1]")}).code == cli::kOk);
  const Result s = run_cli({"polar", "separate", "--A", write("s.json", "[[0, 0]]"), "--z", write("z.json", "[0, 1]")});
  CHECK(s.code == cli::kOk);
  CHECK(Json::parse(s.out)["in_hull"] == false);
  CHECK(run_cli({"polar", "separate", "--A", write("s2.json", "[[0, 0]]"), "--z", write("z2.json", "[1, 1]")}).code ==
        cli::kFalse);
  const Result ax = run_cli({"polar", "axioms", "--A", a, "--samples", "50"});
  CHECK(ax.code == cli::kOk);
  CHECK(Json::parse(ax.out)["consistent"] == true);
}

TEST_CASE("sat subcommands") {
  const std::string cnf = write("f.cnf", "p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  const Result enc = run_cli({"sat", "encode", "--cnf", cnf, "--out", (scratch() / "sys.json").string()});
  CHECK(enc.code == cli::kOk);
  const Result chk = run_cli({"sat", "check", "--system", (scratch() / "sys.json").string(), "--domain", "01"});
  CHECK(chk.code == cli::kOk);
  CHECK(Json::parse(chk.out)["feasible"] == true);
  const std::string un = write("u.cnf", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
  run_cli({"sat", "encode", "--cnf", un, "--out", (scratch() / "u.json").string()});
  CHECK(run_cli({"sat", "check", "--system", (scratch() / "u.json").string()}).code == cli::kFalse);
}

TEST_CASE("lift subcommands") {
  const Result c = run_cli({"lift", "verify-collapse", "--n", "2", "--samples", "20"});
  CHECK(c.code == cli::kOk);
  CHECK(Json::parse(c.out)["status"] == "consistent");
  const Result p = run_cli({"lift", "psd", "--in", write("l.json", "[[0, \"⊖-1\"], [\"⊖-1\", 0]]"), "--t", "10"});
  CHECK(p.code == cli::kOk);
  CHECK(Json::parse(p.out)["matrix"][0][1] == "-0.1");
  const Result v = run_cli({"lift", "verify-polar", "--A", write("la.json", "[[0, 1]]"), "--samples", "20"});
  CHECK(v.code == cli::kOk);
}

TEST_CASE("plot poly TSV") {
  const std::string f = write("pf.json", kExPol);
  const Result r = run_cli({"plot", "poly", "--coeffs", f, "--range", "-6:6", "--step", "0.25"});
  CHECK(r.code == cli::kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x\tx_sign\tx_mag\tfx\tfx_sign\tfx_mag\tdominant");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2 * 49 + 1);
  CHECK(r.out.find("⊖0\tnegative\t0\t4•\tbalanced\t4\t1,2\n") != std::string::npos);
  const Result j = run_cli({"plot", "poly", "--coeffs", f, "--range", "0:1", "--step", "1", "--format", "json"});
  CHECK(Json::parse(j.out).size() == 5);
  CHECK(run_cli({"plot", "poly", "--coeffs", f, "--range", "1:0"}).code == cli::kInputError);
}

TEST_CASE("gen corpus is deterministic") {
  const fs::path d1 = scratch() / "c1", d2 = scratch() / "c2";
  CHECK(run_cli({"gen", "corpus", "--kind", "psd", "--n", "2", "--count", "10", "--seed", "7", "--out", d1.string()})
            .code == cli::kOk);
  CHECK(run_cli({"gen", "corpus", "--kind", "psd", "--n", "2", "--count", "10", "--seed", "7", "--out", d2.string()})
            .code == cli::kOk);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(d1)) {
    ++files;
    CHECK(slurp(e.path()) == slurp(d2 / e.path().filename()));
  }
  CHECK(files == 11);
  const Json manifest = io::read_file((d1 / "manifest.json").string());
  for (const auto& e : manifest["entries"]) {
    const Json doc = io::read_file((d1 / e["file"].get<std::string>()).string());
    const ConeVerdict v = check_cone(Cone::psd_signed, io::signed_mat_from_json(doc["matrix"]));
    CHECK(v.member == e["member"].get<bool>());
  }

  const fs::path s = scratch() / "sat";
  CHECK(run_cli({"gen", "corpus", "--kind", "sat", "--n", "5", "--count", "6", "--out", s.string()}).code == cli::kOk);
  for (const auto& e : io::read_file((s / "manifest.json").string())["entries"]) {
    std::ifstream in(s / e["file"].get<std::string>());
    CHECK(cnf_satisfiable(parse_dimacs(in)) == e["satisfiable"].get<bool>());
  }

  const fs::path p = scratch() / "polar";
  CHECK(run_cli({"gen", "corpus", "--kind", "polar", "--n", "3", "--count", "4", "--out", p.string()}).code ==
        cli::kOk);
  for (const auto& e : io::read_file((p / "manifest.json").string())["entries"]) {
    const Json doc = io::read_file((p / e["file"].get<std::string>()).string());
    const FinitePointSet a = io::point_set_from_json(doc);
    for (const auto& x : doc["members"]) CHECK(polar_contains(a, io::signed_vec_from_json(x)));
  }
  CHECK(run_cli({"gen", "corpus", "--kind", "psd", "--n", "7", "--out", (scratch() / "c7").string()}).code ==
        cli::kInputError);
}

TEST_CASE("seed precedence") {
  const std::string a = write("sa.json", "[[0, 1, 2]]");
  auto report = [&](std::vector<std::string> extra) {
    std::vector<std::string> args{"lift", "verify-polar", "--A", a, "--samples", "10"};
    args.insert(args.end(), extra.begin(), extra.end());
    return run_cli(args).out;
  };
  ::unsetenv("TROPOSIGN_SEED");
  const std::string base = report({});
  CHECK(base == report({}));
  CHECK(base == report({"--seed", std::to_string(kDefaultSeed)}));
  ::setenv("TROPOSIGN_SEED", "5", 1);
  const std::string env = report({});
  CHECK(env == report({"--seed", "5"}));
  ::unsetenv("TROPOSIGN_SEED");
  CHECK(seed_from_env() == kDefaultSeed);
}

TEST_CASE("installed tool") {
  const fs::path out = scratch() / "tool.json";
  const std::string m = write("tm.json", "[[2,3],[3,2]]");
  const std::string cmd = std::string(TROPOSIGN_TOOL) + " cone check --cone psd-signed --in " + m + " > " +
                          out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 1);
  CHECK(Json::parse(slurp(out))["certificate"]["j"] == 2);
  const int bad = std::system((std::string(TROPOSIGN_TOOL) + " opt poly --coeffs /nonexistent > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(bad) == 2);
}
