#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "semicomm/cli.hpp"
#include "semicomm/constructions.hpp"
#include "semicomm/json_io.hpp"
#include "semicomm/search.hpp"

using namespace semicomm;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / fs::path("semicomm-test-" + unique())) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream f(p);
    f << content;
    return p.string();
  }
  fs::path dir() const { return path_; }

 private:
  static std::string unique() {
    static int counter = 0;
    return std::to_string(++counter) + "-" + std::to_string(::getpid());
  }
  fs::path path_;
};

std::string gerstenhaber_pair_file(const TempDir& tmp, Index n) {
  const auto [a, b] = gerstenhaber_witness(n);
  return tmp.file("pair.json", pair_to_json(MatrixPair{a, b}).dump());
}

}  // namespace

TEST_CASE("dim on a gerstenhaber pair prints the triangular dimension") {
  TempDir tmp;
  const CliRun r = run({"dim", gerstenhaber_pair_file(tmp, 3)});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim = 6") != std::string::npos);
  CHECK(r.out.find("basis words: 1 A B") != std::string::npos);
}

TEST_CASE("dim rejects a non-square matrix with exit 2") {
  TempDir tmp;
  const std::string path = tmp.file(
      "bad.json", json{{"A", matrix_to_json(make_matrix({{1, 2, 3}, {4, 5, 6}}))},
                       {"B", matrix_to_json(identity(2))}}
                      .dump());
  const CliRun r = run({"dim", path});
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("dim reports the offending entry of malformed JSON") {
  TempDir tmp;
  json j = pair_to_json(MatrixPair{identity(2), identity(2)});
  j["A"]["entries"][0][1] = "x";
  const std::string path = tmp.file("bad.json", j.dump());
  const CliRun r = run({"dim", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("entry (0,1)") != std::string::npos);
  CHECK(r.err.find(path) != std::string::npos);
}

TEST_CASE("dim accepts a generator array of any length") {
  TempDir tmp;
  const json gens = json::array({matrix_to_json(cycle(3)), matrix_to_json(jordan_block(3)),
                                 matrix_to_json(identity(3))});
  const CliRun r = run({"dim", tmp.file("gens.json", gens.dump())});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim = 9") != std::string::npos);  // cycle + shift generate everything

  const CliRun empty = run({"dim", tmp.file("none.json", "[]")});
  CHECK(empty.code == 0);  // no generators: the unital algebra is span{I}
  CHECK(empty.out.find("dim = 1") != std::string::npos);
}

TEST_CASE("analyze handles pairs outside the positive cone") {
  TempDir tmp;
  const json j = pair_to_json(MatrixPair{make_matrix({{0, 1}, {-1, 0}}), identity(2)});
  const std::string path = tmp.file("mixed.json", j.dump());
  const CliRun r = run({"analyze", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("ideal-irreducible=n/a") != std::string::npos);
  CHECK(r.out.find("chain and refined bound n/a") != std::string::npos);

  const CliRun rj = run({"--json", "analyze", path});
  const json report = json::parse(rj.out);
  CHECK(report["A_ideal_irreducible"].is_null());
  CHECK(report["refined_bound"].is_null());
}

TEST_CASE("dim --json emits a machine-readable report") {
  TempDir tmp;
  const CliRun r = run({"--json", "dim", gerstenhaber_pair_file(tmp, 2), "--basis"});
  CHECK(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report["dim"] == 3);
  CHECK(report["basis_words"].size() == 3);
  // Every dumped basis matrix is re-readable.
  for (const auto& m : report["basis"]) (void)matrix_from_json(m, "basis");
}

TEST_CASE("analyze prints the order report") {
  TempDir tmp;
  const CliRun r = run({"analyze", gerstenhaber_pair_file(tmp, 3)});
  CHECK(r.code == 0);
  CHECK(r.out.find("sign=Positive") != std::string::npos);
  CHECK(r.out.find("semi-commuting") != std::string::npos);
  CHECK(r.out.find("chain-blocks=[1, 1, 1]") != std::string::npos);
  CHECK(r.out.find("refined dimension bound: 6") != std::string::npos);

  const CliRun rj = run({"--json", "analyze", gerstenhaber_pair_file(tmp, 3)});
  const json report = json::parse(rj.out);
  CHECK(report["refined_bound"] == 6);
  CHECK(report["A_ideal_irreducible"] == false);
}

TEST_CASE("construct emits parseable matrices for every name") {
  const CliRun jordan = run({"construct", "jordan", "--n", "4"});
  CHECK(jordan.code == 0);
  CHECK(exactly_equal(matrix_from_json(json::parse(jordan.out), "jordan"), jordan_block(4)));

  const CliRun cyc = run({"construct", "cycle", "--n", "5"});
  CHECK(exactly_equal(matrix_from_json(json::parse(cyc.out), "cycle"), cycle(5)));

  const CliRun comp = run({"construct", "companion", "--coeffs", "0", "1/2", "3"});
  CompanionSpec spec;
  spec.coefficients = {Rational(0), Rational(1, 2), Rational(3)};
  CHECK(exactly_equal(matrix_from_json(json::parse(comp.out), "companion"), companion(spec)));

  const CliRun perm = run({"construct", "permutation", "--sizes", "2", "3"});
  CHECK(exactly_equal(matrix_from_json(json::parse(perm.out), "perm"),
                      permutation_from_cycle_type({2, 3})));

  const CliRun gw = run({"construct", "gerstenhaber", "--n", "3"});
  const MatrixPair pair = pair_from_json(json::parse(gw.out));
  CHECK(exactly_equal(pair.a, jordan_block(3)));

  const CliRun inter = run({"construct", "intertwiners", "--m", "4", "--n", "6"});
  CHECK(json::parse(inter.out).size() == 2);

  const CliRun idem7 = run({"construct", "idem7"});
  CHECK(pair_from_json(json::parse(idem7.out)).a.rows() == 7);

  const CliRun idem3 = run({"construct", "idem3"});
  CHECK(pair_from_json(json::parse(idem3.out)).a.rows() == 3);

  const CliRun cat = run({"construct", "catalan", "--n", "4"});
  const MatrixPair catp = pair_from_json(json::parse(cat.out));
  CHECK(exactly_equal(catp.b, catalan_idempotent_pair(4).f));
}

TEST_CASE("construct random-pair requires a seed and is reproducible") {
  CHECK(run({"construct", "random-pair", "--n", "3", "--family", "diag_dominated"}).code == 2);
  const CliRun a = run({"construct", "random-pair", "--n", "3", "--family", "diag_dominated",
                        "--seed", "9"});
  const CliRun b = run({"construct", "random-pair", "--n", "3", "--family", "diag_dominated",
                        "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"construct", "random-pair", "--n", "3", "--family", "nope", "--seed", "1"}).code ==
        2);
}

TEST_CASE("verify single instance via file") {
  TempDir tmp;
  const IdempotentPair p = idempotent_pair_7x7();
  const std::string path =
      tmp.file("idem7.json",
               json{{"E", matrix_to_json(p.e)}, {"F", matrix_to_json(p.f)}}.dump());
  const CliRun r = run({"verify", "--theorem", "THM_6_6", "--instance", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("THM_6_6: holds") != std::string::npos);
  CHECK(r.out.find("dim = 9") != std::string::npos);

  const CliRun rj = run({"--json", "verify", "--theorem", "THM_6_6", "--instance", path});
  const json report = json::parse(rj.out);
  CHECK(report["outcome"] == "holds");
}

TEST_CASE("verify requires usable arguments") {
  TempDir tmp;
  const std::string path = tmp.file("x.json", "{}");
  CHECK(run({"verify", "--instance", path}).code == 2);                      // no theorem
  CHECK(run({"verify", "--theorem", "NOPE", "--instance", path}).code == 2);  // bad id
  CHECK(run({"verify"}).code == 2);                                          // suite needs seed
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("verify suite prints a table and exits 0 without violations") {
  const CliRun r = run({"verify", "--n-max", "2", "--trials", "3", "--seed", "21"});
  CHECK(r.code == 0);
  CHECK(r.out.find("THM_3_3") != std::string::npos);
  CHECK(r.out.find("violations: 0") != std::string::npos);

  const CliRun again = run({"verify", "--n-max", "2", "--trials", "3", "--seed", "21"});
  CHECK(again.out == r.out);  // byte-identical repeat
}

TEST_CASE("search dims writes replayable witness files") {
  TempDir tmp;
  const std::string out_dir = (tmp.dir() / "witnesses").string();
  const CliRun r = run({"search", "dims", "--n", "2", "--trials", "200", "--seed", "7",
                        "--out", out_dir});
  CHECK(r.code == 0);
  CHECK(r.out.find("attained dimensions:") != std::string::npos);
  bool found_any = false;
  for (const auto& entry : fs::directory_iterator(out_dir)) {
    std::ifstream f(entry.path());
    json j;
    f >> j;
    const Witness w = Witness::from_json(j);
    CHECK(w.replays());
    found_any = true;
  }
  CHECK(found_any);
}

TEST_CASE("search idem-even reports the open-question framing") {
  const CliRun r = run({"search", "idem-even", "--n", "2", "--trials", "60", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("max dimension found:") != std::string::npos);
  CHECK(r.out.find("stays open") != std::string::npos);
  CHECK(run({"search", "idem-even", "--n", "3", "--trials", "5", "--seed", "1"}).code == 2);
}

TEST_CASE("search requires explicit seeds") {
  CHECK(run({"search", "dims", "--n", "2", "--trials", "10"}).code == 2);
  CHECK(run({"search", "idem-even", "--n", "2", "--trials", "10"}).code == 2);
}
