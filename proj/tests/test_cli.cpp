#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

const std::string kCli = GERMKIT_CLI_PATH;
const std::string kCorpus = GERMKIT_CORPUS_DIR;

int run(const std::string& args) {
  std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp(const std::string& name) { return "cli_test_" + name; }

} // namespace

TEST_CASE("tower-set on the cusp exits 0 with a three-stage tower") {
  std::string out = tmp("cusp.json");
  REQUIRE(run("tower-set --input " + kCorpus + "/set_cusp.json --output " + out) == 0);
  json t = json::parse(slurp(out));
  CHECK(t.at("mode") == "set");
  CHECK(t.at("stages").size() == 3);
  CHECK(t.at("stages")[1].at("j") == 1);
  CHECK(t.at("stages")[2].at("p") == 0);
}

TEST_CASE("output is byte-identical across runs") {
  for (std::string name : {"set_cusp", "fn_square", "eis_geometric", "descent_sqrt2"}) {
    std::string cmd = name.rfind("set_", 0) == 0      ? "tower-set"
                      : name.rfind("fn_", 0) == 0     ? "tower-fn"
                      : name.rfind("eis_", 0) == 0    ? "eisenstein"
                                                      : "descent";
    std::string a = tmp(name + "_a.json"), b = tmp(name + "_b.json");
    REQUIRE(run(cmd + " --input " + kCorpus + "/" + name + ".json --output " + a) == 0);
    REQUIRE(run(cmd + " --input " + kCorpus + "/" + name + ".json --output " + b) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());
  }
}

TEST_CASE("roundtrip holds on produced output") {
  std::string out = tmp("round_in.json");
  REQUIRE(run("tower-set --input " + kCorpus + "/set_lines.json --output " + out) == 0);
  std::string rt = tmp("round_stdout.json");
  std::string cmd = kCli + " roundtrip --input " + out + " > " + rt + " 2>/dev/null";
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  json verdict = json::parse(slurp(rt));
  CHECK(verdict.at("roundtrip") == true);

  // hand-scrambled whitespace is not canonical; normalized form is emitted
  std::string scrambled = tmp("scrambled.json");
  {
    std::ofstream f(scrambled);
    f << "{\"b\":1,   \"a\":2}";
  }
  std::string norm = tmp("normalized.json");
  cmd = kCli + " roundtrip --input " + scrambled + " --output " + norm + " > " + rt +
        " 2>/dev/null";
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(json::parse(slurp(rt)).at("roundtrip") == false);
  CHECK(json::parse(slurp(norm)) == json::parse(slurp(scrambled)));
}

TEST_CASE("inconsistent seed maps to exit 2 with DivisibilityFailure") {
  std::string out = tmp("bad_seed.json");
  CHECK(run("eisenstein --input " + kCorpus + "/eis_bad_seed.json --output " + out) == 2);
  json err = json::parse(slurp(out));
  CHECK(err.at("error").at("kind") == "DivisibilityFailure");
}

TEST_CASE("malformed expression maps to exit 1") {
  CHECK(run("prepare --input " + kCorpus + "/malformed.json") == 1);
  CHECK(run("prepare --input does_not_exist.json") == 1);

  std::string empty = tmp("empty.json");
  { std::ofstream f(empty); }
  CHECK(run("roundtrip --input " + empty) == 1);
}

TEST_CASE("budget exhaustion maps to exit 2") {
  std::string out = tmp("budget.json");
  CHECK(run("tower-set --input " + kCorpus + "/set_cusp.json --trunc 3 --output " + out) == 2);
  json err = json::parse(slurp(out));
  CHECK(err.at("error").at("kind") == "TruncationBudgetExhausted");
}

TEST_CASE("descent corpus job reports reassembly and Vandermonde") {
  std::string out = tmp("descent.json");
  REQUIRE(run("descent --input " + kCorpus + "/descent_sqrt2.json --output " + out) == 0);
  json res = json::parse(slurp(out));
  CHECK(res.at("vandermonde") == true);
  CHECK(res.at("reassembles") == true);
  CHECK(res.at("components").size() == 2);
}

TEST_CASE("branch corpus job expands the square root") {
  std::string out = tmp("branch.json");
  REQUIRE(run("branch --input " + kCorpus + "/branch_sqrt.json --output " + out) == 0);
  json res = json::parse(slurp(out));
  const auto& terms = res.at("series").at("terms");
  REQUIRE(terms.size() >= 4);
  CHECK(terms[0].at("c") == "1");
  CHECK(terms[1].at("c") == "1/2");
  CHECK(terms[2].at("c") == "-1/8");
  CHECK(terms[3].at("c") == "1/16");
}

TEST_CASE("prepare and disc corpus jobs") {
  std::string out = tmp("prep.json");
  REQUIRE(run("prepare --input " + kCorpus + "/prepare_cusp.json --output " + out) == 0);
  json prep = json::parse(slurp(out));
  CHECK(prep.at("poly").at("degree") == 2);
  CHECK(prep.at("valid_to") == 10);

  std::string dout = tmp("disc.json");
  REQUIRE(run("disc --input " + kCorpus + "/disc_cusp.json --output " + dout) == 0);
  json disc = json::parse(slurp(dout));
  CHECK(disc.at("record").at("j") == 1);
}

TEST_CASE("verify command replays a tower and an extraction") {
  std::string tower = tmp("verify_tower.json");
  REQUIRE(run("tower-fn --input " + kCorpus + "/fn_square.json --output " + tower) == 0);
  json combined;
  combined["kind"] = "tower-fn";
  combined["input"] = json::parse(slurp(kCorpus + "/fn_square.json"));
  combined["result"] = json::parse(slurp(tower));
  std::string vin = tmp("verify_in.json");
  {
    std::ofstream f(vin);
    f << combined.dump(2) << "\n";
  }
  std::string vout = tmp("verify_out.json");
  REQUIRE(run("verify --input " + vin + " --output " + vout) == 0);
  CHECK(json::parse(slurp(vout)).at("ok") == true);

  std::string eis = tmp("verify_eis.json");
  REQUIRE(run("eisenstein --input " + kCorpus + "/eis_sqrt.json --output " + eis) == 0);
  json ce;
  ce["kind"] = "eisenstein";
  ce["input"] = json::parse(slurp(kCorpus + "/eis_sqrt.json"));
  ce["result"] = json::parse(slurp(eis));
  std::string evin = tmp("verify_eis_in.json");
  {
    std::ofstream f(evin);
    f << ce.dump(2) << "\n";
  }
  std::string evout = tmp("verify_eis_out.json");
  REQUIRE(run("verify --input " + evin + " --check-degree 8 --output " + evout) == 0);
  CHECK(json::parse(slurp(evout)).at("ok") == true);
}
