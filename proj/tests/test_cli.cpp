#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ulrich/catalog.hpp"
#include "ulrich/cli.hpp"
#include "ulrich/document.hpp"

using namespace ulrich;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("info reports invariants and embeds the canonical document") {
  const auto j = run_json({"info", "--builtin", "del-pezzo-3"});
  CHECK(j["invariants"]["h2"] == 3);
  CHECK(j["invariants"]["pi"] == 1);
  CHECK(j["invariants"]["N"] == 3);
  CHECK(parse_surface(j["surface"].dump()) == del_pezzo(3));
}

TEST_CASE("convert prints the canonical text") {
  const auto r = run({"convert", "--builtin", "table1-row-4"});
  CHECK(r.code == 0);
  CHECK(r.out == serialize_surface(builtin("table1-row-4")));
}

TEST_CASE("surface documents are read from disk") {
  const std::string path = "cli_test_surface.json";
  {
    std::ofstream f(path);
    f << serialize_surface(builtin("p1xp1-2-3"));
  }
  const auto j = run_json({"enumerate", "--surface", path});
  std::remove(path.c_str());
  CHECK(j["method"] == "exact");
  REQUIRE(j["candidates"].size() == 2);
  CHECK(j["candidates"][0]["class"] == json::array({1, 5}));
  CHECK(j["candidates"][1]["class"] == json::array({3, 2}));
}

TEST_CASE("classify output") {
  const auto j = run_json({"classify", "--builtin", "bordiga"});
  CHECK(j["special_rank2_exists"] == "true");
  CHECK(j["stable_special_exists"] == "true");
  CHECK(j["ulrich_wild"] == "true");
  CHECK(j["moduli_dim_lower_chern"] == 12);
  const auto table = run({"classify", "--builtin", "bordiga"});
  CHECK(table.code == 0);
  CHECK(table.out.find("ulrich_wild: true") != std::string::npos);
}

TEST_CASE("line and rank checks") {
  const auto line = run_json({"check-line", "--builtin", "p2-1", "--divisor", "0"});
  CHECK(line["check"]["passed"] == true);
  const auto rank = run_json({"check-rank", "--builtin", "del-pezzo-3", "--rank", "2", "--c1",
                              "6,-2,-2,-2,-2,-2,-2", "--c2", "5"});
  CHECK(rank["check"]["passed"] == true);
  CHECK(rank["chi_vanishing"] == true);
}

TEST_CASE("special chern classes") {
  const auto j = run_json({"special-chern", "--builtin", "enriques-10"});
  CHECK(j["chern"]["c2"] == 27);
  CHECK(j["dual_twist_fixed"] == true);
}

TEST_CASE("catalog and clifford") {
  const auto verify = run_json({"catalog", "verify"});
  CHECK(verify.dump().find("rejected as expected") != std::string::npos);
  const auto list = run_json({"catalog", "list"});
  CHECK_FALSE(list["families"].empty());
  const auto c = run_json({"clifford", "--a", "5", "--m", "9"});
  CHECK(c["cliff_L"] == 14);
  CHECK(c["pencil_bound"] == 8);
  CHECK(run({"clifford", "--a", "5", "--m", "9", "--builtin", "p2-1"}).code == 1);
}

TEST_CASE("errors and exit codes") {
  {
    const auto r = run({"info", "--builtin", "nope", "--format", "json"});
    CHECK(r.code == cli::kUsageError);
    const auto j = json::parse(r.err);
    CHECK(j["error"]["code"] == "UnknownBuiltin");
    CHECK(j["error"]["path"] == "builtin");
  }
  {
    const auto r = run({"enumerate", "--builtin", "del-pezzo-3"});
    CHECK(r.code == cli::kUsageError);
    CHECK(r.err.find("RankTooHigh") != std::string::npos);
  }
  CHECK(run({"info"}).code == cli::kUsageError);
  CHECK(run({"info", "--builtin", "p2-1", "--surface", "x.json"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kSuccess);
  CHECK(run({"clifford", "--a", "4", "--m", "10"}).code == cli::kUsageError);
  CHECK(run({"info", "--builtin", "enriques-6"}).code == cli::kUsageError);
  CHECK(run({"enumerate", "--builtin", "del-pezzo-3", "--bound", "60"}).code ==
        cli::kUsageError);
}

TEST_CASE("table and json outputs agree on scalar fields") {
  const auto j = run_json({"info", "--builtin", "kim-4-9"});
  const auto t = run({"info", "--builtin", "kim-4-9"});
  for (const char* key : {"h2", "hK", "K2", "pi", "N"}) {
    const std::string line = std::string(key) + ": " + j["invariants"][key].dump();
    CHECK(t.out.find(line) != std::string::npos);
  }
}
