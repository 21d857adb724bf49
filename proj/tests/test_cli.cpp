#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tgmaps/report.hpp"

#ifndef TGMAPS_CLI_PATH
#error "TGMAPS_CLI_PATH must be defined"
#endif

namespace {

struct CliResult {
  int exit_code{-1};
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out_path =
      "/tmp/tgmaps_cli_test_" + std::to_string(counter++) + ".out";
  const std::string cmd =
      std::string(TGMAPS_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WEXITSTATUS(rc);
  r.out = slurp(out_path);
  std::remove(out_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("catalog command emits the small catalog") {
  const CliResult r = run_cli("catalog --max-order 8 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("command") == "catalog");
  CHECK(doc.at("results").size() == 7);
  bool saw_q8 = false;
  for (const auto& row : doc.at("results"))
    if (row.at("label") == "Q8") {
      saw_q8 = true;
      CHECK(row.at("aut_order") == 24);
      CHECK(row.at("rotary") == false);
    }
  CHECK(saw_q8);
}

TEST_CASE("maps command on a family without maps") {
  const CliResult r = run_cli("maps --family Quaternion --ell 3 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("results").empty());
}

TEST_CASE("maps rows carry the documented schema") {
  const CliResult r = run_cli("maps --family Dihedral --ell 3 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(!doc.at("results").empty());
  for (const auto& row : doc.at("results")) {
    CHECK(row.contains("family"));
    CHECK(row.contains("ell"));
    CHECK(row.contains("map_type"));
    CHECK(row.at("tuple").is_array());
    const std::int64_t chi = row.at("chi").get<std::int64_t>();
    const std::int64_t euler = row.at("V").get<std::int64_t>() -
                               row.at("E").get<std::int64_t>() +
                               row.at("F").get<std::int64_t>();
    CHECK(chi == euler);
    CHECK(row.at("passes_filter") == (((chi % 4) + 4) % 4 != 0));
  }
}

TEST_CASE("squarefree command") {
  const CliResult r = run_cli("squarefree --d 21 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("results").at(0).at("x") == 7);

  const CliResult r2 = run_cli("squarefree --n 63 --format json");
  REQUIRE(r2.exit_code == 0);
  CHECK(nlohmann::json::parse(r2.out).at("results").at(0).at("squarefree") == false);
}

TEST_CASE("verify command reports per-check lines and exits 0") {
  const CliResult r =
      run_cli("verify --family Dihedral --ell 2..4 --oracle --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  bool saw_orbits = false;
  for (const auto& row : doc.at("results")) {
    CHECK(row.at("status") == "PASS");
    if (row.at("check") == "tuples-orbit-counts") {
      saw_orbits = true;
      const std::string detail = row.at("detail").get<std::string>();
      CHECK(detail.find("9 (ell=2)") != std::string::npos);
      CHECK(detail.find("15 (ell=3)") != std::string::npos);
      CHECK(detail.find("27 (ell=4)") != std::string::npos);
    }
  }
  CHECK(saw_orbits);
}

TEST_CASE("identical configurations produce byte-identical output") {
  const std::string args = "orbits --family DihedralSemiZ2 --ell 3 --format json";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  const std::string vargs = "verify --family Modular --ell 3..4 --seed 42";
  CHECK(run_cli(vargs).out == run_cli(vargs).out);
}

TEST_CASE("csv output is grep-friendly") {
  const CliResult r = run_cli("maps --family Dihedral --ell 2 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("family,ell,map_type,tuple,chi,V,E,F,passes_filter") !=
        std::string::npos);
  CHECK(r.out.find("a*b") != std::string::npos);
  CHECK(r.out.find(' ') == std::string::npos);
}

TEST_CASE("usage and parameter errors exit 2") {
  CHECK(run_cli("aut").exit_code == 2);                            // missing family
  CHECK(run_cli("aut --family NoSuch --ell 2").exit_code == 2);    // bad family
  CHECK(run_cli("triples --family Dihedral --ell 9").exit_code == 2);  // scale gate
  CHECK(run_cli("squarefree").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("aut --family DihedralTimesZ2 --ell 5 --oracle").exit_code == 2);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "/tmp/tgmaps_cli_out_test.json";
  const CliResult r = run_cli("catalog --max-order 4 --format json --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  const nlohmann::json doc = nlohmann::json::parse(slurp(path));
  CHECK(doc.at("results").size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("descriptor serialization round-trips") {
  using namespace tgmaps;
  const FamilyDescriptor d{Family::DihedralTimesZ2, 3};
  const nlohmann::json j = descriptor_json(d);
  CHECK(j.dump() == R"({"ell":3,"family":"DihedralTimesZ2"})");
  CHECK(descriptor_from_json(j) == d);
  const nlohmann::json ea = descriptor_json({Family::ElementaryAbelian8, 0});
  CHECK(!ea.contains("ell"));
  CHECK(descriptor_from_json(ea).family == Family::ElementaryAbelian8);
  CHECK_THROWS_AS(descriptor_from_json({{"family", "NoSuch"}, {"ell", 2}}),
                  parameter_error);
  // degenerate aliases normalize on the way in
  CHECK(descriptor_from_json({{"family", "Modular"}, {"ell", 2}}) ==
        FamilyDescriptor{Family::Dihedral, 2});
}

TEST_CASE("aut oracle flag cross-checks small groups") {
  const CliResult r =
      run_cli("aut --family Quaternion --ell 2..3 --oracle --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.at("results").size() == 2);
  CHECK(doc.at("results").at(0).at("aut_order") == 24);
  CHECK(doc.at("results").at(0).at("oracle_match") == true);
  CHECK(doc.at("results").at(1).at("aut_order") == 32);
  CHECK(doc.at("results").at(1).at("oracle_match") == true);
}
