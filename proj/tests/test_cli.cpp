#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

#ifndef LNR_CLI_BIN_PATH
#define LNR_CLI_BIN_PATH ""
#endif

std::string cli_bin() {
  if (const char* p = std::getenv("LNR_CLI_BIN")) return p;
  const std::string baked = LNR_CLI_BIN_PATH;
  REQUIRE_MESSAGE(!baked.empty(), "set LNR_CLI_BIN to the lnr binary path");
  return baked;
}

CliResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  const std::string& env_prefix = "") {
  std::string cmd = env_prefix + cli_bin() + " " + args + " 2>/dev/null";
  if (!stdin_text.empty()) {
    std::ofstream f("/tmp/lnr_cli_stdin.txt");
    f << stdin_text;
    f.close();
    cmd += " < /tmp/lnr_cli_stdin.txt";
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    r.out.append(buf, n);
  }
  const int rc = pclose(pipe);
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

nlohmann::json parse_json(const std::string& text) {
  return nlohmann::json::parse(text);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

const std::string kOrthoII =
    "--category II --a 1,0,0 --a 0,1,0 --a 0,0,1 "
    "--b 1,0,0 --b 0,1,0 --b 0,0,1";

}  // namespace

TEST_CASE("bound: orthonormal category II settings, json output") {
  const CliResult r = run_cli("bound " + kOrthoII + " --format json");
  REQUIRE(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(std::abs(j["L"].get<double>() - 0.816496580927726) <= 1e-12);
  CHECK(std::abs(j["extremal_angle_deg"].get<double>() - 90.0) <= 1e-9);
  CHECK(std::abs(j["bound"].get<double>() - 1.615099820540250) <= 1e-12);
  CHECK(j["degenerate"].get<bool>() == false);

  const auto pos = [&](const char* key) { return r.out.find(key); };
  CHECK(pos("\"L\"") < pos("\"extremal_angle_deg\""));
  CHECK(pos("\"extremal_angle_deg\"") < pos("\"bound\""));
  CHECK(pos("\"bound\"") < pos("\"degenerate\""));
}

TEST_CASE("bound: --radians switches the angle key and unit") {
  const CliResult r = run_cli("bound --radians " + kOrthoII + " --format json");
  REQUIRE(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK_FALSE(j.contains("extremal_angle_deg"));
  CHECK(std::abs(j["extremal_angle_rad"].get<double>() - std::numbers::pi / 2) <= 1e-12);
}

TEST_CASE("violation: ratio is null when the lhs vanishes") {
  const std::string args =
      "--category I "
      "--a 0,1,0 --a 0,0,1 --a 1,0,0 "
      "--b 1,1,0 --b 0,1,1 --b 1,0,1 "
      "--b2 1,-1,0 --b2 0,1,-1 --b2 -1,0,1";
  const CliResult r = run_cli("violation " + args + " --format json");
  REQUIRE(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j["ratio"].is_null());
  CHECK(j["lhs"].get<double>() <= 1e-12);
  CHECK(std::abs(j["L"].get<double>() - 1.0) <= 1e-12);

  const CliResult human = run_cli("violation " + args);
  REQUIRE(human.code == 0);
  CHECK(human.out.find("undefined") != std::string::npos);
}

TEST_CASE("optimize round trip through --emit-settings") {
  const char* path = "/tmp/lnr_cli_opt_settings.json";
  const CliResult opt =
      run_cli(std::string("optimize --format json --emit-settings ") + path);
  REQUIRE(opt.code == 0);
  const auto jo = parse_json(opt.out);
  CHECK(std::abs(jo["beta_deg"].get<double>() - 36.87) <= 0.1);
  CHECK(std::abs(jo["S"].get<double>() - 0.10818510677891955) <= 1e-9);
  CHECK(std::abs(jo["threshold_visibility"].get<double>() - 0.9430) <= 5e-4);

  const CliResult vio = run_cli(std::string("violation --settings-file ") + path +
                                " --format json");
  REQUIRE(vio.code == 0);
  const auto jv = parse_json(vio.out);
  CHECK(std::abs(jv["S"].get<double>() - jo["S"].get<double>()) <= 1e-12);
  CHECK(std::abs(jv["bound"].get<double>() - jo["bound"].get<double>()) <= 1e-12);
  std::remove(path);
}

TEST_CASE("scan: csv grid and json agree cell for cell") {
  const std::string params = "scan --from 60 --to 120 --step 0.5";
  const CliResult csv = run_cli(params + " --format csv");
  REQUIRE(csv.code == 0);
  const auto lines = split_lines(csv.out);
  REQUIRE(lines.size() == 122);
  CHECK(lines[0] == "delta,lhs,bound,S");
  CHECK(std::abs(std::stod(lines[1]) - 60.0) <= 1e-9);
  CHECK(std::abs(std::stod(lines.back()) - 120.0) <= 1e-9);

  const CliResult js = run_cli(params + " --format json");
  REQUIRE(js.code == 0);
  const auto j = parse_json(js.out);
  REQUIRE(j["rows"].size() == 121);
  for (std::size_t idx : {0u, 57u, 105u, 120u}) {
    const auto& row = j["rows"][idx];
    std::stringstream expect;
    expect << nlohmann::json(row["delta_deg"]).dump() << ','
           << nlohmann::json(row["lhs"]).dump() << ','
           << nlohmann::json(row["bound"]).dump() << ','
           << nlohmann::json(row["S"]).dump();
    CHECK(lines[idx + 1] == expect.str());
  }

  REQUIRE(j["window_deg"].is_array());
  CHECK(std::abs(j["window_deg"][0].get<double>() - 106.80884956754744) <= 1e-9);
  CHECK(std::abs(j["window_deg"][1].get<double>() - 116.53404797799887) <= 1e-9);
  CHECK(std::abs(j["argmax_delta_deg"].get<double>() - 112.63) <= 0.1);
  CHECK(std::abs(j["max_S"].get<double>() - 0.027237226272581738) <= 1e-12);
}

TEST_CASE("scan: no window at visibility 0.97") {
  const CliResult r =
      run_cli("scan --from 60 --to 120 --step 0.5 --visibility 0.97 --format json");
  REQUIRE(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j["window_deg"].is_null());
  CHECK(j["max_S"].get<double>() < 0.0);
}

TEST_CASE("hvcheck: table on stdin") {
  const std::string table =
      "weight,A,B,B2\n"
      "0.25,+1,1,-1\n"
      "0.25,-1,-1,1\n"
      "0.5,1,-1,-1\n";
  const CliResult ok = run_cli("hvcheck --table - --format json", table);
  REQUIRE(ok.code == 0);
  const auto j = parse_json(ok.out);
  CHECK(j["rows"].get<int>() == 3);
  CHECK(j["identity_holds"].get<bool>());
  CHECK(j["subensemble_holds"].get<bool>());
  CHECK(j["triangle_holds"].get<bool>());
  CHECK(j["all_hold"].get<bool>());
  CHECK(j["subensemble_margin"].get<double>() >= 0.0);
  CHECK(j["triangle_margin"].get<double>() >= 0.0);

  const CliResult bad = run_cli("hvcheck --table - --format json",
                                "w,A,B,B2\n1.0,1,1,1\n");
  CHECK(bad.code == 1);
}

TEST_CASE("oracle: single triple mode") {
  const CliResult r =
      run_cli("oracle --e 1,0,0 --e 0,1,0 --e 0,0,1 --format json");
  REQUIRE(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(std::abs(j["L_closed_form"].get<double>() - 1.0) <= 1e-12);
  CHECK(j["abs_diff"].get<double>() <= 1e-9);
  CHECK(j["vertex_agrees"].get<bool>());
}

TEST_CASE("robustness: epsilon zero echoes the nominal values") {
  const CliResult r = run_cli("robustness " + kOrthoII +
                              " --epsilon 0 --samples 10 --seed 5 --format json");
  REQUIRE(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j["conclusive_margin"].get<double>() == j["nominal_S"].get<double>());
  CHECK(j["epsilon_deg"].get<double>() == 0.0);
  CHECK(j["n_samples"].get<int>() == 10);
  CHECK(j["seed"].get<int>() == 5);
}

TEST_CASE("reproduce: json report passes and is byte-stable") {
  const CliResult r1 = run_cli("reproduce --format json --seed 12345");
  REQUIRE(r1.code == 0);
  const auto j = parse_json(r1.out);
  CHECK(j["all_pass"].get<bool>());
  REQUIRE(j["rows"].size() == 8);
  for (const auto& row : j["rows"]) {
    CHECK(row["pass"].get<bool>());
  }
  const CliResult r2 = run_cli("reproduce --format json --seed 12345");
  CHECK(r2.code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("LNR_FORMAT environment variable selects the format") {
  const CliResult r = run_cli("bound " + kOrthoII, "", "LNR_FORMAT=json ");
  REQUIRE(r.code == 0);
  CHECK(parse_json(r.out).contains("bound"));
}

TEST_CASE("exit codes: usage errors give 2, domain errors give 1") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("bound --category II --a 1,0,0 --b 1,0,0").code == 2);
  CHECK(run_cli("bound --category III " + kOrthoII.substr(14)).code == 2);
  CHECK(run_cli("bound --category II --a 1,0,0 --a 0,1,0 --a 0,0,1 "
                "--b 0,0,0 --b 0,1,0 --b 0,0,1").code == 2);
  CHECK(run_cli("bound " + kOrthoII + " --b2 1,0,0 --b2 0,1,0 --b2 0,0,1").code == 2);
  CHECK(run_cli("violation --settings-file /tmp/does_not_exist_lnr.json").code == 2);
  CHECK(run_cli("violation " + kOrthoII + " --visibility 1.5").code == 2);
  CHECK(run_cli("robustness " + kOrthoII + " --epsilon 45").code == 1);
  CHECK(run_cli("scan --from 130 --to 120 --step 0.5").code == 1);
  CHECK(run_cli("optimize --visibility 0.5").code == 1);
  const std::string coincident =
      "--category I --a 0,1,0 --a 0,0,1 --a 1,0,0 "
      "--b 1,0,0 --b 0,1,1 --b 1,0,1 "
      "--b2 1,0,0 --b2 0,1,-1 --b2 -1,0,1";
  CHECK(run_cli("violation " + coincident).code == 1);
}
