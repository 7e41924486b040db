#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(FRACLAG_CLI_PATH) + " " + args + " 2>&1";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

json strip_timestamp(json j) {
  j.erase("generated_at");
  if (j.contains("diagnostics") && j["diagnostics"].contains("generated_at"))
    j["diagnostics"].erase("generated_at");
  return j;
}

}  // namespace

TEST_CASE("identity batch passes and reports every check") {
  const auto r = run("verify-identities --alpha 0.5 --sigma 0.5 --delta 1");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("verdict") == "pass");
  REQUIRE(j.at("checks").is_array());
  CHECK(j["checks"].size() >= 7);
  for (const auto& c : j["checks"]) {
    CHECK(c.at("pass").get<bool>());
    CHECK(c.at("max_err").get<double>() <= c.at("tol").get<double>());
  }
}

TEST_CASE("hardy report is deterministic modulo the timestamp") {
  const std::string args = "hardy-laguerre --alpha 0.5 --sigma 0.5 --delta 1 --f bump:0.5,2.5";
  const auto r1 = run(args);
  const auto r2 = run(args);
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  const json a = strip_timestamp(json::parse(r1.output));
  const json b = strip_timestamp(json::parse(r2.output));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("hardy report carries the full schema") {
  const auto r = run("hardy-laguerre --alpha 0.5 --sigma 0.5 --delta 1 --f bump:0.5,2.5");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("command") == "hardy-laguerre");
  CHECK(j.at("params").at("alpha").get<double>() == 0.5);
  CHECK(j.at("f_id") == "bump:0.5,2.5");
  CHECK(j.at("verdict") == "pass");
  REQUIRE(j.at("gaps").is_array());
  REQUIRE(j["gaps"].size() == 2);
  CHECK(j["gaps"][0].get<double>() > 0.0);
  CHECK(j["gaps"][1].get<double>() > 0.0);
  CHECK(j.at("lhs_form").get<double>() > j.at("middle_term").get<double>());
  CHECK(j.at("middle_term").get<double>() > j.at("rhs_potential").get<double>());
  CHECK(j.at("diagnostics").contains("tolerances"));
  CHECK(j.contains("generated_at"));
}

TEST_CASE("csv and json outputs carry identical numeric content") {
  const std::string base = "hardy-laguerre --alpha 0.5 --sigma 0.5 --delta 1 --f bump:0.5,2.5";
  const auto js = run(base);
  const auto cs = run(base + " --format csv");
  REQUIRE(js.exit_code == 0);
  REQUIRE(cs.exit_code == 0);
  const json j = json::parse(js.output);

  // comment lines carry the timestamp; the first data line is the header
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : cs.output) {
      if (ch == '\n') {
        if (!cur.empty() && cur[0] != '#') lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
  }
  REQUIRE(lines.size() >= 2);
  const std::string header = lines[0];
  const std::string row = lines[1];

  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
      const size_t comma = s.find(',', start);
      if (comma == std::string::npos) {
        out.push_back(s.substr(start));
        break;
      }
      out.push_back(s.substr(start, comma - start));
      start = comma + 1;
    }
    return out;
  };
  const auto cols = split(header);
  const auto vals = split(row);
  REQUIRE(cols.size() == vals.size());
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == "lhs_form")
      CHECK(std::strtod(vals[i].c_str(), nullptr) == j.at("lhs_form").get<double>());
    if (cols[i] == "gap1")
      CHECK(std::strtod(vals[i].c_str(), nullptr) == j.at("gaps")[0].get<double>());
    if (cols[i] == "rhs_potential")
      CHECK(std::strtod(vals[i].c_str(), nullptr) == j.at("rhs_potential").get<double>());
  }
}

TEST_CASE("constraint violations are rejected with the violated constraint named") {
  const auto bad_sigma = run("hardy-laguerre --alpha 0.5 --sigma 1.2 --delta 1 --f bump:0.5,2.5");
  CHECK(bad_sigma.exit_code == 1);
  CHECK(bad_sigma.output.find("0 < ") != std::string::npos);

  const auto bad_alpha = run("hardy-laguerre --alpha -0.8 --sigma 0.5 --delta 1 --f bump:0.5,2.5");
  CHECK(bad_alpha.exit_code == 1);
  CHECK(bad_alpha.output.find("alpha > -1/2") != std::string::npos);

  const auto bad_fs = run("fundamental-solution --alpha 0.3 --sigma 0.5");
  CHECK(bad_fs.exit_code == 1);
  CHECK(bad_fs.output.find("alpha > sigma") != std::string::npos);
}

TEST_CASE("dunkl-hermite verdict over two modes") {
  const auto r = run("hardy-dunkl-hermite --d 2 --gamma 0.25 --sigma 0.5 --delta 1 "
                     "--modes \"0:bump:0.5,2;2:bump:1,2.5\"");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("verdict") == "pass");
  REQUIRE(j.at("modes").size() == 2);
  CHECK(j.at("gap").get<double>() > 0.0);
}

TEST_CASE("fundamental solution routes agree through the CLI") {
  const auto r = run("fundamental-solution --alpha 1 --sigma 0.4 --r-grid 0.8:2.0:4");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("max_rel_gap").get<double>() < 1e-9);
  REQUIRE(j.at("rows").size() == 4);
}

TEST_CASE("parameter sweep aggregates verdicts") {
  const auto r = run("sweep --alpha-grid 0.5:2:2 --sigma-grid 0.25:0.75:3 --delta-grid 1 "
                     "--f bump:0.5,2.5 --emit hardy");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("rows").size() == 6);
}
