#include "doctest.h"

#include <filesystem>

#include "seshadri/cli/runner.hpp"
#include "seshadri/error.hpp"

using namespace seshadri;
using namespace seshadri::cli;
using nlohmann::json;

namespace {

std::string instance(const std::string& name) { return std::string(SESHADRI_INSTANCE_DIR) + "/" + name; }

RunResult run_on(const std::string& command, const std::string& file) {
  RunOptions o;
  o.command = command;
  o.file = instance(file);
  return run(o);
}

json minimal() {
  return json::parse(R"({
    "variables": ["x", "y", "z"],
    "cuts": [{"degree": 2, "equation": "x*z - y^2"}],
    "point": [1, 0, 0]
  })");
}

int exit_for(const json& doc, const std::string& command = "bound") {
  RunOptions o;
  o.command = command;
  Instance inst;
  try {
    inst = parse_instance(doc);
  } catch (const InputError&) {
    return kInput;
  }
  return run(o, inst).exit_code;
}

// Every string that looks like an exact number re-parses to itself.
void check_rationals(const json& node) {
  if (node.is_object() || node.is_array()) {
    for (const auto& child : node) check_rationals(child);
  } else if (node.is_string()) {
    const auto& s = node.get_ref<const std::string&>();
    if (!s.empty() && s.find_first_not_of("-0123456789/") == std::string::npos && s != "-" && s != "/")
      CHECK(to_string(parse_rational(s)) == s);
  }
}

}  // namespace

TEST_CASE("bundled instances parse") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SESHADRI_INSTANCE_DIR)) {
    CAPTURE(entry.path().string());
    Instance inst = load_instance(entry.path());
    CHECK(inst.point.size() == inst.nvars());
    CHECK(inst.primes.size() >= 3);
    ++count;
  }
  CHECK(count == 8);
}

TEST_CASE("command examples") {
  RunResult c = run_on("classify", "fermat-cubic.json");
  REQUIRE(c.exit_code == kSuccess);
  CHECK(c.report["result"]["status"] == "EXACT");
  CHECK(c.report["result"]["epsilon"] == "3/2");
  CHECK(c.report["result"]["oracle"]["lines"]["verdict"] == "agree");

  RunResult f = run_on("fano", "quadric-surface.json");
  REQUIRE(f.exit_code == kSuccess);
  CHECK(f.report["result"]["line_scheme"]["dimension"] == 0);
  CHECK(f.report["result"]["line_scheme"]["degree"] == "2");

  RunResult d = run_on("dp", "twisted-cubic.json");
  REQUIRE(d.exit_code == kSuccess);
  CHECK(d.report["result"]["d_p"] == 2);
  CHECK(d.report["result"]["degree"] == "3");

  RunResult g = run_on("classify", "grassmannian-g24-conic.json");
  REQUIRE(g.exit_code == kSuccess);
  CHECK(g.report["result"]["epsilon"] == "2");

  RunResult cv = run_on("curve", "two-quadrics.json");
  REQUIRE(cv.exit_code == kSuccess);
  CHECK(cv.report["result"]["certificate"]["ratio"] == "2");
  CHECK(cv.report["result"]["certificate"]["irreducibility_certified"] == false);

  RunResult o = run_on("oracle", "quadric-surface.json");
  REQUIRE(o.exit_code == kSuccess);
  CHECK(o.report["result"]["line_scheme_empty"] == false);
  for (const auto& entry : o.report["result"]["lines"]["per_prime"]) CHECK(entry["lines"] == 2);
}

TEST_CASE("sharpness command") {
  RunOptions o;
  o.command = "sharpness";
  o.n = 2;
  o.d = 4;
  o.seed = 5;
  RunResult r = run(o);
  REQUIRE(r.exit_code == kSuccess);
  CHECK(r.report["result"]["certificate"]["ratio"] == "4/3");
  CHECK(r.report["result"]["certificate"]["degree"] == "4");
  CHECK(r.report["result"]["line_scheme"]["empty"] == true);
  o.d = 2;
  CHECK(run(o).exit_code == kInput);
}

TEST_CASE("reports are deterministic and round-trip") {
  for (const char* cmd : {"bound", "classify", "curve", "oracle"}) {
    CAPTURE(cmd);
    RunResult a = run_on(cmd, "two-quadrics.json");
    RunResult b = run_on(cmd, "two-quadrics.json");
    REQUIRE(a.exit_code == kSuccess);
    std::string text = a.report.dump(2);
    CHECK(text == b.report.dump(2));
    json back = json::parse(text);
    CHECK(back == a.report);
    check_rationals(back);
    CHECK(render_text(back) == render_text(a.report));
  }
}

TEST_CASE("seed and primes overrides are recorded") {
  RunOptions o;
  o.command = "oracle";
  o.file = instance("fermat-cubic.json");
  o.seed = 99;
  o.primes = std::vector<std::uint32_t>{5, 11, 17, 23};
  RunResult r = run(o);
  REQUIRE(r.exit_code == kSuccess);
  CHECK(r.report["seed"] == 99);
  CHECK(r.report["result"]["lines"]["per_prime"].size() == 4);
}

TEST_CASE("exit codes") {
  CHECK(exit_for(minimal()) == kSuccess);

  json bad_point = minimal();
  bad_point["point"] = {1, 1, 0};
  CHECK(exit_for(bad_point) == kInput);

  json short_point = minimal();
  short_point["point"] = {1, 0};
  CHECK(exit_for(short_point) == kInput);

  json bad_degree = minimal();
  bad_degree["cuts"][0]["degree"] = 3;
  CHECK(exit_for(bad_degree) == kInput);

  json descending = json::parse(R"({
    "variables": ["x0", "x1", "x2", "x3"],
    "cuts": ["x0*x3 - x1*x2", "x3"],
    "point": [1, 0, 0, 0]
  })");
  CHECK(exit_for(descending) == kInput);

  json syntax = minimal();
  syntax["cuts"][0]["equation"] = "x*z - y^^2";
  CHECK(exit_for(syntax) == kInput);

  json unknown = minimal();
  unknown["cuts"][0]["equation"] = "x*w - y^2";
  CHECK(exit_for(unknown) == kInput);

  CHECK(exit_for(json::parse(R"({"variables": ["x", "y"], "point": [1, 0]})")) == kInput);

  json two_cubics = json::parse(R"({
    "variables": ["x0", "x1", "x2", "x3"],
    "cuts": ["x0^2*x1 + x2^3 + x3^3 - x1*x2*x3", "x0^2*x2 + x1^3 - x3^3"],
    "point": [1, 0, 0, 0]
  })");
  RunOptions o;
  o.command = "classify";
  RunResult r = run(o, parse_instance(two_cubics));
  CHECK(r.exit_code == kHypothesis);
  CHECK(r.report["error"]["condition"] == "ii) lines on Y");

  RunOptions missing;
  missing.command = "bound";
  missing.file = instance("does-not-exist.json");
  CHECK(run(missing).exit_code == kInput);

  RunOptions unknown_cmd;
  unknown_cmd.command = "frobnicate";
  CHECK(run(unknown_cmd, parse_instance(minimal())).exit_code == kInput);
}
