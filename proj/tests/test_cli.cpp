#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "geomult/cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int rc;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("geomult");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int rc = geomult::run_cli(static_cast<int>(argv.size()), argv.data(), out,
                            err);
  return {rc, out.str(), err.str()};
}

json out_json(const CliResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("tensor multiplicity, json output") {
  auto r = run({"mult", "tensor", "--datum", "A1", "--lambda", "1", "--nu",
                "1", "--mu", "0", "--json"});
  CHECK(r.rc == 0);
  json j = out_json(r);
  CHECK(j.at("count") == 1);
}

TEST_CASE("tensor multiplicity with points") {
  auto r = run({"mult", "tensor", "--datum", "A2", "--lambda", "1,1", "--nu",
                "1,1", "--mu", "1,1", "--emit-points", "--json"});
  CHECK(r.rc == 0);
  json j = out_json(r);
  CHECK(j.at("count") == 2);
  auto pts = j.at("points");
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == json::array({0, 1, 0}));
  CHECK(pts[1] == json::array({1, 0, 1}));
}

TEST_CASE("n-fold multiplicity") {
  auto r = run({"mult", "nfold", "--datum", "A1", "--lambda", "1", "--lambda",
                "1", "--lambda", "1", "--mu", "1", "--json"});
  CHECK(r.rc == 0);
  CHECK(out_json(r).at("count") == 2);
}

TEST_CASE("deformed multiplicity") {
  auto r = run({"mult", "deform", "--datum", "A1", "--q-charge", "c0*q3",
                "--lambda", "2", "--lambda", "2", "--lambda", "2", "--mu", "2",
                "--json"});
  CHECK(r.rc == 0);
  json j = out_json(r);
  CHECK(j.at("count") == 3);
  auto qp = j.at("q_poly");
  REQUIRE(qp.size() == 3);
  CHECK(qp[0].at("exp") == "0");
  CHECK(qp[0].at("count") == 1);
  CHECK(qp[2].at("exp") == "2");
}

TEST_CASE("reduction multiplicity") {
  auto r = run({"mult", "reduce", "--datum", "A2", "--J", "1", "--lambda",
                "1,1", "--beta", "1,1", "--json"});
  CHECK(r.rc == 0);
  CHECK(out_json(r).at("count") == 1);
  auto z = run({"mult", "reduce", "--datum", "A2", "--J", "1", "--lambda",
                "1,1", "--beta", "3,0", "--json"});
  CHECK(z.rc == 0);
  CHECK(out_json(z).at("count") == 0);
}

TEST_CASE("words enumerate") {
  auto r = run({"words", "enumerate", "--datum", "A2", "--json"});
  CHECK(r.rc == 0);
  json j = out_json(r);
  CHECK(j.at("decorated_words") == 16);
  CHECK(j.at("classes") == 4);
  CHECK(j.at("capped") == false);
  CHECK(j.at("tau4_edges").size() == 2);
}

TEST_CASE("potential dump") {
  auto r = run({"potential", "dump", "--datum", "A1", "--json"});
  CHECK(r.rc == 0);
  json j = out_json(r);
  CHECK(j.contains("tropical_exponents"));
  auto rows = j.at("tropical_exponents");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].contains("exps"));
  CHECK(rows[0].at("exps").size() == 3);
}

TEST_CASE("charts show") {
  auto r = run({"charts", "show", "--datum", "A2", "--word", "1,2,1",
                "--json"});
  CHECK(r.rc == 0);
  json j = out_json(r);
  CHECK(j.contains("xi"));
  CHECK(j.at("xi").size() == 3);
  CHECK(j.contains("x"));
}

TEST_CASE("verify oracle") {
  auto r = run({"verify", "oracle", "--datum", "A1", "--max", "2", "--json"});
  CHECK(r.rc == 0);
  json j = out_json(r);
  CHECK(j.at("checked") == 27);
  CHECK(j.at("mismatches") == 0);
  auto r2 = run({"verify", "oracle", "--datum", "A2", "--max", "1", "--json"});
  CHECK(r2.rc == 0);
  CHECK(out_json(r2).at("mismatches") == 0);
}

TEST_CASE("validation errors exit with code 2") {
  // malformed weight length
  auto r = run({"mult", "tensor", "--datum", "A2", "--lambda", "1", "--nu",
                "1,1", "--mu", "0,0", "--json"});
  CHECK(r.rc == 2);
  CHECK(r.out.empty());
  json e = json::parse(r.err);
  CHECK(e.contains("error"));
  // non-dominant input
  auto neg = run({"mult", "tensor", "--datum", "A1", "--lambda", "-1", "--nu",
                  "1", "--mu", "0", "--json"});
  CHECK(neg.rc == 2);
  // non-type-A datum for a chart-based command
  auto b2 = run({"mult", "tensor", "--datum", "B2", "--lambda", "1,0", "--nu",
                 "1,0", "--mu", "0,0", "--json"});
  CHECK(b2.rc == 2);
  // word that is not reduced for w0
  auto w = run({"charts", "show", "--datum", "A2", "--word", "1,1,2",
                "--json"});
  CHECK(w.rc == 2);
  // missing subcommand
  auto none = run({});
  CHECK(none.rc == 2);
  // unknown option
  auto bad = run({"mult", "tensor", "--bogus", "1"});
  CHECK(bad.rc == 2);
}

TEST_CASE("cap exceeded exits with code 4") {
  auto r = run({"mult", "tensor", "--datum", "A2", "--lambda", "2,2", "--nu",
                "2,2", "--mu", "2,2", "--cap", "1", "--json"});
  CHECK(r.rc == 4);
  json e = json::parse(r.err);
  CHECK(e.contains("error"));
}

TEST_CASE("help exits successfully") {
  auto r = run({"--help"});
  CHECK(r.rc == 0);
  CHECK(!r.out.empty());
}

TEST_CASE("output is deterministic") {
  auto a = run({"mult", "deform", "--datum", "A1", "--q-charge", "c0*q3",
                "--lambda", "3", "--lambda", "2", "--lambda", "1", "--mu", "2",
                "--json"});
  auto b = run({"mult", "deform", "--datum", "A1", "--q-charge", "c0*q3",
                "--lambda", "3", "--lambda", "2", "--lambda", "1", "--mu", "2",
                "--json"});
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  auto c = run({"words", "enumerate", "--datum", "A2", "--json"});
  auto d = run({"words", "enumerate", "--datum", "A2", "--json"});
  CHECK(c.out == d.out);
}

TEST_CASE("json output round-trips through the parser") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"mult", "tensor", "--datum", "A2", "--lambda", "1,1", "--nu",
            "1,1", "--mu", "1,1", "--json"},
           {"words", "enumerate", "--datum", "A1", "--json"},
           {"potential", "dump", "--datum", "A2", "--json"},
           {"verify", "oracle", "--datum", "A1", "--max", "1", "--json"}}) {
    auto r = run(args);
    CHECK(r.rc == 0);
    CHECK_NOTHROW(json::parse(r.out));
  }
}
