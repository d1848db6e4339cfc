#include <doctest.h>

#include <json.hpp>

#include "mdv/errors.hpp"
#include "mdv/expr.hpp"
#include "mdv/report.hpp"
#include "mdv/suites.hpp"

using namespace mdv;

namespace {
VerificationReport demo_report() {
  VerificationReport r;
  r.suite = "demo";
  r.params.suite = "demo";
  Check pass{"alpha", CheckStatus::pass, "", "first anchor"};
  Check fail{"beta", CheckStatus::fail, "2 != 3", "second anchor"};
  Check noted{"gamma", CheckStatus::noted_discrepancy, "sign flipped",
              "third anchor"};
  r.checks = {pass, fail, noted};
  r.elapsed_ms = 999;
  return r;
}
}  // namespace

TEST_CASE("status strings") {
  CHECK(std::string(status_str(CheckStatus::pass)) == "pass");
  CHECK(std::string(status_str(CheckStatus::fail)) == "fail");
  CHECK(std::string(status_str(CheckStatus::noted_discrepancy)) ==
        "noted-discrepancy");
}

TEST_CASE("report accounting") {
  VerificationReport r = demo_report();
  CHECK_FALSE(r.all_pass());
  CHECK(r.failed_count() == 1);
  CHECK(r.noted_count() == 1);
  REQUIRE(r.discrepancies().size() == 1);
  CHECK(r.discrepancies()[0] == "gamma: sign flipped");
  r.checks[1].status = CheckStatus::pass;
  CHECK(r.all_pass());  // noted entries never block an overall pass
}

TEST_CASE("json shape and determinism") {
  VerificationReport r = demo_report();
  std::string s1 = report_json(r);
  std::string s2 = report_json(r);
  CHECK(s1 == s2);
  nlohmann::json j = nlohmann::json::parse(s1);
  CHECK(j["suite"] == "demo");
  CHECK(j["version"] == kVersion);
  CHECK(j["elapsed_ms"] == 0);  // pinned despite r.elapsed_ms = 999
  REQUIRE(j["checks"].size() == 3);
  CHECK_FALSE(j["checks"][0].contains("witness"));  // empty witness omitted
  CHECK(j["checks"][1]["witness"] == "2 != 3");
  CHECK(j["checks"][2]["status"] == "noted-discrepancy");
  CHECK(j["discrepancies"].size() == 1);
  CHECK(j["params"]["n_min"] == 0);
  CHECK(j["params"]["degree_bound"] == 8);
}

TEST_CASE("text rendering") {
  std::string t = report_text(demo_report());
  CHECK(t.find("[pass ] alpha") != std::string::npos);
  CHECK(t.find("[FAIL ] beta") != std::string::npos);
  CHECK(t.find("[noted] gamma") != std::string::npos);
  CHECK(t.find("2 != 3") != std::string::npos);
  CHECK(t.find("summary: FAIL") != std::string::npos);
  CHECK(t.find("elapsed: 999 ms") != std::string::npos);
}

TEST_CASE("enveloping-algebra expressions") {
  CHECK(parse_pbw("e*h - 2") ==
        PBWOp::monomial(1, 1, 0) - PBWOp::one() * Rat(2));
  PBWOp sq = parse_pbw("(e+f)^2");
  CHECK(sq.terms().at({2, 0, 0}) == Rat(1));
  CHECK(sq.terms().at({1, 0, 1}) == Rat(2));
  CHECK(sq.terms().at({0, 1, 0}) == Rat(-1));
  CHECK(sq.terms().at({0, 0, 2}) == Rat(1));
  CHECK(parse_pbw("2/3*e") == PBWOp::e() * rat(2, 3));
  CHECK(parse_pbw("-e") == PBWOp::e() * Rat(-1));
  CHECK_THROWS_AS(parse_pbw("e +"), UsageError);
  CHECK_THROWS_AS(parse_pbw("q"), UsageError);
  CHECK_THROWS_AS(parse_pbw("e^-1"), UsageError);
  CHECK_THROWS_AS(parse_pbw(""), UsageError);
  CHECK_THROWS_AS(parse_pbw("e e"), UsageError);  // implicit products rejected
}

TEST_CASE("operator expressions") {
  CHECK(parse_weyl("x*D - D*x", Side::line) ==
        WeylOp::one(Side::line) * Rat(-1));
  CHECK(parse_weyl("xh^2*Dh", Side::dual_line) ==
        WeylOp::monomial(Side::dual_line, 2, 1));
  CHECK_THROWS_AS(parse_weyl("x", Side::dual_line), UsageError);
  CHECK_THROWS_AS(parse_weyl("xh", Side::line), UsageError);
}

TEST_CASE("suite dispatch and parameter validation") {
  SuiteParams p;
  p.suite = "sl2";
  p.n_min = 0;
  p.n_max = 3;
  VerificationReport r = run_suite(p);
  CHECK(r.all_pass());
  CHECK(r.suite == "sl2");
  CHECK(!r.checks.empty());

  p.suite = "bogus";
  CHECK_THROWS_AS(run_suite(p), UsageError);
  p.suite = "sl2";
  p.n_min = 4;
  CHECK_THROWS_AS(run_suite(p), UsageError);  // n_min > n_max
  p.n_min = 0;
  p.suite = "uniqueness";
  p.trunc = 2;
  CHECK_THROWS_AS(run_suite(p), UsageError);
}

TEST_CASE("printed subjects") {
  CHECK(compute_subject("v-table", 3, "", "line") == "1 1 2 2 3 3");
  CHECK(compute_subject("filtration-dims", 2, "", "line") == "3 5 7 8 9");
  std::string m = compute_subject("distinguished-matrices", 1, "", "line");
  CHECK(m.find("delta0 = [[0/1, 0/1], [1/1, 0/1]]") != std::string::npos);
  CHECK(compute_subject("pbw-normal-form", 0, "f*e", "line") ==
        (PBWOp::e() * PBWOp::f() - PBWOp::h()).str());
  CHECK(compute_subject("weyl-normal-form", 0, "D*x", "line") ==
        "1/1*x^0*D^0 + 1/1*x^1*D^1");
  CHECK(compute_subject("symbol", 3, "x*D^2 - 3*D", "line") ==
        "order 2, symbol 1/1*x^1");
  CHECK_THROWS_AS(compute_subject("nope", 2, "", "line"), UsageError);
  CHECK_THROWS_AS(compute_subject("pbw-normal-form", 0, "", "line"),
                  UsageError);
  CHECK_THROWS_AS(compute_subject("weyl-normal-form", 0, "x", "up"),
                  UsageError);
}
