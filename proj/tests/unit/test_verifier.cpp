#include "doctest.h"
#include "idealforge/verifier.hpp"
#include "json.hpp"

using namespace idealforge;

TEST_CASE("default budget covers the three desk-scale parameter pairs") {
  CHECK(within_budget({2, 2}));
  CHECK(within_budget({2, 3}));
  CHECK(within_budget({3, 2}));
  CHECK_FALSE(within_budget({4, 2}));
  CHECK_FALSE(within_budget({2, 4}));
}

TEST_CASE("randomized facts pass on a short run") {
  for (const char* id : {"modular-law", "principal-intersection", "colon-of-sum"}) {
    const Report r = verify_fact(id, 20, 7);
    CHECK_MESSAGE(r.status == Status::Pass, id);
  }
  CHECK_THROWS_AS(verify_fact("not-a-fact", 1, 7), Error);
}

TEST_CASE("checks outside their level range are skipped") {
  VerifyOptions opts;
  opts.params = {2, 2};
  const Report r = verify_identity("colon-b04c12", opts);
  CHECK(r.status == Status::Skipped);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("parameters outside the budget are refused unless forced") {
  VerifyOptions opts;
  opts.params = {4, 2};
  CHECK(verify_identity("sumdecomp-b04", opts).status == Status::Refused);
  CHECK(verify_membership(opts).status == Status::Refused);
}

TEST_CASE("an identity check passes at (2,2)") {
  VerifyOptions opts;
  opts.params = {2, 2};
  const Report r = verify_identity("colon-b04", opts);
  CHECK(r.status == Status::Pass);
  CHECK(r.field == "GF(1073741833)");
}

TEST_CASE("literal n = 2 chain records the corrected reading") {
  VerifyOptions opts;
  opts.params = {2, 2};
  opts.literal = true;
  const Report r = verify_identity("n2-chain", opts);
  CHECK(r.status != Status::Pass);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("membership report carries a certificate degree") {
  VerifyOptions opts;
  opts.params = {2, 2};
  const Report r = verify_membership(opts);
  CHECK(r.status == Status::Pass);
  REQUIRE(r.max_coeff_degree);
  CHECK(*r.max_coeff_degree >= 1);
}

TEST_CASE("json reports follow the schema") {
  VerifyOptions opts;
  opts.params = {2, 2};
  const auto reports = run_suite({"sumdecomp-b04", "colon-b04", "count"}, opts);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].check_id == "sumdecomp-b04");
  const auto j = nlohmann::json::parse(reports_to_json(reports));
  for (const auto& r : j) {
    CHECK(r.contains("check_id"));
    CHECK(r["params"].contains("n"));
    CHECK(r["params"].contains("d"));
    CHECK(r["params"].contains("field"));
    CHECK(r["status"].is_string());
    CHECK(r["elapsed_ms"].is_number());
    CHECK(r["notes"].is_array());
  }
  CHECK_FALSE(nlohmann::json::parse(reports_to_json(reports, false))[0].contains("elapsed_ms"));
  CHECK(exit_code(reports) == 0);
  Report failed;
  failed.status = Status::Fail;
  CHECK(exit_code({failed}) == 1);
}

TEST_CASE("colon witness recovers a prime from a principal colon") {
  const auto R = Ring::custom({"x", "y"}, Field::rationals());
  const Ideal i(R, {parse_poly(R, "x*y")});
  const Ideal p(R, {parse_poly(R, "x")});
  const auto h = colon_witness(i, p);
  REQUIRE(h);
  CHECK(ideal_equal(ideal_quotient(i, *h), p));
}
