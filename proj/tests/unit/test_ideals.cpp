#include "doctest.h"
#include "idealforge/ideals.hpp"

using namespace idealforge;

namespace {
RingPtr xyz() { return Ring::custom({"x", "y", "z"}, Field::rationals()); }
Ideal I(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto t : gens) g.push_back(parse_poly(R, t));
  return Ideal(R, g);
}
}  // namespace

TEST_CASE("text format round trip") {
  const auto i = Ideal::parse("# comment\nring: x y z\nx^2 - y\n\nx*z\n", Field::rationals());
  CHECK(i.size() == 2);
  const auto j = Ideal::parse(i.to_text(), Field::rationals());
  CHECK(ideal_equal(i, j));
  CHECK_THROWS_AS(Ideal::parse("x^2\n", Field::rationals()), ParseError);
}

TEST_CASE("sum, product and intersection of monomial ideals") {
  const auto R = xyz();
  const auto a = I(R, {"x", "y"}), b = I(R, {"y", "z"});
  CHECK(ideal_equal(ideal_sum(a, b), I(R, {"x", "y", "z"})));
  CHECK(ideal_equal(ideal_product(a, b), I(R, {"x*y", "x*z", "y^2", "y*z"})));
  CHECK(ideal_equal(ideal_intersect(a, b), I(R, {"y", "x*z"})));
}

TEST_CASE("quotient and saturation") {
  const auto R = xyz();
  CHECK(ideal_equal(ideal_quotient(I(R, {"x^2*y", "x*z"}), parse_poly(R, "x")), I(R, {"x*y", "z"})));
  CHECK(ideal_equal(saturate(I(R, {"x^3*y", "x*z"}), parse_poly(R, "x")), I(R, {"y", "z"})));
  CHECK(ideal_equal(ideal_quotient(I(R, {"x*y", "x*z"}), I(R, {"y", "z"})), I(R, {"x"})));
  CHECK_THROWS_AS(ideal_quotient(I(R, {"x"}), Polynomial(R)), Error);
}

TEST_CASE("elimination of the twisted cubic parametrization") {
  const auto R = Ring::custom({"t", "x", "y", "z"}, Field::rationals());
  const auto e = eliminate(I(R, {"x - t", "y - t^2", "z - t^3"}), {"t"});
  CHECK(ideal_equal(e, I(R, {"y - x^2", "z - x*y"})));
  for (const auto& g : e.generators()) CHECK_FALSE(g.uses_variable(0));
}

TEST_CASE("comparison reports a witness") {
  const auto R = xyz();
  const auto cmp = compare_ideals(I(R, {"x", "y"}), I(R, {"x"}));
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.failing_side == "lhs");
  REQUIRE(cmp.witness);
  CHECK(cmp.witness->generator == parse_poly(R, "y"));
  CHECK(containment_failure(I(R, {"x"}), I(R, {"x", "y"})) == std::nullopt);
}

TEST_CASE("membership certificates re-expand") {
  const auto R = xyz();
  const auto i = I(R, {"x^2 - y", "y^2 - z"});
  const auto f = parse_poly(R, "x^4 - z");
  const auto cert = member_certificate(i, f);
  REQUIRE(cert);
  CHECK(cert->verify(i.generators()));
  CHECK_FALSE(member_certificate(i, parse_poly(R, "x")));
  const auto dc = min_degree_certificate(i, f, 4);
  REQUIRE(dc);
  CHECK(dc->degree == 2);
  CHECK(dc->certificate.verify(i.generators()));
}

TEST_CASE("radical membership") {
  const auto R = xyz();
  CHECK(radical_member(I(R, {"x^3", "y^2"}), parse_poly(R, "x + y")));
  CHECK_FALSE(radical_member(I(R, {"x^3"}), parse_poly(R, "y")));
}

TEST_CASE("structural primality") {
  const auto R = xyz();
  CHECK(is_prime_structural(I(R, {"x - y^2", "z"})).status == PrimeStatus::Prime);
  CHECK(is_prime_structural(I(R, {"x*y"})).status != PrimeStatus::Prime);
  CHECK(is_prime_structural(I(R, {"x^2"})).status != PrimeStatus::Prime);
}

TEST_CASE("fresh variable names avoid collisions") {
  const auto R = Ring::custom({"t", "t1"}, Field::rationals());
  const auto name = fresh_variable_name(*R, "t");
  CHECK_FALSE(R->index_of(name));
}
