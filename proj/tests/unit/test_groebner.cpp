#include "doctest.h"
#include "idealforge/groebner.hpp"

using namespace idealforge;

namespace {
std::vector<Polynomial> parse_all(const RingPtr& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(parse_poly(R, t));
  return out;
}
}  // namespace

TEST_CASE("division algorithm identity") {
  const auto R = Ring::custom({"x", "y"}, Field::rationals());
  const auto f = parse_poly(R, "x^2*y + x*y^2 + y^2");
  const auto divs = parse_all(R, {"x*y - 1", "y^2 - 1"});
  const auto order = MonomialOrder::lex();
  std::vector<Polynomial> sorted;
  for (const auto& d : divs) sorted.push_back(d.with_order(order));
  const auto r = reduce(f.with_order(order), sorted, order);
  Polynomial back = r.remainder;
  for (std::size_t i = 0; i < sorted.size(); ++i) back += r.quotients[i] * sorted[i];
  CHECK(back == f);
  CHECK(r.remainder == parse_poly(R, "x + y + 1"));
}

TEST_CASE("reduced basis of the twisted cubic") {
  const auto R = Ring::custom({"x", "y", "z", "w"}, Field::rationals());
  const auto gens = parse_all(R, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  const auto gb = groebner(gens, MonomialOrder::grevlex());
  CHECK(gb.basis.size() == 3);
  CHECK(satisfies_buchberger_criterion(gb.basis, gb.order));
  CHECK(is_reduced(gb.basis, gb.order));
}

TEST_CASE("lex basis of a zero-dimensional system") {
  const auto R = Ring::custom({"x", "y"}, Field::rationals());
  const auto gb = groebner(parse_all(R, {"x^2 + y^2 - 1", "x - y"}), MonomialOrder::lex());
  REQUIRE(gb.basis.size() == 2);
  CHECK(gb.basis[0] == parse_poly(R, "y^2 - 1/2"));
  CHECK(gb.basis[1] == parse_poly(R, "x - y"));
}

TEST_CASE("unit and zero ideals") {
  const auto R = Ring::custom({"x", "y"}, Field::rationals());
  CHECK(groebner(parse_all(R, {"x", "x + 1"}), MonomialOrder::grevlex()).is_unit());
  CHECK(groebner(std::vector<Polynomial>{Polynomial(R)}, MonomialOrder::grevlex()).is_zero_ideal());
  CHECK_THROWS_AS(groebner(std::vector<Polynomial>{}, MonomialOrder::grevlex()), Error);
}

TEST_CASE("tracked transform yields verifiable certificates") {
  const auto R = Ring::custom({"x", "y", "z"}, Field::make(FieldSpec::prime(32003)));
  const auto gens = parse_all(R, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"});
  const auto gb = groebner(gens, MonomialOrder::grevlex(), true);
  REQUIRE(gb.transform);
  for (std::size_t j = 0; j < gb.basis.size(); ++j) {
    Polynomial sum(R);
    for (std::size_t k = 0; k < gens.size(); ++k) sum += (*gb.transform)[j][k] * gens[k];
    CHECK(sum == gb.basis[j]);
  }
  const auto target = gens[0] * parse_poly(R, "z + 1") + gens[1] * parse_poly(R, "x");
  const auto cert = certificate_from_gb(gb, target);
  REQUIRE(cert);
  CHECK(cert->verify(gens));
  CHECK_FALSE(certificate_from_gb(gb, parse_poly(R, "x")));
}

TEST_CASE("budget exhaustion throws") {
  const auto R = Ring::custom({"a", "b", "c", "d", "e"}, Field::rationals());
  const auto gens = parse_all(R, {"a+b+c+d+e", "a*b+b*c+c*d+d*e+e*a", "a*b*c+b*c*d+c*d*e+d*e*a+e*a*b",
                                  "a*b*c*d+b*c*d*e+c*d*e*a+d*e*a*b+e*a*b*c", "a*b*c*d*e-1"});
  GroebnerOptions opts;
  opts.budget = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(groebner(gens, MonomialOrder::grevlex(), opts), BudgetExceeded);
}
