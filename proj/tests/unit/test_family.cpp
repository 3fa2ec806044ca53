#include "doctest.h"
#include "idealforge/family.hpp"

using namespace idealforge;

namespace {
FamilyContext ctx(int n, int d) {
  const FamilyParams p{n, d};
  return FamilyContext(p, default_family_field(p));
}
}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate({1, 2}), Error);
  CHECK_THROWS_AS(validate({2, 1}), Error);
  CHECK_THROWS_AS(validate({6, 2}), Error);
  CHECK_NOTHROW(validate({5, 2}));
}

TEST_CASE("required roots of unity") {
  CHECK(required_unity_order({2, 2}) == 4);
  CHECK(required_unity_order({2, 3}) == 9);
  CHECK(required_unity_order({3, 2}) == 4);
  CHECK(required_unity_order({4, 2}) == 16);
  CHECK(default_family_field({2, 2})->modulus() == 1073741833);
}

TEST_CASE("template expansion") {
  CHECK(expand_indices("c1{i}").size() == 4);
  CHECK(expand_indices("c1{i}*c1{j}").size() == 6);
  CHECK(expand_indices("c1{i}*c1{j}", true).size() == 12);
}

TEST_CASE("generator counts of K and K_l") {
  CHECK(build_K(ctx(2, 2)).size() == 20);
  CHECK(build_Kl(ctx(2, 2)).size() == 22);
  CHECK(build_K(ctx(2, 3)).size() == 20);
  CHECK(build_K(ctx(3, 2)).size() == 28);
  CHECK(build_Kl(ctx(3, 2)).size() == 32);
  CHECK(build_K(ctx(2, 2)).max_degree() == 4);
  CHECK(build_K(ctx(2, 3)).max_degree() == 5);
  CHECK(build_K(ctx(3, 2)).max_degree() == 6);
}

TEST_CASE("evaluation map sends K_l onto K") {
  for (auto [n, d] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto c = ctx(n, d);
    CHECK(ideal_equal(eval_map(c, build_Kl(c)), build_K(c)));
  }
}

TEST_CASE("membership target lies in K_l at n = 2") {
  const auto c = ctx(2, 2);
  CHECK(build_Kl(c).contains(long_membership_target(c)));
  CHECK(build_K(c).contains(short_membership_target(c)));
}

TEST_CASE("literal g25 is rejected at n = 2") {
  const FamilyParams p{2, 2};
  const FamilyContext lit(p, default_family_field(p), true);
  CHECK_THROWS_AS(build_K(lit), Error);
}

TEST_CASE("shift renames levels up by one") {
  const auto c = ctx(3, 2);
  const auto small = Ring::short_ring(2, c.field());
  const auto f = parse_poly(small, "b01*c11 - b13");
  CHECK(shift_up(f, c.short_ring()) == c.poly("b11*c21 - b23"));
}

TEST_CASE("prime candidates reject bad arguments") {
  const auto c = ctx(2, 2);
  CHECK_THROWS_AS(build_prime(c, "Q1", PrimeArgs{std::vector<int>{5}, {}, {}, {}}), Error);
  CHECK_THROWS_AS(build_prime(c, "Q1", PrimeArgs{std::vector<int>{1, 1}, {}, {}, {}}), Error);
  CHECK_THROWS_AS(build_prime(c, "Q1", {}), Error);
  CHECK_THROWS_AS(build_prime(c, "Q99", {}), Error);
  CHECK_NOTHROW(build_prime(c, "Q2", {}));
}

TEST_CASE("enumeration sizes") {
  const auto e22 = enumerate_primes(ctx(2, 2));
  CHECK(e22.primes.size() == 23);
  CHECK(enumerate_primes(ctx(2, 3)).primes.size() == 24);
  const auto e32 = enumerate_primes(ctx(3, 2));
  CHECK(e32.primes.size() + e32.duplicates_removed == 289);
  CHECK(e32.duplicates_removed == 2);
  const auto lambdas = lambda_subsets(true);
  CHECK(lambdas.size() == 15);
  CHECK(lambda_subsets(false).size() == 16);
}

TEST_CASE("count formula matches hand evaluation") {
  CHECK(count_primes_formula({2, 2}) == 23);
  CHECK(count_primes_formula({2, 3}) == 24);
  CHECK(count_primes_formula({3, 2}) == 289);
  CHECK(count_primes_formula({4, 2}) == 807);
  CHECK(count_primes_formula({3, 3}) == 395);
  CHECK(count_primes_formula({4, 3}) == 2163);
  CHECK(count_primes_formula({5, 2}) == 5843);
}

TEST_CASE("roots-of-unity families are skipped over Q with a notice") {
  const FamilyParams p{2, 3};
  const FamilyContext q(p, Field::rationals());
  const auto e = enumerate_primes(q);
  CHECK_FALSE(e.notices.empty());
  CHECK(e.primes.size() < 24);
}
