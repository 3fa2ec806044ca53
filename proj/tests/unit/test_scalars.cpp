#include "doctest.h"
#include "idealforge/scalars.hpp"

using namespace idealforge;

TEST_CASE("rational arithmetic is exact") {
  const auto q = Field::rationals();
  const Scalar a = q->parse("1/3"), b = q->parse("-2/6");
  CHECK(q->is_zero(q->add(a, b)));
  CHECK(q->format(q->mul(a, q->from_int(6))) == "2");
  CHECK(q->format(q->div(q->one(), q->from_int(-4))) == "-1/4");
  CHECK_THROWS_AS(q->inv(q->zero()), Error);
}

TEST_CASE("prime field arithmetic reduces modulo p") {
  const auto f = Field::make(FieldSpec::prime(13, 4));
  CHECK(f->name() == "GF(13)");
  CHECK(f->format(f->from_int(-1)) == "-1");
  CHECK(f->describe(f->from_int(-1)) == "12 mod 13");
  CHECK(f->is_one(f->mul(f->from_int(5), f->inv(f->from_int(5)))));
  CHECK(f->format(f->parse("1/2")) == "-6");
  CHECK_THROWS_AS(f->parse("1/13"), ParseError);
}

TEST_CASE("field construction validates the modulus") {
  CHECK_THROWS_AS(Field::make(FieldSpec::prime(15)), Error);
  CHECK_THROWS_AS(Field::make(FieldSpec::prime(7, 4)), Error);
  CHECK_THROWS_AS(Field::make({FieldKind::Rationals, std::nullopt, 4}), Error);
  CHECK_NOTHROW(Field::make(FieldSpec::prime(13, 4)));
}

TEST_CASE("roots of unity have the requested orders") {
  const auto f = Field::make(FieldSpec::prime(13, 4));
  const auto roots = f->roots_of_unity(4);
  CHECK(roots.size() == 4);
  for (const auto& r : roots) CHECK(f->is_one(f->pow(r, 4)));
  CHECK(f->multiplicative_order(f->root_of_unity(4)) == 4);
  CHECK(Field::rationals()->roots_of_unity(2).size() == 2);
}

TEST_CASE("default verification prime is above 2^30 and 1 mod the unity order") {
  const auto p = Field::default_verification_prime(16);
  CHECK(p > (std::uint64_t{1} << 30));
  CHECK((p - 1) % 16 == 0);
  CHECK(is_prime_u64(p));
  CHECK(Field::default_verification_prime(4) == 1073741833);
}

TEST_CASE("primality test on small and large inputs") {
  CHECK_FALSE(is_prime_u64(1));
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1073741833));
  CHECK_FALSE(is_prime_u64(1073741831ull * 3));
}
