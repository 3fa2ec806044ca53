#include <random>

#include "doctest.h"
#include "idealforge/ideals.hpp"
#include "linear_oracle.hpp"

using namespace idealforge;

TEST_CASE("operations agree with degree-wise linear algebra on random homogeneous ideals") {
  const auto R = Ring::custom({"x", "y", "z"}, Field::rationals());
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> fdeg(1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Ideal i = oracle::random_homogeneous_ideal(R, rng);
    const Ideal j = oracle::random_homogeneous_ideal(R, rng);
    const Polynomial f = oracle::random_homogeneous(R, rng, fdeg(rng));
    const Ideal cap = ideal_intersect(i, j);
    const Ideal col = ideal_quotient(i, f);
    const Ideal elim = eliminate(i, {"z"});
    for (int deg = 0; deg <= 6; ++deg) {
      CAPTURE(trial);
      CAPTURE(deg);
      CHECK(oracle::intersection_agrees(i, j, cap, deg));
      CHECK(oracle::quotient_agrees(i, f, col, deg));
      CHECK(oracle::elimination_agrees(i, {2}, elim, deg));
    }
  }
}
