#include <benchmark/benchmark.h>

#include "idealforge/family.hpp"
#include "idealforge/ideals.hpp"

using namespace idealforge;

namespace {

FamilyContext context(int n, int d) {
  const FamilyParams p{n, d};
  return FamilyContext(p, default_family_field(p));
}

void BM_GroebnerK(benchmark::State& state) {
  const auto ctx = context(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const Ideal k = build_K(ctx);
  for (auto _ : state) {
    auto gb = groebner(k.generators(), MonomialOrder::grevlex());
    benchmark::DoNotOptimize(gb.basis.size());
  }
}
BENCHMARK(BM_GroebnerK)->Args({2, 2})->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_ColonKByB04(benchmark::State& state) {
  const auto ctx = context(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const Polynomial f = ctx.poly("b04^{d}");
  for (auto _ : state) {
    const Ideal k = build_K(ctx);
    benchmark::DoNotOptimize(ideal_quotient(k, f).size());
  }
}
BENCHMARK(BM_ColonKByB04)->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_MembershipCertificate(benchmark::State& state) {
  const auto ctx = context(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const Polynomial target = long_membership_target(ctx);
  for (auto _ : state) {
    const Ideal kl = build_Kl(ctx);
    auto cert = member_certificate(kl, target);
    benchmark::DoNotOptimize(cert.has_value());
  }
}
BENCHMARK(BM_MembershipCertificate)->Args({2, 2})->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_EnumeratePrimes(benchmark::State& state) {
  const auto ctx = context(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primes(ctx).primes.size());
}
BENCHMARK(BM_EnumeratePrimes)->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_Intersection(benchmark::State& state) {
  const auto R = Ring::custom({"x", "y", "z", "w"}, Field::rationals());
  const Ideal a(R, {parse_poly(R, "x*z - y^2"), parse_poly(R, "y*w - z^2"), parse_poly(R, "x*w - y*z")});
  const Ideal b(R, {parse_poly(R, "x^2 - w^2"), parse_poly(R, "y - z")});
  for (auto _ : state) {
    const Ideal i(a.ring(), a.generators()), j(b.ring(), b.generators());
    benchmark::DoNotOptimize(ideal_intersect(i, j).size());
  }
}
BENCHMARK(BM_Intersection)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
