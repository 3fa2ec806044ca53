#pragma once

// Multivariate division, Buchberger's algorithm, reduced Groebner bases and
// membership certificates.

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "idealforge/poly.hpp"

namespace idealforge {

/// target = sum_i coefficients[i] * generators[i], exactly.
struct Certificate {
  Polynomial target;
  std::vector<Polynomial> coefficients;
  int max_coeff_degree = -1;

  /// Re-expands the combination and compares with target.
  bool verify(std::span<const Polynomial> generators) const;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_degree = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Reduced Groebner basis: monic, inter-reduced, sorted ascending by
/// leading monomial. When tracked, transform[j][k] is the coefficient of
/// inputs[k] in basis[j].
struct ReducedGB {
  MonomialOrder order;
  RingPtr ring;
  std::vector<Polynomial> basis;
  std::vector<Polynomial> inputs;
  std::optional<std::vector<std::vector<Polynomial>>> transform;
  GroebnerStats stats;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
  bool is_zero_ideal() const { return basis.empty(); }
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

/// f = sum quotients[i] * divisors[i] + remainder, no remainder term divisible
/// by any leading monomial. The lowest-index divisor wins ties.
DivisionResult reduce(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);

/// Remainder only; divisors must already be sorted under `order`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const ReducedGB& gb);

struct GroebnerOptions {
  bool with_transform = false;
  /// Overrides the process-wide budget when set.
  std::optional<std::chrono::milliseconds> budget;
};

/// Zero generators are dropped; an empty list yields the zero ideal.
/// Throws BudgetExceeded when the time budget runs out.
ReducedGB groebner(std::span<const Polynomial> gens, const MonomialOrder& order, const GroebnerOptions& options = {});
ReducedGB groebner(std::span<const Polynomial> gens, const MonomialOrder& order, bool with_transform);

/// Every S-pair of `basis` reduces to zero (exhaustive check).
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& order);
/// No term of any element is divisible by another element's leading monomial.
bool is_reduced(std::span<const Polynomial> basis, const MonomialOrder& order);

/// Writes f in terms of the inputs recorded in a tracked basis.
/// Returns nullopt when the normal form of f is nonzero.
std::optional<Certificate> certificate_from_gb(const ReducedGB& gb, const Polynomial& f);

/// Process-wide time cap for a single Groebner run. Initialized from
/// IDEALFORGE_BUDGET_SECONDS (default 600 s).
std::chrono::milliseconds default_gb_budget();
void set_default_gb_budget(std::chrono::milliseconds budget);

}  // namespace idealforge
