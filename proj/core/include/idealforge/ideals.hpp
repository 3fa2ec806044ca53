#pragma once

// Ideal-level algebra on top of reduced Groebner bases.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "idealforge/groebner.hpp"

namespace idealforge {

/// Finite generator list with a shared, write-once-per-order GB cache.
/// Generators are nonzero and pairwise distinct; copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// Parses "ring: <names>" followed by one polynomial per line.
  static Ideal parse(std::string_view text, FieldPtr field);
  /// Parses one polynomial per line into an existing ring; '#' comments.
  static Ideal parse_generators(std::string_view text, const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool has_no_generators() const { return gens_.empty(); }
  int max_degree() const;

  /// Cached reduced GB. Thread-safe; computed once per order.
  const ReducedGB& gb(const MonomialOrder& order = MonomialOrder::grevlex()) const;
  /// Cached basis with transform tracking (grevlex).
  const ReducedGB& tracked_gb() const;
  /// Seeds the cache with an already-known reduced basis.
  void seed_gb(ReducedGB gb) const;
  bool has_cached_gb(const MonomialOrder& order) const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero_ideal() const;

  /// Order-independent hash of the generator set.
  std::size_t fingerprint() const;
  /// Header "ring: ..." plus one generator per line.
  std::string to_text() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const ReducedGB>> by_order;
    std::shared_ptr<const ReducedGB> tracked;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// A generator of one side missing from the other, with its normal form.
struct ContainmentWitness {
  Polynomial generator;
  Polynomial normal_form;
};

struct IdealComparison {
  bool equal = false;
  /// "lhs" when a generator of the left side is not in the right, else "rhs".
  std::string failing_side;
  std::optional<ContainmentWitness> witness;
};

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_sum(const std::vector<Ideal>& parts);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_intersect(const Ideal& i, const Ideal& j);
Ideal ideal_intersect(const std::vector<Ideal>& parts);
/// I : f. Throws Error when f = 0.
Ideal ideal_quotient(const Ideal& i, const Polynomial& f);
/// I : J as the intersection of I : g over the generators g of J.
Ideal ideal_quotient(const Ideal& i, const Ideal& j);
/// Stabilized iterated quotient; fails beyond 64 steps.
Ideal saturate(const Ideal& i, const Polynomial& f);
/// Generators of I intersected with the subring omitting `vars`.
Ideal eliminate(const Ideal& i, const std::vector<std::string>& vars);

bool ideal_equal(const Ideal& i, const Ideal& j);
/// Equality with a witness on failure.
IdealComparison compare_ideals(const Ideal& i, const Ideal& j);
/// I subset of J, with a witness generator of I on failure.
std::optional<ContainmentWitness> containment_failure(const Ideal& i, const Ideal& j);
bool ideal_contains(const Ideal& big, const Ideal& small);

/// f in rad(I), via 1 in I + (1 - u f) over a fresh variable u.
bool radical_member(const Ideal& i, const Polynomial& f);

/// Certificate over the ideal's own generator list, or nullopt.
std::optional<Certificate> member_certificate(const Ideal& i, const Polynomial& f);

struct DegreeCertificate {
  int degree = 0;
  Certificate certificate;
};

/// Smallest D <= max_degree with f = sum c_i g_i, deg c_i <= D, found by
/// exact linear algebra over the monomial basis. Throws BudgetExceeded
/// when the unknown count would pass max_unknowns.
std::optional<DegreeCertificate> min_degree_certificate(const Ideal& i, const Polynomial& f, int max_degree,
                                                        std::size_t max_unknowns = 5'000'000);

enum class PrimeStatus { Prime, NotPrime, Unknown };

std::string to_string(PrimeStatus s);

struct PrimalityVerdict {
  PrimeStatus status = PrimeStatus::Unknown;
  /// Substitutions applied, e.g. "c11 := b12^4*c12".
  std::vector<std::string> reduction;
  std::vector<Polynomial> residual;
  std::string reason;
};

/// Peels triangular generators (a variable minus a polynomial in the other
/// variables) and classifies what is left. Never answers Prime for an
/// ideal outside the certified shapes.
PrimalityVerdict is_prime_structural(const Ideal& p);

/// A variable name not yet used in the ring, derived from `stem`.
std::string fresh_variable_name(const Ring& ring, const std::string& stem);

}  // namespace idealforge
