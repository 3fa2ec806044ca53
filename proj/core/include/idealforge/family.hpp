#pragma once

// The K_l(n,d) / K(n,d) ideal family, its sub-level ideals, auxiliary
// ideals, the prime candidates Q1..Q20 and the embedded-prime count.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "idealforge/ideals.hpp"

namespace idealforge {

struct FamilyParams {
  int n = 2;
  int d = 2;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws Error unless n, d >= 2 and the rings fit the variable limit.
void validate(const FamilyParams& p);

/// Roots of unity of order up to this value are needed by the prime
/// enumeration at (n, d), including the recursive levels.
std::uint64_t required_unity_order(const FamilyParams& p);

/// GF(p) with the smallest p > 2^30, p = 1 mod required_unity_order(p).
FieldPtr default_family_field(const FamilyParams& p);

/// Construction context: parameters, field, the Long and Short rings, and
/// whether displays are read literally or with the corrected readings.
class FamilyContext {
 public:
  FamilyContext(FamilyParams p, FieldPtr field, bool literal = false);

  const FamilyParams& params() const { return p_; }
  int n() const { return p_.n; }
  int d() const { return p_.d; }
  const FieldPtr& field() const { return field_; }
  const RingPtr& long_ring() const { return long_; }
  const RingPtr& short_ring() const { return short_; }
  bool literal() const { return literal_; }

  Polynomial var(std::string_view name) const;
  /// Parses a polynomial template in the Short ring. "{d}" expands to d and
  /// "{D}" to d^2. For n = 2, level-two names c2i and b2i are read as 1.
  Polynomial poly(std::string_view tmpl) const;
  Ideal ideal(const std::vector<std::string>& tmpls) const;
  Ideal ideal(std::vector<Polynomial> gens) const;
  Ideal zero() const { return Ideal::zero(short_); }

 private:
  FamilyParams p_;
  FieldPtr field_;
  bool literal_;
  RingPtr long_;
  RingPtr short_;
  RingPtr display_;
};

/// Expands "{i}" and "{j}" over 1..4 (i < j when both occur, unless
/// `all_pairs` is set).
std::vector<std::string> expand_indices(const std::string& tmpl, bool all_pairs = false);

struct LabeledGenerator {
  std::string label;
  int level = 0;
  Polynomial poly;
};

/// Generators of K(n,d) placed in `ring`, with every level index shifted by
/// `shift`. Level r uses b_{r+shift,i} and c_{r+shift,i}.
std::vector<LabeledGenerator> K_generators(const RingPtr& ring, int n, int d, int shift, bool literal);
/// Generators of K_l(n,d) in the Long ring of n.
std::vector<LabeledGenerator> Kl_generators(const RingPtr& long_ring, int n, int d, bool literal);

Ideal build_Kl(const FamilyContext& ctx);
Ideal build_K(const FamilyContext& ctx);
Ideal ideal_of(const RingPtr& ring, const std::vector<LabeledGenerator>& gens);

/// s_r and f_r images; a homomorphism from the Long ring to the Short ring.
Substitution eval_substitution(const FamilyContext& ctx);
Polynomial eval_map(const FamilyContext& ctx, const Polynomial& f);
Ideal eval_map(const FamilyContext& ctx, const Ideal& i);

/// b01^d c11 ... c_{n-2,1} (c_{n-1,1} - c_{n-1,4}), the Short-ring image of s_n - f_n.
Polynomial short_membership_target(const FamilyContext& ctx);
/// s_n - f_n in the Long ring.
Polynomial long_membership_target(const FamilyContext& ctx);

struct SubLevels {
  Ideal M;
  Ideal N;
  Ideal L;
};
SubLevels build_sublevels(const FamilyContext& ctx);

/// K(n-1, d^2) on the variables b_{1i}..b_{n-1,i}, c_{2i}..c_{n-1,i}, split
/// into its own level ideals.
struct Shifted {
  Ideal K1;
  Ideal M1;
  Ideal N1;
  Ideal L1;
};
Shifted build_shifted(const FamilyContext& ctx);

/// Renaming b_{ri} -> b_{r+1,i}, c_{ri} -> c_{r+1,i} from the Short ring of
/// n-1 into the Short ring of n.
Polynomial shift_up(const Polynomial& f, const RingPtr& target);
Ideal shift_up(const Ideal& i, const RingPtr& target);

/// C_r = (c_r1..c_r4), r = 1..n; C_n is the zero ideal.
Ideal aux_C(const FamilyContext& ctx, int r);
/// D_r = (c_r4 - c_r1, c_r3 - c_r2, c_r2 - c_r1), r = 1..n; D_n is zero.
Ideal aux_D(const FamilyContext& ctx, int r);
/// B_r = B_{2,r}; B_0 = B_1 = 0.
Ideal aux_B(const FamilyContext& ctx, int r);
/// B_{kr} = (1 - b_{ji} | j = k..r); zero when k > r.
Ideal aux_Bk(const FamilyContext& ctx, int k, int r);

struct PrimeArgs {
  std::optional<std::vector<int>> lambda;
  std::optional<Scalar> alpha;
  std::optional<Scalar> beta;
  std::optional<int> t;
};

struct PrimeCandidate {
  std::string family_id;
  PrimeArgs args;
  /// 0 for the top level, k for primes lifted from K(n-k, d^(2^k)).
  int depth = 0;
  Ideal ideal;

  std::string label(const Field& field) const;
};

/// The families: Q1 Q2 Q3 Q4 ... Q20.
const std::vector<std::string>& prime_family_ids();

/// Throws Error for a wrong parameter arity, an empty set where a non-empty
/// one is required, a root of the wrong order, or a family that needs
/// level-two variables at n = 2.
PrimeCandidate build_prime(const FamilyContext& ctx, const std::string& family_id, const PrimeArgs& args);

struct Enumeration {
  std::vector<PrimeCandidate> primes;
  std::size_t duplicates_removed = 0;
  std::vector<std::string> notices;
};

/// Candidate list of n = 2 (direct) or n >= 3 (direct plus the recursive
/// list of K(n-1,d^2) lifted by C_1 + (b01, b02, b03, b04)).
Enumeration enumerate_primes(const FamilyContext& ctx);

/// The closed-form count 160n - 301 + 16d + n(n-1) + 31 S1 + S2 + 18 d^(2^(n-2))
/// with S1 = sum_{j=1}^{n-3} d^(2^j), S2 = sum_{j=1}^{n-3} (n-j) d^(2^j).
/// For n = 2 returns the direct list size 21 + d.
mpz_class count_primes_formula(const FamilyParams& p);

/// All nonempty subsets of {1,2,3,4} when `nonempty`, else all 16, in a fixed order.
std::vector<std::vector<int>> lambda_subsets(bool nonempty);

}  // namespace idealforge
