#pragma once

// Exact coefficient arithmetic: rationals (GMP) and word-size prime fields.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "idealforge/error.hpp"

namespace idealforge {

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::optional<std::uint64_t> modulus;
  /// Order m of the roots of unity the field must contain.
  std::uint64_t unity_order = 1;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p, std::uint64_t unity_order = 1) {
    return {FieldKind::PrimeField, p, unity_order};
  }
};

/// A field element. The owning Field decides which alternative is live:
/// residues in [0, p) for prime fields, canonical mpq for the rationals.
class Scalar {
 public:
  Scalar() : value_(std::uint64_t{0}) {}
  explicit Scalar(std::uint64_t residue) : value_(residue) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

  bool is_residue() const { return std::holds_alternative<std::uint64_t>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  std::variant<std::uint64_t, mpq_class> value_;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable field handle. All arithmetic on Scalars goes through it.
class Field {
 public:
  /// Validates the spec and returns a shared handle.
  static FieldPtr make(const FieldSpec& spec);

  /// Q with unity order 2.
  static FieldPtr rationals();

  /// Smallest prime p > 2^30 with p = 1 (mod unity_order).
  static std::uint64_t default_verification_prime(std::uint64_t unity_order);

  const FieldSpec& spec() const { return spec_; }
  FieldKind kind() const { return spec_.kind; }
  bool is_prime_field() const { return spec_.kind == FieldKind::PrimeField; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t unity_order() const { return spec_.unity_order; }

  bool same_as(const Field& other) const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Throws ParseError if the fraction has a denominator divisible by p.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws Error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, std::uint64_t e) const;

  /// Multiplicative order of a (0 for the zero element, 0 over Q if infinite).
  std::uint64_t multiplicative_order(const Scalar& a) const;

  /// The smallest-residue primitive m-th root of unity.
  Scalar root_of_unity(std::uint64_t m) const;
  /// All m-th roots of unity (every order dividing m), sorted by residue.
  std::vector<Scalar> roots_of_unity(std::uint64_t m) const;

  /// Decimal integer, "a/b", or signed residue with no suffix.
  std::string format(const Scalar& a) const;
  /// "r mod p" for prime fields; same as format() over Q.
  std::string describe(const Scalar& a) const;
  /// Parses an integer or "a/b" literal into this field.
  Scalar parse(std::string_view text) const;

  /// Uniform integer in [lo, hi] mapped into the field.
  Scalar random_small(std::mt19937_64& rng, int lo, int hi) const;
  /// Uniform nonzero element (prime fields) or small nonzero rational.
  Scalar random_nonzero(std::mt19937_64& rng) const;

 private:
  explicit Field(FieldSpec spec);

  FieldSpec spec_;
  std::uint64_t p_ = 0;
};

/// Deterministic primality test valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace idealforge
