#pragma once

// Variable tables, sparse polynomials, monomial orders and substitution.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idealforge/scalars.hpp"

namespace idealforge {

/// Hard cap on ring size; exponent vectors are stored inline.
inline constexpr std::size_t kMaxVars = 48;

class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial variable(std::size_t index, std::uint16_t power = 1);

  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint16_t v);

  std::uint32_t degree() const { return deg_; }
  /// Bit i set iff variable i (i < 64) occurs.
  std::uint64_t support_mask() const { return mask_; }
  bool is_one() const { return deg_ == 0; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime_with(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.mask_ == b.mask_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;
  const std::array<std::uint16_t, kMaxVars>& exponents() const { return exps_; }

 private:
  void refresh();

  std::array<std::uint16_t, kMaxVars> exps_;
  std::uint32_t deg_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { Lex, GrevLex, Block };

/// Lex, graded reverse lex, or a two-block elimination order: variables
/// [0, block_split) compared lexicographically, ties broken by grevlex on the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::size_t block_split = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
  static MonomialOrder block(std::size_t split) { return {OrderKind::Block, split}; }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  /// Accepts "lex", "grevlex", "block:<k>".
  static MonomialOrder parse(std::string_view text);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;
};

enum class RingMode { Long, Short, Custom };

struct RingSpec {
  int n = 0;
  RingMode mode = RingMode::Custom;
  std::vector<std::string> variables;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Immutable variable table over a field.
///
/// Long(n) lists s_2..s_n, f_2..f_n, then b_{ri} by (r, i), then c_{ri} by
/// (r, i): 10n-6 variables. Short(n) omits the s and f blocks.
class Ring {
 public:
  static RingPtr make(const RingSpec& spec, FieldPtr field);
  static RingPtr long_ring(int n, FieldPtr field);
  static RingPtr short_ring(int n, FieldPtr field);
  static RingPtr custom(std::vector<std::string> names, FieldPtr field);

  static std::string s_name(int r) { return "s" + std::to_string(r); }
  static std::string f_name(int r) { return "f" + std::to_string(r); }
  static std::string b_name(int r, int i) { return "b" + std::to_string(r) + std::to_string(i); }
  static std::string c_name(int r, int i) { return "c" + std::to_string(r) + std::to_string(i); }

  const RingSpec& spec() const { return spec_; }
  RingMode mode() const { return spec_.mode; }
  int level_count() const { return spec_.n; }
  std::size_t nvars() const { return spec_.variables.size(); }
  const std::vector<std::string>& names() const { return spec_.variables; }
  const std::string& name(std::size_t i) const { return spec_.variables[i]; }
  const FieldPtr& field() const { return field_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws Error for unknown names.
  std::size_t index(std::string_view name) const;

  /// Structural equality: same variable list over the same field.
  bool same_as(const Ring& other) const;

 private:
  Ring(RingSpec spec, FieldPtr field);

  RingSpec spec_;
  FieldPtr field_;
  std::map<std::string, std::size_t, std::less<>> lookup_;
};

struct Term {
  Monomial monomial;
  Scalar coeff;
};

/// Sparse polynomial. Terms are kept strictly descending under order(),
/// with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex())
      : ring_(std::move(ring)), order_(order) {}

  /// Sorts, combines like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());
  /// Terms already strictly descending and nonzero.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return *ring_->field(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }

  /// Maximum term degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;
  std::uint64_t support_mask() const;

  /// Same polynomial with terms re-sorted under `order`.
  Polynomial with_order(const MonomialOrder& order) const;
  Polynomial monic() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  Polynomial pow(unsigned e) const;

  /// Exact polynomial equality (independent of the stored order).
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Over Q: scale to integer coefficients with content 1 and positive
  /// leading coefficient. Over F_p: monic.
  Polynomial primitive_part() const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Throws RingMismatch unless both rings agree.
void require_same_ring(const Ring& a, const Ring& b, std::string_view what);

/// Polynomial grammar: terms joined by + / -, each an optional integer or
/// a/b coefficient times *-separated powers name^k. Parentheses are also
/// accepted. Whitespace is ignored.
Polynomial parse_poly(const RingPtr& ring, std::string_view text);

std::string format_monomial(const Ring& ring, const Monomial& m);

/// Ring homomorphism from a source ring into a target ring. Variables
/// without an explicit image map to the same-named target variable.
class Substitution {
 public:
  Substitution(RingPtr source, RingPtr target);

  Substitution& map(std::string_view var, Polynomial image);
  Substitution& map(std::size_t var, Polynomial image);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }

  Polynomial apply(const Polynomial& f) const;
  Polynomial image(std::size_t var) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<std::optional<Polynomial>> images_;
};

/// Convenience: the same polynomial read in another ring with the same
/// variable names (extra target variables allowed).
Polynomial transfer(const Polynomial& f, const RingPtr& target);

}  // namespace idealforge
