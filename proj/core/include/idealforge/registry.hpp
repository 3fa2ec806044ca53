#pragma once

// Named checks: each identity check is a list of steps, one per "=" in a
// displayed chain, over ideal-expression trees built from the family.

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "idealforge/expr.hpp"
#include "idealforge/family.hpp"

namespace idealforge {

enum class StepKind { Equal, Contains };

struct Step {
  std::string name;
  StepKind kind = StepKind::Equal;
  /// For Contains: lhs contains rhs.
  Expr lhs;
  Expr rhs;
};

/// Shorthand for writing displays as expressions in the Short ring.
class Builder {
 public:
  explicit Builder(const FamilyContext& ctx) : ctx_(ctx) {}

  const FamilyContext& ctx() const { return ctx_; }
  int n() const { return ctx_.n(); }
  bool literal() const { return ctx_.literal(); }

  Polynomial P(const std::string& tmpl) const { return ctx_.poly(tmpl); }
  /// Each template is expanded over {i} (and {j}, all pairs i < j).
  Expr I(const std::vector<std::string>& tmpls) const;
  Expr of(const Ideal& i) const { return Expr::leaf(i); }
  Expr principal(const std::string& tmpl) const;
  /// The corrected reading, or the literal one in literal mode.
  std::string lit(const std::string& corrected, const std::string& literal) const {
    return literal_() ? literal : corrected;
  }

  Expr K() const;
  Expr M() const;
  Expr N() const;
  Expr L() const;
  /// Level ideals of the shifted K(n-1, d^2).
  Expr K1() const;
  Expr M1() const;
  Expr N1() const;
  Expr L1() const;
  Expr C(int r) const { return of(aux_C(ctx_, r)); }
  Expr D(int r) const { return of(aux_D(ctx_, r)); }
  Expr Bk(int k, int r) const { return of(aux_Bk(ctx_, k, r)); }
  Expr zero() const { return of(ctx_.zero()); }

  /// base + (outside templates over i not in lam) + (inside templates over
  /// i, j in lam). Inside templates without {i} are added only when lam is
  /// non-empty.
  Expr lam(const std::vector<int>& lam, const std::vector<std::string>& base, const std::vector<std::string>& outside,
           const std::vector<std::string>& inside) const;
  /// Intersection of f(lam) over the 16 subsets (or the 15 non-empty ones).
  Expr cap_lambda(bool nonempty, const std::function<Expr(const std::vector<int>&)>& f) const;

 private:
  bool literal_() const { return ctx_.literal(); }
  const FamilyContext& ctx_;
};

struct CheckDef {
  enum class Kind { Identity, Membership, PrimeList, Fact, Count };

  std::string id;
  Kind kind = Kind::Identity;
  std::string summary;
  std::vector<std::string> deps;
  int min_n = 2;
  int max_n = std::numeric_limits<int>::max();
  std::function<std::vector<Step>(const Builder&)> steps;
};

/// All checks in a fixed order; dependencies precede dependents.
const std::vector<CheckDef>& registry();
const CheckDef* find_check(const std::string& id);

/// L' (or N'): every term b01^d c1i m rewritten as c1i b1i^(d^2) b04^d m,
/// using the first c1i present in the term.
Ideal rewrite_b01(const FamilyContext& ctx, const Ideal& i);
/// Exact division of every generator by a monomial; throws if not divisible.
Ideal divide_by(const Ideal& i, const Polynomial& monomial);
/// The ideal L-hat of the U : b11^(d^2) analysis.
Ideal L_hat(const FamilyContext& ctx);

}  // namespace idealforge
