#pragma once

// Degree-by-degree linear algebra over homogeneous components. For
// homogeneous ideals every operation below is exact in each degree, so it
// serves as an independent check of the Groebner-based operations.

#include <map>
#include <random>
#include <vector>

#include "idealforge/ideals.hpp"

namespace oracle {

using idealforge::Field;
using idealforge::Ideal;
using idealforge::Monomial;
using idealforge::Polynomial;
using idealforge::RingPtr;
using idealforge::Scalar;
using idealforge::Term;

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int deg) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      Monomial m;
      for (std::size_t k = 0; k < nvars; ++k) m.set(k, static_cast<std::uint16_t>(e[k]));
      out.push_back(m);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (deg >= 0) rec(rec, 0, deg);
  return out;
}

/// A subspace of the degree-`deg` component, kept in reduced row echelon form.
class Space {
 public:
  Space(RingPtr ring, int deg) : ring_(std::move(ring)), deg_(deg) {
    const auto monos = monomials_of_degree(ring_->nvars(), deg);
    for (std::size_t k = 0; k < monos.size(); ++k) column_[key(monos[k])] = k;
    width_ = monos.size();
  }

  int degree() const { return deg_; }
  std::size_t width() const { return width_; }
  std::size_t dim() const { return rows_.size(); }

  /// Adds f (must be homogeneous of this degree, or zero). Returns true if the span grew.
  bool add(const Polynomial& f) {
    std::vector<Scalar> v(width_, field().zero());
    for (const auto& t : f.terms()) {
      if (static_cast<int>(t.monomial.degree()) != deg_) throw idealforge::Error("oracle: inhomogeneous input");
      v[column_.at(key(t.monomial))] = t.coeff;
    }
    return insert(std::move(v));
  }

  bool contains(const Polynomial& f) const {
    Space copy = *this;
    return !copy.add(f);
  }

  bool contains(const Space& other) const {
    Space copy = *this;
    for (const auto& r : other.rows_) {
      if (copy.insert(r)) return false;
    }
    return true;
  }

  friend std::size_t dim_of_sum(const Space& a, const Space& b) {
    Space copy = a;
    for (const auto& r : b.rows_) copy.insert(r);
    return copy.dim();
  }

 private:
  const Field& field() const { return *ring_->field(); }

  static std::vector<std::uint16_t> key(const Monomial& m) {
    return std::vector<std::uint16_t>(m.exponents().begin(), m.exponents().end());
  }

  bool insert(std::vector<Scalar> v) {
    const Field& k = field();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (k.is_zero(c)) continue;
      for (std::size_t j = 0; j < width_; ++j) v[j] = k.sub(v[j], k.mul(c, rows_[r][j]));
    }
    std::size_t p = 0;
    while (p < width_ && k.is_zero(v[p])) ++p;
    if (p == width_) return false;
    const Scalar inv = k.inv(v[p]);
    for (auto& x : v) x = k.mul(x, inv);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = rows_[r][p];
      if (k.is_zero(c)) continue;
      for (std::size_t j = 0; j < width_; ++j) rows_[r][j] = k.sub(rows_[r][j], k.mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  RingPtr ring_;
  int deg_;
  std::size_t width_ = 0;
  std::map<std::vector<std::uint16_t>, std::size_t> column_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Degree-`deg` component of the ideal generated by homogeneous `gens`.
inline Space component(const RingPtr& ring, const std::vector<Polynomial>& gens, int deg) {
  Space s(ring, deg);
  const Scalar one = ring->field()->one();
  for (const auto& g : gens) {
    const int e = deg - g.total_degree();
    if (g.is_zero() || e < 0) continue;
    for (const auto& m : monomials_of_degree(ring->nvars(), e)) s.add(g.mul_term(m, one));
  }
  return s;
}

inline Space component(const Ideal& i, int deg) { return component(i.ring(), i.gb().basis, deg); }

/// Whole degree-`deg` space of the ring.
inline Space full(const RingPtr& ring, int deg) {
  Space s(ring, deg);
  const Scalar one = ring->field()->one();
  for (const auto& m : monomials_of_degree(ring->nvars(), deg)) s.add(Polynomial::monomial(ring, m, one));
  return s;
}

/// (I cap J)_deg == computed_deg.
inline bool intersection_agrees(const Ideal& i, const Ideal& j, const Ideal& computed, int deg) {
  const Space a = component(i, deg), b = component(j, deg), c = component(computed, deg);
  const std::size_t expected = a.dim() + b.dim() - dim_of_sum(a, b);
  return a.contains(c) && b.contains(c) && c.dim() == expected;
}

/// (I : f)_deg == computed_deg for homogeneous f.
inline bool quotient_agrees(const Ideal& i, const Polynomial& f, const Ideal& computed, int deg) {
  const int e = f.total_degree();
  const Space target = component(i, deg + e);
  const Space c = component(computed, deg);
  const Scalar one = i.ring()->field()->one();
  Space image(i.ring(), deg + e);
  for (const auto& m : monomials_of_degree(i.ring()->nvars(), deg)) image.add(f.mul_term(m, one));
  // dim{g : g f in I} = dim R_deg - (dim(I + f R) - dim I), as g -> g f is injective.
  const std::size_t kernel = full(i.ring(), deg).dim() - (dim_of_sum(target, image) - target.dim());
  const Space cf = [&] {
    Space s(i.ring(), deg + e);
    for (const auto& g : computed.gb().basis) {
      const int k = deg - g.total_degree();
      if (k < 0) continue;
      for (const auto& m : monomials_of_degree(i.ring()->nvars(), k)) s.add((g * f).mul_term(m, one));
    }
    return s;
  }();
  return target.contains(cf) && c.dim() == kernel;
}

/// (I cap k[vars kept])_deg == computed_deg, where computed lives in the
/// same ring and `dropped` lists the eliminated variable indices.
inline bool elimination_agrees(const Ideal& i, const std::vector<std::size_t>& dropped, const Ideal& computed,
                               int deg) {
  const Space a = component(i, deg);
  Space kept(i.ring(), deg);
  const Scalar one = i.ring()->field()->one();
  for (const auto& m : monomials_of_degree(i.ring()->nvars(), deg)) {
    bool uses = false;
    for (auto v : dropped) uses = uses || m[v] > 0;
    if (!uses) kept.add(Polynomial::monomial(i.ring(), m, one));
  }
  Space c(i.ring(), deg);
  for (const auto& g : computed.gb().basis) {
    const int e = deg - g.total_degree();
    if (g.is_zero() || e < 0) continue;
    for (const auto& m : monomials_of_degree(i.ring()->nvars(), e)) {
      bool uses = false;
      for (auto v : dropped) uses = uses || m[v] > 0;
      if (!uses) c.add(g.mul_term(m, one));
    }
  }
  const std::size_t expected = a.dim() + kept.dim() - dim_of_sum(a, kept);
  return a.contains(c) && kept.contains(c) && c.dim() == expected;
}

/// Random homogeneous polynomial of degree `deg` with coefficients in [-3, 3].
inline Polynomial random_homogeneous(const RingPtr& ring, std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (;;) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(ring->nvars(), deg)) {
      const int c = coeff(rng);
      if (c != 0 && rng() % 3 == 0) terms.push_back({m, ring->field()->from_int(c)});
    }
    auto p = Polynomial::from_terms(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

/// One to three homogeneous generators of degree 1 to 3.
inline Ideal random_homogeneous_ideal(const RingPtr& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3), degree(1, 3);
  std::vector<Polynomial> gens;
  const int c = count(rng);
  for (int k = 0; k < c; ++k) gens.push_back(random_homogeneous(ring, rng, degree(rng)));
  return Ideal(ring, std::move(gens));
}

}  // namespace oracle
