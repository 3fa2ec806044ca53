#include "idealforge/expr.hpp"

#include <algorithm>
#include <sstream>

namespace idealforge {

namespace {

std::string leaf_key(const Ideal& i) {
  std::vector<std::string> gens;
  for (const auto& g : i.generators()) gens.push_back(g.to_string());
  std::sort(gens.begin(), gens.end());
  std::string key = "(";
  for (std::size_t k = 0; k < gens.size(); ++k) key += (k ? "," : "") + gens[k];
  return key + ")";
}

const char* tag_of(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Leaf: return "leaf";
    case Expr::Kind::Sum: return "sum";
    case Expr::Kind::Product: return "prod";
    case Expr::Kind::Intersect: return "cap";
    case Expr::Kind::Quotient: return "colon";
    case Expr::Kind::QuotientIdeal: return "colonI";
    case Expr::Kind::Saturate: return "sat";
  }
  return "?";
}

}  // namespace

Expr Expr::leaf(Ideal ideal) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Leaf;
  n->ring = ideal.ring();
  n->key = leaf_key(ideal);
  n->ideal = std::move(ideal);
  return Expr(std::move(n));
}

Expr Expr::make(Kind kind, std::string tag, std::vector<Expr> args, std::optional<Polynomial> poly) {
  if (args.empty()) throw Error(std::string(tag_of(kind)) + " of no ideals");
  for (const auto& a : args) {
    if (!a.valid()) throw Error("expression argument is empty");
    if (!a.ring()->same_as(*args.front().ring())) throw RingMismatch("expression arguments live in different rings");
  }
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->ring = args.front().ring();
  std::string key = std::move(tag) + "[";
  // Sums and intersections are commutative; order their keys.
  std::vector<std::string> keys;
  for (const auto& a : args) keys.push_back(a.key());
  if (kind == Kind::Sum || kind == Kind::Intersect || kind == Kind::Product) std::sort(keys.begin(), keys.end());
  for (std::size_t k = 0; k < keys.size(); ++k) key += (k ? ";" : "") + keys[k];
  if (poly) key += "|" + poly->to_string();
  n->key = key + "]";
  n->args = std::move(args);
  n->poly = std::move(poly);
  return Expr(std::move(n));
}

Expr Expr::sum(std::vector<Expr> parts) {
  if (parts.size() == 1) return parts.front();
  return make(Kind::Sum, "sum", std::move(parts), std::nullopt);
}

Expr Expr::product(std::vector<Expr> parts) {
  if (parts.size() == 1) return parts.front();
  return make(Kind::Product, "prod", std::move(parts), std::nullopt);
}

Expr Expr::intersect(std::vector<Expr> parts) {
  if (parts.size() == 1) return parts.front();
  return make(Kind::Intersect, "cap", std::move(parts), std::nullopt);
}

Expr Expr::quotient(Expr e, Polynomial f) {
  if (f.is_zero()) throw Error("colon by the zero polynomial");
  return make(Kind::Quotient, "colon", {std::move(e)}, std::move(f));
}

Expr Expr::quotient(Expr e, Expr j) { return make(Kind::QuotientIdeal, "colonI", {std::move(e), std::move(j)}, std::nullopt); }

Expr Expr::saturate(Expr e, Polynomial f) { return make(Kind::Saturate, "sat", {std::move(e)}, std::move(f)); }

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator&(const Expr& a, const Expr& b) { return Expr::intersect({a, b}); }
Expr operator/(const Expr& a, const Polynomial& f) { return Expr::quotient(a, f); }

Ideal Evaluator::evaluate(const Expr& e) {
  std::promise<Ideal> promise;
  std::shared_future<Ideal> fut;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(e.key());
    if (it != memo_.end()) {
      fut = it->second;
    } else {
      fut = promise.get_future().share();
      memo_.emplace(e.key(), fut);
      owner = true;
    }
  }
  if (!owner) return fut.get();
  try {
    promise.set_value(compute(e));
  } catch (...) {
    promise.set_exception(std::current_exception());
    // Allow a later retry (e.g. after a budget change) instead of caching the failure.
    std::lock_guard lock(mutex_);
    memo_.erase(e.key());
  }
  return fut.get();
}

std::size_t Evaluator::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

Ideal Evaluator::compute(const Expr& e) {
  const auto& n = *e.node_;
  std::vector<Ideal> args;
  for (const auto& a : n.args) args.push_back(evaluate(a));
  switch (n.kind) {
    case Expr::Kind::Leaf: return *n.ideal;
    case Expr::Kind::Sum: return ideal_sum(args);
    case Expr::Kind::Product: {
      Ideal acc = args.front();
      for (std::size_t k = 1; k < args.size(); ++k) acc = ideal_product(acc, args[k]);
      return acc;
    }
    case Expr::Kind::Intersect: return ideal_intersect(args);
    case Expr::Kind::Quotient: return ideal_quotient(args.front(), *n.poly);
    case Expr::Kind::QuotientIdeal: return ideal_quotient(args[0], args[1]);
    case Expr::Kind::Saturate: return saturate(args.front(), *n.poly);
  }
  throw Error("unknown expression kind");
}

}  // namespace idealforge
