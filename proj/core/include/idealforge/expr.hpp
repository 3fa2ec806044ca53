#pragma once

// Ideal-expression trees with memoized, thread-safe evaluation.

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "idealforge/ideals.hpp"

namespace idealforge {

class Expr {
 public:
  enum class Kind { Leaf, Sum, Product, Intersect, Quotient, Saturate, QuotientIdeal };

  Expr() = default;

  /// A concrete ideal; its structural key is derived from the generator set.
  static Expr leaf(Ideal ideal);
  static Expr sum(std::vector<Expr> parts);
  static Expr product(std::vector<Expr> parts);
  static Expr intersect(std::vector<Expr> parts);
  static Expr quotient(Expr e, Polynomial f);
  static Expr quotient(Expr e, Expr j);
  static Expr saturate(Expr e, Polynomial f);

  Kind kind() const { return node_->kind; }
  const std::string& key() const { return node_->key; }
  bool valid() const { return node_ != nullptr; }
  const RingPtr& ring() const { return node_->ring; }

 private:
  struct Node {
    Kind kind = Kind::Leaf;
    std::string key;
    RingPtr ring;
    std::optional<Ideal> ideal;
    std::vector<Expr> args;
    std::optional<Polynomial> poly;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Kind kind, std::string tag, std::vector<Expr> args, std::optional<Polynomial> poly);

  std::shared_ptr<const Node> node_;
  friend class Evaluator;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator&(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Polynomial& f);

/// Evaluates expressions, sharing every structurally equal subtree across
/// calls and threads.
class Evaluator {
 public:
  Ideal evaluate(const Expr& e);
  std::size_t memo_size() const;

 private:
  Ideal compute(const Expr& e);

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_future<Ideal>> memo_;
};

}  // namespace idealforge
