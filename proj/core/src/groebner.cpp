#include "idealforge/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <string>

namespace idealforge {

namespace {

using Clock = std::chrono::steady_clock;

std::atomic<std::int64_t>& budget_ms() {
  static std::atomic<std::int64_t> value = [] {
    std::int64_t seconds = 600;
    if (const char* env = std::getenv("IDEALFORGE_BUDGET_SECONDS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && v > 0) seconds = v;
    }
    return seconds * 1000;
  }();
  return value;
}

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget) : start_(Clock::now()), end_(start_ + budget), budget_(budget) {}

  void check() {
    if ((++ticks_ & 0x3FF) == 0 && Clock::now() > end_) {
      throw BudgetExceeded("Groebner computation exceeded its budget of " +
                           std::to_string(budget_.count() / 1000.0) + " s");
    }
  }

  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
  }

 private:
  Clock::time_point start_;
  Clock::time_point end_;
  std::chrono::milliseconds budget_;
  std::uint64_t ticks_ = 0;
};

/// Leading-monomial index over the current reducers, in priority order.
struct DivisorSet {
  std::vector<const Polynomial*> polys;
  std::vector<Monomial> lms;
  std::vector<Scalar> inv_lc;

  void add(const Polynomial& p, const Field& k) {
    polys.push_back(&p);
    lms.push_back(p.leading_monomial());
    inv_lc.push_back(k.inv(p.leading_coeff()));
  }

  int find(const Monomial& m) const {
    for (std::size_t i = 0; i < lms.size(); ++i) {
      if (lms[i].divides(m)) return static_cast<int>(i);
    }
    return -1;
  }
};

/// Lazily expanded multiple coeff * mult * poly, starting at term idx.
struct Stream {
  Monomial current;
  Monomial mult;
  Scalar coeff;
  const std::vector<Term>* terms;
  std::size_t idx;
};

/// Heap-based division: all pending multiples are merged on the fly, so an
/// S-polynomial or a long subtraction chain is never materialized.
class HeapReducer {
 public:
  HeapReducer(const MonomialOrder& order, const Field& field, Deadline* deadline)
      : order_(order), k_(field), deadline_(deadline) {}

  void push(const Monomial& mult, const Scalar& coeff, const Polynomial& p, std::size_t start) {
    if (start >= p.terms().size() || k_.is_zero(coeff)) return;
    Stream s{mult * p.terms()[start].monomial, mult, coeff, &p.terms(), start};
    pool_.push_back(std::move(s));
    heap_.push_back(pool_.size() - 1);
    std::push_heap(heap_.begin(), heap_.end(), cmp());
  }

  /// Reduces everything pushed so far. Remainder terms come out descending.
  /// Quotient terms per divisor are descending as well.
  void run(const DivisorSet& divs, std::vector<Term>& remainder, std::vector<std::vector<Term>>* quotients) {
    while (!heap_.empty()) {
      if (deadline_) deadline_->check();
      const Monomial m = pool_[heap_.front()].current;
      Scalar c = k_.zero();
      while (!heap_.empty() && pool_[heap_.front()].current == m) {
        std::pop_heap(heap_.begin(), heap_.end(), cmp());
        const std::size_t si = heap_.back();
        heap_.pop_back();
        Stream& s = pool_[si];
        c = k_.add(c, k_.mul(s.coeff, (*s.terms)[s.idx].coeff));
        if (++s.idx < s.terms->size()) {
          s.current = s.mult * (*s.terms)[s.idx].monomial;
          heap_.push_back(si);
          std::push_heap(heap_.begin(), heap_.end(), cmp());
        }
      }
      if (k_.is_zero(c)) continue;
      const int d = divs.find(m);
      if (d < 0) {
        remainder.push_back({m, std::move(c)});
        continue;
      }
      const Scalar q = k_.mul(c, divs.inv_lc[d]);
      const Monomial mult = m / divs.lms[d];
      if (quotients) (*quotients)[d].push_back({mult, q});
      push(mult, k_.neg(q), *divs.polys[d], 1);
    }
    pool_.clear();
  }

 private:
  struct Cmp {
    const HeapReducer* self;
    bool operator()(std::size_t a, std::size_t b) const {
      return self->order_.compare(self->pool_[a].current, self->pool_[b].current) < 0;
    }
  };
  Cmp cmp() const { return Cmp{this}; }

  const MonomialOrder& order_;
  const Field& k_;
  Deadline* deadline_;
  std::vector<Stream> pool_;
  std::vector<std::size_t> heap_;
};

Polynomial zero_like(const RingPtr& ring, const MonomialOrder& order) { return Polynomial(ring, order); }

/// sum over parts of multiplier * vec, coordinate-wise.
std::vector<Polynomial> combine_transforms(const RingPtr& ring, const MonomialOrder& order, std::size_t width,
                                           const std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>>& parts) {
  std::vector<std::vector<Term>> acc(width);
  for (const auto& [mult, vec] : parts) {
    if (mult.is_zero()) continue;
    for (std::size_t k = 0; k < width; ++k) {
      const Polynomial& t = (*vec)[k];
      if (t.is_zero()) continue;
      Polynomial prod = mult * t;
      acc[k].insert(acc[k].end(), prod.terms().begin(), prod.terms().end());
    }
  }
  std::vector<Polynomial> out;
  out.reserve(width);
  for (auto& terms : acc) out.push_back(Polynomial::from_terms(ring, std::move(terms), order));
  return out;
}

class Buchberger {
 public:
  Buchberger(RingPtr ring, MonomialOrder order, std::size_t width, bool track, Deadline& deadline)
      : ring_(std::move(ring)), order_(order), k_(*ring_->field()), width_(width), track_(track),
        deadline_(deadline), pairs_(PairLess{&order_}) {}

  void add_input(const Polynomial& g, std::size_t index) {
    std::vector<Polynomial> unit;
    if (track_) {
      unit.assign(width_, zero_like(ring_, order_));
      unit[index] = Polynomial::constant(ring_, 1).with_order(order_);
    }
    HeapReducer red(order_, k_, &deadline_);
    red.push(Monomial(), k_.one(), g, 0);
    reduce_and_insert(red, track_ ? std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>>{
                                        {Polynomial::constant(ring_, 1).with_order(order_), &unit}}
                                  : std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>>{});
  }

  void run() {
    while (!pairs_.empty()) {
      auto it = pairs_.begin();
      const Pair p = *it;
      pairs_.erase(it);
      ++stats_.pairs_reduced;
      const Polynomial& a = polys_[p.i];
      const Polynomial& b = polys_[p.j];
      const Monomial ma = p.lcm / a.leading_monomial();
      const Monomial mb = p.lcm / b.leading_monomial();
      HeapReducer red(order_, k_, &deadline_);
      red.push(ma, k_.one(), a, 1);
      red.push(mb, k_.neg(k_.one()), b, 1);
      std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>> parts;
      if (track_) {
        parts.emplace_back(Polynomial::monomial(ring_, ma, k_.one()).with_order(order_), &transforms_[p.i]);
        parts.emplace_back(Polynomial::monomial(ring_, mb, k_.neg(k_.one())).with_order(order_), &transforms_[p.j]);
      }
      if (!reduce_and_insert(red, std::move(parts))) ++stats_.zero_reductions;
    }
  }

  ReducedGB finish(const std::vector<Polynomial>& inputs) {
    // Inter-reduce tails; leading monomials are already minimal.
    std::vector<std::size_t> alive = alive_;
    std::sort(alive.begin(), alive.end(), [&](std::size_t x, std::size_t y) {
      return order_.compare(polys_[x].leading_monomial(), polys_[y].leading_monomial()) < 0;
    });
    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> transform;
    for (std::size_t pos = 0; pos < alive.size(); ++pos) {
      const std::size_t idx = alive[pos];
      DivisorSet others;
      for (std::size_t q : alive) {
        if (q != idx) others.add(polys_[q], k_);
      }
      const Polynomial& g = polys_[idx];
      HeapReducer red(order_, k_, &deadline_);
      red.push(Monomial(), k_.one(), g, 1);
      std::vector<Term> rem{g.leading_term()};
      std::vector<std::vector<Term>> quots(others.polys.size());
      red.run(others, rem, track_ ? &quots : nullptr);
      basis.push_back(Polynomial::from_sorted_terms(ring_, std::move(rem), order_));
      if (track_) {
        std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>> parts;
        parts.emplace_back(Polynomial::constant(ring_, 1).with_order(order_), &transforms_[idx]);
        std::size_t slot = 0;
        for (std::size_t q : alive) {
          if (q == idx) continue;
          if (!quots[slot].empty()) {
            parts.emplace_back(-Polynomial::from_sorted_terms(ring_, std::move(quots[slot]), order_), &transforms_[q]);
          }
          ++slot;
        }
        transform.push_back(combine_transforms(ring_, order_, width_, parts));
      }
    }
    ReducedGB out;
    out.order = order_;
    out.ring = ring_;
    out.basis = std::move(basis);
    out.inputs = inputs;
    if (track_) out.transform = std::move(transform);
    stats_.elapsed = deadline_.elapsed();
    out.stats = stats_;
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      const int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  /// Runs the reduction; inserts the monic remainder if nonzero.
  bool reduce_and_insert(HeapReducer& red, std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>> parts) {
    std::vector<Term> rem;
    std::vector<std::vector<Term>> quots(divisors_.polys.size());
    red.run(divisors_, rem, track_ ? &quots : nullptr);
    if (rem.empty()) return false;
    Polynomial h = Polynomial::from_sorted_terms(ring_, std::move(rem), order_);
    const Scalar inv = k_.inv(h.leading_coeff());
    h = h.scaled(inv);
    std::vector<Polynomial> th;
    if (track_) {
      for (std::size_t d = 0; d < quots.size(); ++d) {
        if (quots[d].empty()) continue;
        parts.emplace_back(-Polynomial::from_sorted_terms(ring_, std::move(quots[d]), order_), &transforms_[alive_[d]]);
      }
      th = combine_transforms(ring_, order_, width_, parts);
      for (auto& t : th) t = t.scaled(inv);
    }
    stats_.max_degree = std::max<std::size_t>(stats_.max_degree, static_cast<std::size_t>(h.total_degree()));
    update(std::move(h), std::move(th));
    return true;
  }

  /// Gebauer-Moeller pair update followed by reducer maintenance.
  void update(Polynomial h, std::vector<Polynomial> th) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    transforms_.push_back(std::move(th));
    const Monomial lh = polys_[hi].leading_monomial();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g : alive_) {
      const Monomial& lg = polys_[g].leading_monomial();
      c.push_back({g, lcm(lh, lg), lh.coprime_with(lg)});
    }
    // Chain criterion among the new pairs.
    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        }
        for (const auto& x : d) {
          if (!keep) break;
          if (x.lcm.divides(c[a].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[a]);
    }
    stats_.pairs_considered += c.size();
    // Drop old pairs whose lcm is strictly divisible via h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (lh.divides(it->lcm)) {
        const Monomial l1 = lcm(polys_[it->i].leading_monomial(), lh);
        const Monomial l2 = lcm(polys_[it->j].leading_monomial(), lh);
        if (!(l1 == it->lcm) && !(l2 == it->lcm)) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }
    // Product criterion: coprime pairs never enter the queue.
    for (const auto& x : d) {
      if (!x.coprime) pairs_.insert(Pair{x.g, hi, x.lcm});
    }
    std::vector<std::size_t> next;
    for (std::size_t g : alive_) {
      if (!lh.divides(polys_[g].leading_monomial())) next.push_back(g);
    }
    next.push_back(hi);
    alive_ = std::move(next);
    divisors_ = DivisorSet{};
    for (std::size_t g : alive_) divisors_.add(polys_[g], k_);
  }

  RingPtr ring_;
  MonomialOrder order_;
  const Field& k_;
  std::size_t width_;
  bool track_;
  Deadline& deadline_;
  GroebnerStats stats_;

  std::vector<Polynomial> polys_;
  std::vector<std::vector<Polynomial>> transforms_;
  std::vector<std::size_t> alive_;
  DivisorSet divisors_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace

std::chrono::milliseconds default_gb_budget() { return std::chrono::milliseconds(budget_ms().load()); }

void set_default_gb_budget(std::chrono::milliseconds budget) { budget_ms().store(budget.count()); }

bool Certificate::verify(std::span<const Polynomial> generators) const {
  if (generators.size() != coefficients.size()) return false;
  Polynomial sum(target.ring(), target.order());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!coefficients[i].is_zero()) sum += coefficients[i] * generators[i];
  }
  return sum == target;
}

DivisionResult reduce(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  const RingPtr& ring = f.ring();
  const Field& k = *ring->field();
  std::vector<Polynomial> sorted;
  sorted.reserve(divisors.size());
  for (const auto& g : divisors) {
    require_same_ring(*g.ring(), *ring, "reduce");
    sorted.push_back(g.with_order(order));
  }
  DivisorSet divs;
  std::vector<int> slot(sorted.size(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].is_zero()) continue;
    slot[i] = static_cast<int>(divs.polys.size());
    divs.add(sorted[i], k);
  }
  const Polynomial fo = f.with_order(order);
  HeapReducer red(order, k, nullptr);
  red.push(Monomial(), k.one(), fo, 0);
  std::vector<Term> rem;
  std::vector<std::vector<Term>> quots(divs.polys.size());
  red.run(divs, rem, &quots);
  DivisionResult out;
  out.remainder = Polynomial::from_sorted_terms(ring, std::move(rem), order);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (slot[i] < 0) {
      out.quotients.emplace_back(ring, order);
    } else {
      out.quotients.push_back(Polynomial::from_sorted_terms(ring, std::move(quots[slot[i]]), order));
    }
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  const Field& k = f.field();
  DivisorSet divs;
  for (const auto& g : divisors) {
    if (!g.is_zero()) divs.add(g, k);
  }
  const Polynomial fo = f.with_order(order);
  HeapReducer red(order, k, nullptr);
  red.push(Monomial(), k.one(), fo, 0);
  std::vector<Term> rem;
  red.run(divs, rem, nullptr);
  return Polynomial::from_sorted_terms(f.ring(), std::move(rem), order);
}

Polynomial normal_form(const Polynomial& f, const ReducedGB& gb) {
  require_same_ring(*f.ring(), *gb.ring, "normal_form");
  return normal_form(f, gb.basis, gb.order);
}

ReducedGB groebner(std::span<const Polynomial> gens, const MonomialOrder& order, bool with_transform) {
  GroebnerOptions opts;
  opts.with_transform = with_transform;
  return groebner(gens, order, opts);
}

ReducedGB groebner(std::span<const Polynomial> gens, const MonomialOrder& order, const GroebnerOptions& options) {
  if (gens.empty()) throw Error("groebner: need a ring; pass at least one (possibly zero) generator");
  const RingPtr ring = gens.front().ring();
  std::vector<Polynomial> inputs;
  inputs.reserve(gens.size());
  for (const auto& g : gens) {
    require_same_ring(*g.ring(), *ring, "groebner");
    inputs.push_back(g.with_order(order));
  }
  Deadline deadline(options.budget.value_or(default_gb_budget()));
  Buchberger bb(ring, order, inputs.size(), options.with_transform, deadline);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!inputs[i].is_zero()) bb.add_input(inputs[i], i);
  }
  bb.run();
  return bb.finish(inputs);
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& order) {
  if (basis.empty()) return true;
  const Field& k = basis.front().field();
  std::vector<Polynomial> sorted;
  for (const auto& g : basis) sorted.push_back(g.with_order(order).monic());
  DivisorSet divs;
  for (const auto& g : sorted) divs.add(g, k);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const Monomial l = lcm(sorted[i].leading_monomial(), sorted[j].leading_monomial());
      HeapReducer red(order, k, nullptr);
      red.push(l / sorted[i].leading_monomial(), k.one(), sorted[i], 1);
      red.push(l / sorted[j].leading_monomial(), k.neg(k.one()), sorted[j], 1);
      std::vector<Term> rem;
      red.run(divs, rem, nullptr);
      if (!rem.empty()) return false;
    }
  }
  return true;
}

bool is_reduced(std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<Polynomial> sorted;
  for (const auto& g : basis) sorted.push_back(g.with_order(order));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : sorted[i].terms()) {
        if (sorted[j].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

std::optional<Certificate> certificate_from_gb(const ReducedGB& gb, const Polynomial& f) {
  if (!gb.transform) throw Error("certificate_from_gb: basis was computed without transform tracking");
  require_same_ring(*f.ring(), *gb.ring, "certificate");
  auto div = reduce(f, gb.basis, gb.order);
  if (!div.remainder.is_zero()) return std::nullopt;
  std::vector<std::pair<Polynomial, const std::vector<Polynomial>*>> parts;
  for (std::size_t j = 0; j < gb.basis.size(); ++j) parts.emplace_back(div.quotients[j], &(*gb.transform)[j]);
  auto coeffs = combine_transforms(gb.ring, gb.order, gb.inputs.size(), parts);
  Certificate cert;
  cert.target = f;
  for (auto& c : coeffs) {
    cert.max_coeff_degree = std::max(cert.max_coeff_degree, c.total_degree());
    cert.coefficients.push_back(c.with_order(f.order()));
  }
  return cert;
}

}  // namespace idealforge
