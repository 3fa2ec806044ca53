#include "idealforge/ideals.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace idealforge {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)); }

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

/// Content lines with comments stripped, paired with 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    while (!t.empty() && (t.back() == ',' || t.back() == ';')) t = trim(t.substr(0, t.size() - 1));
    if (!t.empty()) out.emplace_back(no, std::move(t));
  }
  return out;
}

void require_same(const Ideal& a, const Ideal& b, std::string_view what) {
  require_same_ring(*a.ring(), *b.ring(), what);
}

/// Exact quotient a / b; throws when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  const std::vector<Polynomial> divisor{b};
  auto div = reduce(a, divisor, a.order());
  if (!div.remainder.is_zero()) throw Error("internal: inexact division while forming a quotient ideal");
  return div.quotients[0];
}

/// Extends the ring by one fresh variable placed first.
RingPtr ring_with_leading(const RingPtr& ring, const std::string& name) {
  std::vector<std::string> names{name};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  return Ring::custom(std::move(names), ring->field());
}

/// Basis elements free of the first `k` variables, moved back to `target`.
/// Under a block order splitting at k these form the reduced basis of the
/// elimination ideal for grevlex on the remaining variables.
Ideal keep_eliminated(const ReducedGB& gb, std::size_t k, const RingPtr& target) {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < k; ++v) mask |= std::uint64_t{1} << v;
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis) {
    if ((g.support_mask() & mask) == 0) kept.push_back(transfer(g, target).with_order(MonomialOrder::grevlex()));
  }
  Ideal out(target, kept);
  ReducedGB seeded;
  seeded.order = MonomialOrder::grevlex();
  seeded.ring = target;
  std::sort(kept.begin(), kept.end(), [](const Polynomial& a, const Polynomial& b) {
    return MonomialOrder::grevlex().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  seeded.basis = kept;
  seeded.inputs = out.generators();
  out.seed_gb(std::move(seeded));
  return out;
}

struct EqualityCache {
  std::mutex mutex;
  std::unordered_map<std::size_t, bool> results;
};

EqualityCache& equality_cache() {
  static EqualityCache cache;
  return cache;
}

}  // namespace

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  if (!ring_) throw Error("ideal requires a ring");
  std::unordered_set<std::size_t> seen_hash;
  for (auto& g : generators) {
    require_same_ring(*g.ring(), *ring_, "ideal generator");
    if (g.is_zero()) continue;
    Polynomial p = g.order() == MonomialOrder::grevlex() ? std::move(g) : g.with_order(MonomialOrder::grevlex());
    const std::size_t h = p.hash();
    if (seen_hash.count(h) &&
        std::any_of(gens_.begin(), gens_.end(), [&](const Polynomial& q) { return q == p; })) {
      continue;
    }
    seen_hash.insert(h);
    gens_.push_back(std::move(p));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::parse(std::string_view text, FieldPtr field) {
  auto lines = content_lines(text);
  if (lines.empty() || lines.front().second.rfind("ring:", 0) != 0) {
    throw ParseError("ideal text must start with a 'ring: <names>' header");
  }
  auto names = split_names(std::string_view(lines.front().second).substr(5));
  if (names.empty()) throw ParseError("ring header lists no variables");
  RingPtr ring = Ring::custom(names, std::move(field));
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      gens.push_back(parse_poly(ring, lines[i].second));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lines[i].first) + ": " + e.what());
    }
  }
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::parse_generators(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (const auto& [no, line] : content_lines(text)) {
    if (line.rfind("ring:", 0) == 0) continue;
    try {
      gens.push_back(parse_poly(ring, line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return Ideal(ring, std::move(gens));
}

int Ideal::max_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

const ReducedGB& Ideal::gb(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->by_order.find(order);
    if (it != cache_->by_order.end()) return *it->second;
  }
  std::shared_ptr<const ReducedGB> computed;
  if (gens_.empty()) {
    ReducedGB z;
    z.order = order;
    z.ring = ring_;
    computed = std::make_shared<const ReducedGB>(std::move(z));
  } else {
    computed = std::make_shared<const ReducedGB>(groebner(gens_, order));
  }
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->by_order.emplace(order, std::move(computed));
  return *it->second;
}

const ReducedGB& Ideal::tracked_gb() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->tracked) return *cache_->tracked;
  }
  std::shared_ptr<const ReducedGB> computed;
  if (gens_.empty()) {
    ReducedGB z;
    z.ring = ring_;
    z.transform.emplace();
    computed = std::make_shared<const ReducedGB>(std::move(z));
  } else {
    computed = std::make_shared<const ReducedGB>(groebner(gens_, MonomialOrder::grevlex(), true));
  }
  std::lock_guard lock(cache_->mutex);
  if (!cache_->tracked) cache_->tracked = computed;
  cache_->by_order.emplace(computed->order, cache_->tracked);
  return *cache_->tracked;
}

void Ideal::seed_gb(ReducedGB gb) const {
  require_same_ring(*gb.ring, *ring_, "seed_gb");
  auto order = gb.order;
  std::lock_guard lock(cache_->mutex);
  cache_->by_order.emplace(order, std::make_shared<const ReducedGB>(std::move(gb)));
}

bool Ideal::has_cached_gb(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mutex);
  return cache_->by_order.count(order) != 0;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  require_same_ring(*f.ring(), *ring_, "normal_form");
  return idealforge::normal_form(f, gb());
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return normal_form(f).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same(*this, other, "containment");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const { return gb().is_unit(); }

bool Ideal::is_zero_ideal() const { return gens_.empty(); }

std::size_t Ideal::fingerprint() const {
  std::vector<std::size_t> hs;
  hs.reserve(gens_.size());
  for (const auto& g : gens_) hs.push_back(g.hash());
  std::sort(hs.begin(), hs.end());
  std::size_t h = std::hash<std::string>{}(ring_->field()->name());
  for (const auto& n : ring_->names()) h = mix(h, std::hash<std::string>{}(n));
  for (auto x : hs) h = mix(h, x);
  return h;
}

std::string Ideal::to_text() const {
  std::string out = "ring:";
  for (const auto& n : ring_->names()) out += " " + n;
  out += "\n";
  for (const auto& g : gens_) out += g.to_string() + "\n";
  return out;
}

// ------------------------------------------------------------- operations

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same(i, j, "ideal_sum");
  std::vector<Polynomial> gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return Ideal(i.ring(), std::move(gens));
}

Ideal ideal_sum(const std::vector<Ideal>& parts) {
  if (parts.empty()) throw Error("ideal_sum of an empty list");
  std::vector<Polynomial> gens;
  for (const auto& p : parts) {
    require_same(parts.front(), p, "ideal_sum");
    gens.insert(gens.end(), p.generators().begin(), p.generators().end());
  }
  return Ideal(parts.front().ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same(i, j, "ideal_product");
  std::vector<Polynomial> gens;
  for (const auto& a : i.generators()) {
    for (const auto& b : j.generators()) gens.push_back(a * b);
  }
  return Ideal(i.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
  require_same(i, j, "ideal_intersect");
  if (i.is_zero_ideal() || j.is_zero_ideal()) return Ideal::zero(i.ring());
  if (i.fingerprint() == j.fingerprint()) return i;
  if (i.is_unit()) return j;
  if (j.is_unit()) return i;
  const std::string t = fresh_variable_name(*i.ring(), "t");
  RingPtr rt = ring_with_leading(i.ring(), t);
  const auto tv = Polynomial::variable(rt, std::size_t{0});
  const auto one_minus_t = Polynomial::constant(rt, 1) - tv;
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(tv * transfer(g, rt));
  for (const auto& g : j.generators()) gens.push_back(one_minus_t * transfer(g, rt));
  if (j.contains(i)) return i;
  if (i.contains(j)) return j;
  auto gb = groebner(gens, MonomialOrder::block(1));
  return keep_eliminated(gb, 1, i.ring());
}

Ideal ideal_intersect(const std::vector<Ideal>& parts) {
  if (parts.empty()) throw Error("ideal_intersect of an empty list");
  std::vector<Ideal> pool = parts;
  auto shared = [](const Ideal& a, const Ideal& b) {
    std::size_t n = 0;
    for (const auto& f : a.gb().basis) {
      for (const auto& g : b.gb().basis) {
        if (f == g) {
          ++n;
          break;
        }
      }
    }
    return n;
  };
  while (pool.size() > 1) {
    std::size_t ba = 0, bb = 1, best_shared = 0, best_size = SIZE_MAX;
    for (std::size_t a = 0; a < pool.size(); ++a) {
      for (std::size_t b = a + 1; b < pool.size(); ++b) {
        const std::size_t sh = shared(pool[a], pool[b]);
        const std::size_t sz = pool[a].gb().basis.size() + pool[b].gb().basis.size();
        if (sh > best_shared || (sh == best_shared && sz < best_size)) {
          ba = a, bb = b, best_shared = sh, best_size = sz;
        }
      }
    }
    pool[ba] = ideal_intersect(pool[ba], pool[bb]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(bb));
  }
  return pool.front();
}

Ideal ideal_quotient(const Ideal& i, const Polynomial& f) {
  require_same_ring(*f.ring(), *i.ring(), "ideal_quotient");
  if (f.is_zero()) throw Error("ideal_quotient: quotient by the zero polynomial");
  if (f.is_constant() || i.is_zero_ideal()) return i;
  if (i.contains(f)) return Ideal::unit(i.ring());
  const Ideal fi(i.ring(), {f});
  const Ideal meet = ideal_intersect(i, fi);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(exact_divide(g, f.with_order(g.order())));
  return Ideal(i.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j) {
  require_same(i, j, "ideal_quotient");
  if (j.is_zero_ideal()) throw Error("ideal_quotient: quotient by the zero ideal");
  std::vector<Ideal> parts;
  for (const auto& g : j.generators()) parts.push_back(ideal_quotient(i, g));
  return ideal_intersect(parts);
}

Ideal saturate(const Ideal& i, const Polynomial& f) {
  if (f.is_zero()) throw Error("saturate: the zero polynomial");
  Ideal cur = i;
  for (int step = 0; step < 64; ++step) {
    Ideal next = ideal_quotient(cur, f);
    // cur is always contained in cur : f, so one inclusion suffices.
    if (cur.contains(next)) return cur;
    cur = std::move(next);
  }
  throw Error("saturate: no stabilization within 64 quotient steps");
}

Ideal eliminate(const Ideal& i, const std::vector<std::string>& vars) {
  if (vars.empty()) return i;
  const RingPtr& ring = i.ring();
  std::vector<std::string> names;
  for (const auto& v : vars) {
    ring->index(v);
    if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
  }
  const std::size_t k = names.size();
  for (const auto& n : ring->names()) {
    if (std::find(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(k), n) == names.begin() + static_cast<std::ptrdiff_t>(k)) {
      names.push_back(n);
    }
  }
  if (i.is_zero_ideal()) return i;
  RingPtr permuted = Ring::custom(names, ring->field());
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(transfer(g, permuted));
  auto gb = groebner(gens, MonomialOrder::block(k));
  return keep_eliminated(gb, k, ring);
}

std::optional<ContainmentWitness> containment_failure(const Ideal& i, const Ideal& j) {
  require_same(i, j, "containment");
  for (const auto& g : i.generators()) {
    auto nf = j.normal_form(g);
    if (!nf.is_zero()) return ContainmentWitness{g, nf};
  }
  return std::nullopt;
}

bool ideal_contains(const Ideal& big, const Ideal& small) { return !containment_failure(small, big); }

IdealComparison compare_ideals(const Ideal& i, const Ideal& j) {
  require_same(i, j, "ideal_equal");
  IdealComparison out;
  if (i.fingerprint() == j.fingerprint()) {
    out.equal = true;
    return out;
  }
  if (auto w = containment_failure(i, j)) {
    out.failing_side = "lhs";
    out.witness = std::move(w);
    return out;
  }
  if (auto w = containment_failure(j, i)) {
    out.failing_side = "rhs";
    out.witness = std::move(w);
    return out;
  }
  out.equal = true;
  return out;
}

bool ideal_equal(const Ideal& i, const Ideal& j) {
  require_same(i, j, "ideal_equal");
  const std::size_t a = i.fingerprint(), b = j.fingerprint();
  if (a == b) return true;
  const std::size_t key = mix(std::min(a, b), std::max(a, b));
  auto& cache = equality_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.results.find(key); it != cache.results.end()) return it->second;
  }
  const bool eq = compare_ideals(i, j).equal;
  std::lock_guard lock(cache.mutex);
  cache.results.emplace(key, eq);
  return eq;
}

bool radical_member(const Ideal& i, const Polynomial& f) {
  require_same_ring(*f.ring(), *i.ring(), "radical_member");
  if (f.is_zero()) return true;
  if (i.contains(f)) return true;
  const std::string u = fresh_variable_name(*i.ring(), "u");
  RingPtr ru = ring_with_leading(i.ring(), u);
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(transfer(g, ru));
  gens.push_back(Polynomial::constant(ru, 1) - Polynomial::variable(ru, std::size_t{0}) * transfer(f, ru));
  return groebner(gens, MonomialOrder::grevlex()).is_unit();
}

std::optional<Certificate> member_certificate(const Ideal& i, const Polynomial& f) {
  require_same_ring(*f.ring(), *i.ring(), "member_certificate");
  if (i.is_zero_ideal()) {
    if (!f.is_zero()) return std::nullopt;
    return Certificate{f, {}, -1};
  }
  return certificate_from_gb(i.tracked_gb(), f);
}

// ------------------------------------------------ degree-bounded certificates

namespace {

/// All monomials of exactly degree d in nvars variables.
void monomials_of_degree(std::size_t nvars, int d, std::vector<Monomial>& out) {
  Monomial m;
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == nvars) {
      m.set(v, static_cast<std::uint16_t>(left));
      out.push_back(m);
      m.set(v, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(v, static_cast<std::uint16_t>(e));
      rec(v + 1, left - e);
    }
    m.set(v, 0);
  };
  rec(0, d);
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

/// Column echelon form with distinct leading monomials; each stored vector
/// remembers its expression in the original unknowns.
class Echelon {
 public:
  explicit Echelon(const Field& k) : k_(k) {}

  using Combo = std::map<std::size_t, Scalar>;

  /// Reduces v by stored pivots, updating its combination. Returns the residue.
  Polynomial reduce(Polynomial v, Combo& combo) const {
    while (!v.is_zero()) {
      auto it = pivot_.find(v.leading_monomial());
      if (it == pivot_.end()) break;
      const Row& row = rows_[it->second];
      const Scalar c = v.leading_coeff();
      v -= row.vec.scaled(c);
      for (const auto& [u, a] : row.combo) axpy(combo, u, k_.neg(k_.mul(c, a)));
    }
    return v;
  }

  void insert(Polynomial v, Combo combo) {
    v = reduce(std::move(v), combo);
    if (v.is_zero()) return;
    const Scalar inv = k_.inv(v.leading_coeff());
    v = v.scaled(inv);
    for (auto& [u, a] : combo) a = k_.mul(a, inv);
    pivot_.emplace(v.leading_monomial(), rows_.size());
    rows_.push_back({std::move(v), std::move(combo)});
  }

 private:
  struct Row {
    Polynomial vec;
    Combo combo;
  };

  void axpy(Combo& combo, std::size_t u, const Scalar& a) const {
    auto [it, inserted] = combo.emplace(u, a);
    if (!inserted) {
      it->second = k_.add(it->second, a);
      if (k_.is_zero(it->second)) combo.erase(it);
    }
  }

  const Field& k_;
  std::vector<Row> rows_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivot_;
};

}  // namespace

std::optional<DegreeCertificate> min_degree_certificate(const Ideal& i, const Polynomial& f, int max_degree,
                                                        std::size_t max_unknowns) {
  require_same_ring(*f.ring(), *i.ring(), "min_degree_certificate");
  const RingPtr& ring = i.ring();
  const auto& gens = i.generators();
  const Field& k = *ring->field();
  if (f.is_zero()) {
    DegreeCertificate out;
    out.certificate.target = f;
    for (std::size_t g = 0; g < gens.size(); ++g) out.certificate.coefficients.emplace_back(ring);
    return out;
  }
  if (gens.empty() || max_degree < 0) return std::nullopt;

  const double total = static_cast<double>(gens.size()) * binomial(ring->nvars() + static_cast<std::size_t>(max_degree),
                                                                   static_cast<std::size_t>(max_degree));
  if (total > static_cast<double>(max_unknowns)) {
    throw BudgetExceeded("min_degree_certificate: " + std::to_string(static_cast<long long>(total)) +
                         " unknowns exceed the limit of " + std::to_string(max_unknowns));
  }

  Echelon ech(k);
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  const Polynomial target = f.with_order(MonomialOrder::grevlex());
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<Monomial> mons;
    monomials_of_degree(ring->nvars(), d, mons);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (const auto& m : mons) {
        const std::size_t u = unknowns.size();
        unknowns.emplace_back(g, m);
        ech.insert(gens[g].mul_term(m, k.one()), Echelon::Combo{{u, k.one()}});
      }
    }
    Echelon::Combo combo;
    if (!ech.reduce(target, combo).is_zero()) continue;
    // target - sum(combo) = 0, so the certificate is the negated combination.
    std::vector<std::vector<Term>> coeff_terms(gens.size());
    for (const auto& [u, a] : combo) coeff_terms[unknowns[u].first].push_back({unknowns[u].second, k.neg(a)});
    DegreeCertificate out;
    out.degree = d;
    out.certificate.target = f;
    for (auto& ts : coeff_terms) {
      auto c = Polynomial::from_terms(ring, std::move(ts));
      out.certificate.max_coeff_degree = std::max(out.certificate.max_coeff_degree, c.total_degree());
      out.certificate.coefficients.push_back(std::move(c));
    }
    return out;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- primality

std::string to_string(PrimeStatus s) {
  switch (s) {
    case PrimeStatus::Prime: return "Prime";
    case PrimeStatus::NotPrime: return "NotPrime";
    case PrimeStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string fresh_variable_name(const Ring& ring, const std::string& stem) {
  if (!ring.index_of(stem)) return stem;
  for (int k = 0;; ++k) {
    std::string name = stem + "x" + std::to_string(k);
    if (!ring.index_of(name)) return name;
  }
}

namespace {

/// Variable v such that g = c*v + h with h free of v, if any.
std::optional<std::size_t> peelable_variable(const Polynomial& g) {
  const std::size_t nv = g.ring()->nvars();
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t hits = 0;
    bool linear_alone = false;
    for (const auto& t : g.terms()) {
      if (t.monomial[v] == 0) continue;
      ++hits;
      linear_alone = t.monomial.degree() == 1;
    }
    if (hits == 1 && linear_alone) return v;
  }
  return std::nullopt;
}

enum class Shape { Prime, Reducible, Unknown };

struct ShapeVerdict {
  Shape shape;
  std::string reason;
};

ShapeVerdict classify_single(const Polynomial& g) {
  if (g.size() == 1) {
    if (g.total_degree() >= 2) return {Shape::Reducible, "residual monomial " + g.to_string() + " is a product"};
    return {Shape::Prime, "residual is a variable"};
  }
  if (g.size() != 2) return {Shape::Unknown, "residual " + g.to_string() + " has no certified shape"};
  const Monomial& a = g.terms()[0].monomial;
  const Monomial& b = g.terms()[1].monomial;
  const Monomial common = gcd(a, b);
  if (!common.is_one()) {
    return {Shape::Reducible, "binomial " + g.to_string() + " has the monomial factor " + format_monomial(*g.ring(), common)};
  }
  unsigned e = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) e = std::gcd(e, static_cast<unsigned>(a[v]) + b[v]);
  if (e == 1) {
    bool quadric = a.degree() == 2 && b.degree() == 2 && std::popcount(a.support_mask() | b.support_mask()) == 4;
    return {Shape::Prime, quadric ? "quadric u*v - w*x on four distinct variables" : "binomial with exponent gcd 1"};
  }
  return {Shape::Reducible, "binomial " + g.to_string() + " has exponent gcd " + std::to_string(e) + " and splits"};
}

}  // namespace

PrimalityVerdict is_prime_structural(const Ideal& p) {
  PrimalityVerdict out;
  const RingPtr& ring = p.ring();
  const Field& k = *ring->field();
  std::vector<Polynomial> gens = p.generators();
  if (gens.empty()) {
    out.status = PrimeStatus::Prime;
    out.reason = "zero ideal of a polynomial ring";
    return out;
  }

  auto normalize = [&](std::vector<Polynomial>& list) {
    std::vector<Polynomial> kept;
    for (auto& g : list) {
      if (g.is_zero()) continue;
      Polynomial m = g.monic();
      if (std::none_of(kept.begin(), kept.end(), [&](const Polynomial& q) { return q == m; })) kept.push_back(std::move(m));
    }
    list = std::move(kept);
  };

  for (;;) {
    normalize(gens);
    if (std::any_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_constant(); })) {
      out.status = PrimeStatus::NotPrime;
      out.residual = {Polynomial::constant(ring, 1)};
      out.reason = "unit ideal";
      return out;
    }
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      auto v = peelable_variable(gens[gi]);
      if (!v) continue;
      if (!pick || gens[gi].size() < gens[pick->first].size()) pick = std::make_pair(gi, *v);
    }
    if (!pick) break;
    const auto [gi, v] = *pick;
    const Polynomial g = gens[gi];
    Scalar c = k.zero();
    std::vector<Term> rest;
    for (const auto& t : g.terms()) {
      if (t.monomial[v] != 0) {
        c = t.coeff;
      } else {
        rest.push_back(t);
      }
    }
    const Polynomial h = Polynomial::from_sorted_terms(ring, std::move(rest), g.order());
    const Polynomial image = h.scaled(k.neg(k.inv(c)));
    out.reduction.push_back(ring->name(v) + " := " + image.to_string());
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(gi));
    Substitution sub(ring, ring);
    sub.map(v, image);
    for (auto& q : gens) q = sub.apply(q);
  }

  out.residual = gens;
  if (gens.empty()) {
    out.status = PrimeStatus::Prime;
    out.reason = "every generator peeled by triangular substitution";
    return out;
  }
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if ((gens[a].support_mask() & gens[b].support_mask()) != 0) {
        out.status = PrimeStatus::Unknown;
        out.reason = "residual generators share variables";
        return out;
      }
    }
  }
  std::vector<std::string> reasons;
  bool all_prime = true;
  for (const auto& g : gens) {
    auto v = classify_single(g);
    if (v.shape == Shape::Reducible) {
      out.status = PrimeStatus::NotPrime;
      out.reason = v.reason;
      return out;
    }
    if (v.shape == Shape::Unknown) all_prime = false;
    reasons.push_back(v.reason);
  }
  if (!all_prime) {
    out.status = PrimeStatus::Unknown;
    out.reason = "residual outside the certified shapes";
    return out;
  }
  out.status = PrimeStatus::Prime;
  out.reason = reasons.front();
  for (std::size_t r = 1; r < reasons.size(); ++r) out.reason += "; " + reasons[r];
  if (gens.size() > 1) out.reason += " (independent variable sets)";
  return out;
}

}  // namespace idealforge
