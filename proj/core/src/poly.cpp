#include "idealforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace idealforge {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, std::uint16_t power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint16_t v) {
  if (i >= kMaxVars) throw Error("variable index out of range");
  exps_[i] = v;
  refresh();
}

void Monomial::refresh() {
  deg_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    deg_ += exps_[i];
    if (exps_[i] != 0 && i < 64) mask_ |= std::uint64_t{1} << i;
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t overflow = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const std::uint32_t s = std::uint32_t{a.exps_[i]} + b.exps_[i];
    overflow |= s;
    r.exps_[i] = static_cast<std::uint16_t>(s);
  }
  if (overflow > 0xFFFF) throw Error("exponent overflow (limit 65535)");
  r.deg_ = a.deg_ + b.deg_;
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  r.refresh();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

// ----------------------------------------------------------- MonomialOrder

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::GrevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = kMaxVars; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::Block: {
      std::uint32_t da = 0, db = 0;
      for (std::size_t i = 0; i < block_split; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        da += a[i];
        db += b[i];
      }
      // First blocks agree, so da == db.
      const auto ra = a.degree() - da, rb = b.degree() - db;
      if (ra != rb) return ra > rb ? 1 : -1;
      for (std::size_t i = kMaxVars; i-- > block_split;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::Block:
      return "block:" + std::to_string(block_split);
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "lex") return lex();
  if (text == "grevlex") return grevlex();
  if (text.starts_with("block:")) {
    const std::string rest(text.substr(6));
    if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); })) {
      return block(std::stoul(rest));
    }
  }
  throw ParseError("unknown monomial order '" + std::string(text) + "' (lex, grevlex, block:<k>)");
}

// -------------------------------------------------------------------- Ring

namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); });
}

std::vector<std::string> family_names(int n, bool with_sf) {
  std::vector<std::string> names;
  if (with_sf) {
    for (int r = 2; r <= n; ++r) names.push_back(Ring::s_name(r));
    for (int r = 2; r <= n; ++r) names.push_back(Ring::f_name(r));
  }
  for (int r = 0; r <= n - 1; ++r) {
    for (int i = 1; i <= 4; ++i) names.push_back(Ring::b_name(r, i));
  }
  for (int r = 1; r <= n - 1; ++r) {
    for (int i = 1; i <= 4; ++i) names.push_back(Ring::c_name(r, i));
  }
  return names;
}

}  // namespace

Ring::Ring(RingSpec spec, FieldPtr field) : spec_(std::move(spec)), field_(std::move(field)) {
  for (std::size_t i = 0; i < spec_.variables.size(); ++i) lookup_.emplace(spec_.variables[i], i);
}

RingPtr Ring::make(const RingSpec& spec, FieldPtr field) {
  if (!field) throw Error("ring requires a field");
  RingSpec s = spec;
  if (s.mode != RingMode::Custom) {
    if (s.n < 2) throw Error("level count n must be at least 2");
    if (s.n > 9) throw Error("level count n must be at most 9 (two-digit variable indices)");
    auto expected = family_names(s.n, s.mode == RingMode::Long);
    if (!s.variables.empty() && s.variables != expected) {
      throw Error("variable list does not match the Long/Short layout for n=" + std::to_string(s.n));
    }
    s.variables = std::move(expected);
  }
  if (s.variables.empty()) throw Error("ring needs at least one variable");
  if (s.variables.size() > kMaxVars) {
    throw Error("ring has " + std::to_string(s.variables.size()) + " variables; limit is " + std::to_string(kMaxVars));
  }
  std::vector<std::string> sorted = s.variables;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("duplicate variable names");
  for (const auto& v : s.variables) {
    if (!valid_name(v)) throw Error("invalid variable name '" + v + "'");
  }
  return RingPtr(new Ring(std::move(s), std::move(field)));
}

RingPtr Ring::long_ring(int n, FieldPtr field) { return make({n, RingMode::Long, {}}, std::move(field)); }
RingPtr Ring::short_ring(int n, FieldPtr field) { return make({n, RingMode::Short, {}}, std::move(field)); }
RingPtr Ring::custom(std::vector<std::string> names, FieldPtr field) {
  return make({0, RingMode::Custom, std::move(names)}, std::move(field));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error("unknown variable '" + std::string(name) + "'");
  return *i;
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (spec_.variables == other.spec_.variables && field_->same_as(*other.field_));
}

void require_same_ring(const Ring& a, const Ring& b, std::string_view what) {
  if (!a.same_as(b)) throw RingMismatch(std::string(what) + ": operands live in different rings");
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order) {
  const Field& k = *ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
  return from_sorted_terms(std::move(ring), std::move(out), order);
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order) {
  Polynomial p(std::move(ring), order);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!ring->field()->is_zero(c)) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  auto s = ring->field()->from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(index), ring->field()->one()});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const auto i = ring->index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(ring);
  if (!ring->field()->is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial[var]));
  return d;
}

bool Polynomial::uses_variable(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[var] != 0; });
}

std::uint64_t Polynomial::support_mask() const {
  std::uint64_t m = 0;
  for (const auto& t : terms_) m |= t.monomial.support_mask();
  return m;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Polynomial p = *this;
  p.order_ = order;
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || field().is_one(leading_coeff())) return *this;
  return scaled(field().inv(leading_coeff()));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Field& k = field();
  if (k.is_zero(c)) return Polynomial(ring_, order_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = k.mul(t.coeff, c);
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  const Field& k = field();
  if (k.is_zero(c)) return Polynomial(ring_, order_);
  Polynomial p(ring_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, k.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = field().neg(t.coeff);
  return p;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_ring(*a.ring(), *b.ring(), subtract ? "subtraction" : "addition");
  Polynomial converted;
  const Polynomial* bp = &b;
  if (!(b.order() == a.order())) {
    converted = b.with_order(a.order());
    bp = &converted;
  }
  const Field& k = a.field();
  const auto& ta = a.terms();
  const auto& tb = bp->terms();
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  const auto& ord = a.order();
  while (i < ta.size() || j < tb.size()) {
    int c;
    if (i == ta.size()) c = -1;
    else if (j == tb.size()) c = 1;
    else c = ord.compare(ta[i].monomial, tb[j].monomial);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back({tb[j].monomial, subtract ? k.neg(tb[j].coeff) : tb[j].coeff});
      ++j;
    } else {
      Scalar s = subtract ? k.sub(ta[i].coeff, tb[j].coeff) : k.add(ta[i].coeff, tb[j].coeff);
      if (!k.is_zero(s)) out.push_back({ta[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted_terms(a.ring(), std::move(out), a.order());
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring(), *b.ring(), "multiplication");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring(), a.order());
  if (b.size() == 1) return a.mul_term(b.leading_monomial(), b.leading_coeff());
  if (a.size() == 1) return b.with_order(a.order()).mul_term(a.leading_monomial(), a.leading_coeff());
  const Field& k = a.field();
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      Monomial m = x.monomial * y.monomial;
      Scalar c = k.mul(x.coeff, y.coeff);
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second = k.add(it->second, c);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!k.is_zero(c)) terms.push_back({m, c});
  }
  return Polynomial::from_terms(a.ring(), std::move(terms), a.order());
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = Polynomial::constant(ring_, 1).with_order(order_);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return false;
  if (a.is_zero()) return true;
  if (!a.ring()->same_as(*b.ring())) return false;
  const auto& ta = a.terms();
  const Polynomial bb = b.order() == a.order() ? b : b.with_order(a.order());
  const auto& tb = bb.terms();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!(ta[i].monomial == tb[i].monomial) || !(ta[i].coeff == tb[i].coeff)) return false;
  }
  return true;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  const Field& k = field();
  if (k.is_prime_field()) return monic();
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.rational().get_num_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  if (sgn(leading_coeff().rational()) < 0) factor = -factor;
  if (factor == 1) return *this;
  return scaled(Scalar(factor));
}

std::string format_monomial(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const Field& k = field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = k.format(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += format_monomial(*ring_, t.monomial);
    }
  }
  return out;
}

std::size_t Polynomial::hash() const {
  // Order independent so that equal polynomials hash equally.
  std::size_t h = 0;
  for (const auto& t : terms_) {
    std::size_t th = t.monomial.hash();
    if (t.coeff.is_residue()) {
      th ^= std::hash<std::uint64_t>{}(t.coeff.residue()) * 0x9e3779b97f4a7c15ull;
    } else {
      th ^= std::hash<std::string>{}(t.coeff.rational().get_str()) * 0x9e3779b97f4a7c15ull;
    }
    h += th * 0xbf58476d1ce4e5b9ull + (th >> 17);
  }
  return h ^ terms_.size();
}

// ------------------------------------------------------------------ Parser

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }
  }

  Polynomial parse() {
    if (s_.empty()) throw ParseError("empty polynomial");
    Polynomial p = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + " in '" + s_ + "': " + msg);
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      const bool minus = s_[pos_++] == '-';
      Polynomial u = term();
      acc = minus ? acc - u : acc + u;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (eat('^')) {
      const auto e = integer();
      if (e > 65535) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class num(s_.substr(start, pos_ - start), 10);
      mpz_class den = 1;
      if (eat('/')) {
        const std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected a denominator");
        den = mpz_class(s_.substr(ds, pos_ - ds), 10);
      }
      return Polynomial::constant(ring_, ring_->field()->from_fraction(num, den));
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && ((s_[pos_] >= 'a' && s_[pos_] <= 'z') || std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
        ++pos_;
      }
      const std::string name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

// ------------------------------------------------------------ Substitution

Substitution::Substitution(RingPtr source, RingPtr target)
    : source_(std::move(source)), target_(std::move(target)), images_(source_->nvars()) {
  if (!source_->field()->same_as(*target_->field())) throw RingMismatch("substitution between different fields");
}

Substitution& Substitution::map(std::string_view var, Polynomial image) { return map(source_->index(var), std::move(image)); }

Substitution& Substitution::map(std::size_t var, Polynomial image) {
  require_same_ring(*image.ring(), *target_, "substitution image");
  images_.at(var) = std::move(image);
  return *this;
}

Polynomial Substitution::image(std::size_t var) const {
  if (images_.at(var)) return *images_[var];
  auto t = target_->index_of(source_->name(var));
  if (!t) throw Error("variable '" + source_->name(var) + "' has no image in the target ring");
  return Polynomial::variable(target_, *t);
}

Polynomial Substitution::apply(const Polynomial& f) const {
  require_same_ring(*f.ring(), *source_, "substitution argument");
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, image(var).pow(e)).first;
    return it->second;
  };
  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target_, t.coeff);
    for (std::size_t v = 0; v < source_->nvars() && !prod.is_zero(); ++v) {
      if (t.monomial[v] != 0) prod = prod * power(v, t.monomial[v]);
    }
    for (const auto& u : prod.terms()) acc.push_back(u);
  }
  return Polynomial::from_terms(target_, std::move(acc), f.order());
}

Polynomial transfer(const Polynomial& f, const RingPtr& target) {
  if (f.ring()->same_as(*target)) return f;
  if (!f.ring()->field()->same_as(*target->field())) throw RingMismatch("transfer between different fields");
  const Ring& src = *f.ring();
  std::vector<std::optional<std::size_t>> slot(src.nvars());
  for (std::size_t v = 0; v < src.nvars(); ++v) slot[v] = target->index_of(src.name(v));
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < src.nvars(); ++v) {
      if (t.monomial[v] == 0) continue;
      if (!slot[v]) throw RingMismatch("variable '" + src.name(v) + "' missing from target ring");
      m.set(*slot[v], t.monomial[v]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms), f.order());
}

}  // namespace idealforge
