#include "idealforge/family.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace idealforge {

namespace {

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

/// Generator builder over a ring with index shift.
struct Vars {
  RingPtr ring;
  int shift = 0;

  Polynomial b(int r, int i) const { return Polynomial::variable(ring, Ring::b_name(r + shift, i)); }
  Polynomial c(int r, int i) const { return Polynomial::variable(ring, Ring::c_name(r + shift, i)); }
  Polynomial one() const { return Polynomial::constant(ring, 1); }
  /// c_{11} c_{21} ... c_{upto,1}; 1 when upto < 1.
  Polynomial c1_chain(int upto) const {
    Polynomial p = one();
    for (int j = 1; j <= upto; ++j) p *= c(j, 1);
    return p;
  }
};

std::string gl(int r, int k) { return "g" + std::to_string(r) + "," + std::to_string(k); }

std::vector<Scalar> roots_with_power_one(const Field& k, int m) { return k.roots_of_unity(static_cast<std::uint64_t>(m)); }

bool field_has_roots(const Field& k, int m) {
  if (m <= 2) return true;
  return k.is_prime_field() && (k.modulus() - 1) % static_cast<std::uint64_t>(m) == 0;
}

std::string lambda_text(const std::vector<int>& l) {
  std::string s = "{";
  for (std::size_t k = 0; k < l.size(); ++k) s += (k ? "," : "") + std::to_string(l[k]);
  return s + "}";
}

bool in_lambda(const std::vector<int>& l, int i) { return std::find(l.begin(), l.end(), i) != l.end(); }

}  // namespace

void validate(const FamilyParams& p) {
  if (p.n < 2) throw Error("n must be at least 2");
  if (p.d < 2) throw Error("d must be at least 2");
  if (10 * p.n - 6 > static_cast<int>(kMaxVars)) {
    throw Error("n = " + std::to_string(p.n) + " needs " + std::to_string(10 * p.n - 6) + " variables; limit is " +
                std::to_string(kMaxVars));
  }
}

std::uint64_t required_unity_order(const FamilyParams& p) {
  std::uint64_t m = static_cast<std::uint64_t>(p.d) * static_cast<std::uint64_t>(p.d);
  // The recursion at depth k works with K(n-k, d^(2^k)) and its square roots.
  std::uint64_t level = static_cast<std::uint64_t>(p.d);
  for (int k = 0; k + 2 < p.n; ++k) {
    level *= level;
    if (level > (std::uint64_t{1} << 31)) throw Error("root-of-unity order too large for a word-size prime");
  }
  if (p.n >= 3) m = std::max(m, level);
  return m;
}

FieldPtr default_family_field(const FamilyParams& p) {
  const auto m = required_unity_order(p);
  return Field::make(FieldSpec::prime(Field::default_verification_prime(m), m));
}

// ---------------------------------------------------------- FamilyContext

FamilyContext::FamilyContext(FamilyParams p, FieldPtr field, bool literal)
    : p_(p), field_(std::move(field)), literal_(literal) {
  validate(p_);
  long_ = Ring::long_ring(p_.n, field_);
  short_ = Ring::short_ring(p_.n, field_);
  display_ = p_.n == 2 ? Ring::short_ring(3, field_) : short_;
}

Polynomial FamilyContext::var(std::string_view name) const { return Polynomial::variable(short_, name); }

Polynomial FamilyContext::poly(std::string_view tmpl) const {
  std::string text = replace_all(std::string(tmpl), "{d}", std::to_string(p_.d));
  text = replace_all(std::move(text), "{D}", std::to_string(p_.d * p_.d));
  if (display_ == short_) return parse_poly(short_, text);
  const Polynomial wide = parse_poly(display_, text);
  Substitution collapse(display_, short_);
  bool touched = false;
  for (int i = 1; i <= 4; ++i) {
    for (const auto& name : {Ring::b_name(2, i), Ring::c_name(2, i)}) {
      const auto v = display_->index(name);
      if (wide.uses_variable(v)) touched = true;
      collapse.map(v, Polynomial::constant(short_, 1));
    }
  }
  if (touched && literal_) {
    throw Error("literal reading of '" + std::string(tmpl) + "' uses level-two variables that do not exist at n = 2");
  }
  return collapse.apply(wide);
}

Ideal FamilyContext::ideal(const std::vector<std::string>& tmpls) const {
  std::vector<Polynomial> gens;
  for (const auto& t : tmpls) {
    for (const auto& e : expand_indices(t)) gens.push_back(poly(e));
  }
  return Ideal(short_, std::move(gens));
}

Ideal FamilyContext::ideal(std::vector<Polynomial> gens) const { return Ideal(short_, std::move(gens)); }

std::vector<std::string> expand_indices(const std::string& tmpl, bool all_pairs) {
  const bool has_i = tmpl.find("{i}") != std::string::npos;
  const bool has_j = tmpl.find("{j}") != std::string::npos;
  if (!has_i && !has_j) return {tmpl};
  std::vector<std::string> out;
  for (int i = 1; i <= 4; ++i) {
    std::string a = replace_all(tmpl, "{i}", std::to_string(i));
    if (!has_j) {
      out.push_back(std::move(a));
      continue;
    }
    for (int j = all_pairs ? 1 : i + 1; j <= 4; ++j) {
      if (j == i) continue;
      out.push_back(replace_all(a, "{j}", std::to_string(j)));
    }
  }
  return out;
}

// ------------------------------------------------------------- generators

std::vector<LabeledGenerator> K_generators(const RingPtr& ring, int n, int d, int shift, bool literal) {
  const Vars v{ring, shift};
  std::vector<LabeledGenerator> out;
  const Polynomial b01d = v.b(0, 1).pow(d);
  const Polynomial b04d = v.b(0, 4).pow(d);

  out.push_back({"g0,1", 0, v.b(0, 1) * v.b(0, 3).pow(d) - v.b(0, 4) * v.b(0, 2).pow(d)});
  for (int i = 1; i <= 4; ++i) out.push_back({gl(1, i), 1, v.c(1, i) * (v.b(0, 2) - v.b(1, i) * v.b(0, 3))});
  for (int i = 1; i <= 4; ++i) {
    out.push_back({gl(1, 4 + i), 1, v.c(1, i) * (v.b(0, 1) - v.b(1, i).pow(d) * v.b(0, 4))});
  }
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      out.push_back({"g1,[" + std::to_string(i) + std::to_string(j) + "]", 1,
                     v.c(1, i) * v.c(1, j) * (v.b(1, i) - v.b(1, j))});
    }
  }

  out.push_back({gl(2, 1), 2, b04d * v.c(1, 1) - b01d * v.c(1, 2)});
  out.push_back({gl(2, 2), 2, b04d * v.c(1, 4) - b01d * v.c(1, 3)});
  out.push_back({gl(2, 3), 2, b01d * (v.c(1, 2) - v.c(1, 3))});
  out.push_back({gl(2, 4), 2, b04d * (v.c(1, 2) * v.b(1, 1) - v.c(1, 3) * v.b(1, 4))});
  if (n >= 3) {
    for (int i = 1; i <= 4; ++i) {
      out.push_back({gl(2, 4 + i), 2, b04d * v.c(1, 2) * v.c(2, i) * (v.b(1, 2) - v.b(2, i) * v.b(1, 3))});
    }
  } else {
    if (literal) throw Error("literal g2,5 carries a factor c2i, but no c2i variables exist at n = 2");
    out.push_back({gl(2, 5), 2, b04d * v.c(1, 2) * (v.b(1, 2) - v.b(1, 3))});
  }

  for (int r = 3; r <= n; ++r) {
    const Polynomial head = b01d * v.c1_chain(r - 3);
    out.push_back({gl(r, 1), r, head * (v.c(r - 2, 4) * v.c(r - 1, 1) - v.c(r - 2, 1) * v.c(r - 1, 2))});
    out.push_back({gl(r, 2), r, head * (v.c(r - 2, 4) * v.c(r - 1, 4) - v.c(r - 2, 1) * v.c(r - 1, 3))});
    out.push_back({gl(r, 3), r, b01d * v.c1_chain(r - 2) * (v.c(r - 1, 3) - v.c(r - 1, 2))});
    out.push_back({gl(r, 4), r,
                   head * v.c(r - 2, 4) * (v.c(r - 1, 2) * v.b(r - 1, 1) - v.c(r - 1, 3) * v.b(r - 1, 4))});
    if (r <= n - 1) {
      for (int i = 1; i <= 4; ++i) {
        out.push_back({gl(r, 4 + i), r,
                       head * v.c(r - 2, 4) * v.c(r - 1, 2) * v.c(r, i) *
                           (v.b(r - 1, 2) - v.b(r, i) * v.b(r - 1, 3))});
      }
    }
  }
  if (n >= 3) {
    out.push_back({gl(n, 5), n,
                   b01d * v.c1_chain(n - 3) * v.c(n - 2, 4) * v.c(n - 1, 2) * (v.b(n - 1, 2) - v.b(n - 1, 3))});
  }
  return out;
}

std::vector<LabeledGenerator> Kl_generators(const RingPtr& long_ring, int n, int d, bool literal) {
  const Vars v{long_ring, 0};
  auto s = [&](int r) { return r <= 1 ? v.one() : Polynomial::variable(long_ring, Ring::s_name(r)); };
  auto f = [&](int r) { return r <= 1 ? v.one() : Polynomial::variable(long_ring, Ring::f_name(r)); };
  const Polynomial b01d = v.b(0, 1).pow(d);

  std::vector<LabeledGenerator> out;
  for (auto& g : K_generators(long_ring, n, d, 0, literal)) {
    if (g.level <= 2) out.push_back({"G" + g.label.substr(1), g.level, std::move(g.poly)});
  }
  auto G = [](int r, int k) { return "G" + std::to_string(r) + "," + std::to_string(k); };
  if (n >= 3) {
    out.push_back({G(2, 0), 2, s(2) - v.c(1, 1)});
    out.push_back({G(2, -1), 2, f(2) - v.c(1, 4)});
  }
  for (int r = 3; r <= n - 1; ++r) {
    out.push_back({G(r, 0), r, s(r) - s(r - 1) * v.c(r - 1, 1)});
    out.push_back({G(r, -1), r, f(r) - s(r - 1) * v.c(r - 1, 4)});
  }
  for (int r = 3; r <= n; ++r) {
    out.push_back({G(r, 1), r, b01d * (f(r - 1) * v.c(r - 1, 1) - s(r - 1) * v.c(r - 1, 2))});
    out.push_back({G(r, 2), r, b01d * (f(r - 1) * v.c(r - 1, 4) - s(r - 1) * v.c(r - 1, 3))});
    out.push_back({G(r, 3), r, b01d * s(r - 1) * (v.c(r - 1, 3) - v.c(r - 1, 2))});
    out.push_back({G(r, 4), r, b01d * f(r - 1) * (v.c(r - 1, 2) * v.b(r - 1, 1) - v.c(r - 1, 3) * v.b(r - 1, 4))});
    if (r <= n - 1) {
      for (int i = 1; i <= 4; ++i) {
        out.push_back({G(r, 4 + i), r,
                       b01d * f(r - 1) * v.c(r - 1, 2) * v.c(r, i) * (v.b(r - 1, 2) - v.b(r, i) * v.b(r - 1, 3))});
      }
    }
  }
  // Level n; for n = 2 this uses s_1 = f_1 = 1.
  out.push_back({G(n, 0), n, s(n) - s(n - 1) * v.c(n - 1, 1) * b01d});
  out.push_back({G(n, -1), n, f(n) - s(n - 1) * v.c(n - 1, 4) * b01d});
  if (n >= 3) {
    out.push_back({G(n, 5), n, b01d * f(n - 1) * v.c(n - 1, 2) * (v.b(n - 1, 2) - v.b(n - 1, 3))});
  }
  return out;
}

Ideal ideal_of(const RingPtr& ring, const std::vector<LabeledGenerator>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(g.poly);
  return Ideal(ring, std::move(polys));
}

Ideal build_Kl(const FamilyContext& ctx) {
  return ideal_of(ctx.long_ring(), Kl_generators(ctx.long_ring(), ctx.n(), ctx.d(), ctx.literal()));
}

Ideal build_K(const FamilyContext& ctx) {
  return ideal_of(ctx.short_ring(), K_generators(ctx.short_ring(), ctx.n(), ctx.d(), 0, ctx.literal()));
}

Substitution eval_substitution(const FamilyContext& ctx) {
  const Vars v{ctx.short_ring(), 0};
  const int n = ctx.n();
  const Polynomial b01d = v.b(0, 1).pow(ctx.d());
  Substitution sub(ctx.long_ring(), ctx.short_ring());
  for (int r = 2; r <= n; ++r) {
    Polynomial s_img = v.c1_chain(r - 1);
    Polynomial f_img = v.c1_chain(r - 2) * v.c(r - 1, 4);
    if (r == n) {
      s_img *= b01d;
      f_img *= b01d;
    }
    sub.map(Ring::s_name(r), s_img);
    sub.map(Ring::f_name(r), f_img);
  }
  return sub;
}

Polynomial eval_map(const FamilyContext& ctx, const Polynomial& f) { return eval_substitution(ctx).apply(f); }

Ideal eval_map(const FamilyContext& ctx, const Ideal& i) {
  const auto sub = eval_substitution(ctx);
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(sub.apply(g));
  return Ideal(ctx.short_ring(), std::move(gens));
}

Polynomial short_membership_target(const FamilyContext& ctx) {
  const Vars v{ctx.short_ring(), 0};
  const int n = ctx.n();
  return v.b(0, 1).pow(ctx.d()) * v.c1_chain(n - 2) * (v.c(n - 1, 1) - v.c(n - 1, 4));
}

Polynomial long_membership_target(const FamilyContext& ctx) {
  const int n = ctx.n();
  return Polynomial::variable(ctx.long_ring(), Ring::s_name(n)) - Polynomial::variable(ctx.long_ring(), Ring::f_name(n));
}

SubLevels build_sublevels(const FamilyContext& ctx) {
  std::vector<LabeledGenerator> m, nn, l;
  for (auto& g : K_generators(ctx.short_ring(), ctx.n(), ctx.d(), 0, ctx.literal())) {
    (g.level <= 1 ? m : g.level == 2 ? nn : l).push_back(std::move(g));
  }
  return {ideal_of(ctx.short_ring(), m), ideal_of(ctx.short_ring(), nn), ideal_of(ctx.short_ring(), l)};
}

Shifted build_shifted(const FamilyContext& ctx) {
  if (ctx.n() < 3) throw Error("the shifted ideal K(n-1, d^2) needs n >= 3");
  const int dd = ctx.d() * ctx.d();
  std::vector<LabeledGenerator> all, m, nn, l;
  for (auto& g : K_generators(ctx.short_ring(), ctx.n() - 1, dd, 1, ctx.literal() && ctx.n() > 3)) {
    all.push_back(g);
    (g.level <= 1 ? m : g.level == 2 ? nn : l).push_back(std::move(g));
  }
  const auto& R = ctx.short_ring();
  return {ideal_of(R, all), ideal_of(R, m), ideal_of(R, nn), ideal_of(R, l)};
}

Polynomial shift_up(const Polynomial& f, const RingPtr& target) {
  const Ring& src = *f.ring();
  std::vector<std::size_t> slot(src.nvars());
  for (std::size_t v = 0; v < src.nvars(); ++v) {
    const std::string& name = src.name(v);
    if (name.size() != 3 || (name[0] != 'b' && name[0] != 'c')) {
      throw Error("shift_up: '" + name + "' is not a level variable");
    }
    std::string up = name;
    up[1] = static_cast<char>(up[1] + 1);
    slot[v] = target->index(up);
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < src.nvars(); ++v) {
      if (t.monomial[v]) m.set(slot[v], t.monomial[v]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Ideal shift_up(const Ideal& i, const RingPtr& target) {
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(shift_up(g, target));
  return Ideal(target, std::move(gens));
}

// ------------------------------------------------------------ aux ideals

Ideal aux_C(const FamilyContext& ctx, int r) {
  if (r < 1 || r > ctx.n()) throw Error("C_r is defined for r = 1..n");
  if (r == ctx.n()) return ctx.zero();
  return ctx.ideal({"c" + std::to_string(r) + "{i}"});
}

Ideal aux_D(const FamilyContext& ctx, int r) {
  if (r < 1 || r > ctx.n()) throw Error("D_r is defined for r = 1..n");
  if (r == ctx.n()) return ctx.zero();
  const std::string c = "c" + std::to_string(r);
  return ctx.ideal({c + "4-" + c + "1", c + "3-" + c + "2", c + "2-" + c + "1"});
}

Ideal aux_Bk(const FamilyContext& ctx, int k, int r) {
  if (r < 0 || r > ctx.n() - 1 || k < 0) throw Error("B_{kr} is defined for r = 0..n-1");
  std::vector<std::string> gens;
  for (int j = std::max(k, 0); j <= r; ++j) gens.push_back("1-b" + std::to_string(j) + "{i}");
  if (gens.empty()) return ctx.zero();
  return ctx.ideal(gens);
}

Ideal aux_B(const FamilyContext& ctx, int r) {
  if (r <= 1) {
    if (r < 0) throw Error("B_r is defined for r = 0..n-1");
    return ctx.zero();
  }
  return aux_Bk(ctx, 2, r);
}

// ---------------------------------------------------------------- primes

std::vector<std::vector<int>> lambda_subsets(bool nonempty) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = nonempty ? 1 : 0; mask < 16; ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= 4; ++i) {
      if (mask & (1u << (i - 1))) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

const std::vector<std::string>& prime_family_ids() {
  static const std::vector<std::string> ids = {"Q1",  "Q2",  "Q3",  "Q4",  "Q5",  "Q6",  "Q7",
                                               "Q8",  "Q9",  "Q10", "Q11", "Q12", "Q13", "Q14",
                                               "Q15", "Q16", "Q17", "Q18", "Q19", "Q20"};
  return ids;
}

std::string PrimeCandidate::label(const Field& field) const {
  std::string s = family_id;
  std::vector<std::string> parts;
  if (args.lambda) parts.push_back("L=" + lambda_text(*args.lambda));
  if (args.t) parts.push_back("t=" + std::to_string(*args.t));
  if (args.alpha) parts.push_back("a=" + field.format(*args.alpha));
  if (args.beta) parts.push_back("b=" + field.format(*args.beta));
  if (!parts.empty()) {
    s += "[";
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + parts[k];
    s += "]";
  }
  if (depth > 0) s += "^" + std::to_string(depth);
  return s;
}

namespace {

struct PrimeBuilder {
  const FamilyContext& ctx;
  const Field& k;

  Polynomial P(const std::string& t) const { return ctx.poly(t); }

  std::vector<Polynomial> list(std::initializer_list<const char*> ts) const {
    std::vector<Polynomial> out;
    for (const char* t : ts) {
      for (const auto& e : expand_indices(t)) out.push_back(P(e));
    }
    return out;
  }

  static void add(std::vector<Polynomial>& to, const std::vector<Polynomial>& from) {
    to.insert(to.end(), from.begin(), from.end());
  }
  static void add(std::vector<Polynomial>& to, const Ideal& from) { add(to, from.generators()); }

  /// (c_{ri} | i not in L)
  std::vector<Polynomial> c_outside(int r, const std::vector<int>& l) const {
    std::vector<Polynomial> out;
    for (int i = 1; i <= 4; ++i) {
      if (!in_lambda(l, i)) out.push_back(P("c" + std::to_string(r) + std::to_string(i)));
    }
    return out;
  }
  /// (b_{ri} - b_{rj} | i, j in L)
  std::vector<Polynomial> b_equal(int r, const std::vector<int>& l) const {
    std::vector<Polynomial> out;
    for (std::size_t a = 0; a + 1 < l.size(); ++a) {
      for (std::size_t b = a + 1; b < l.size(); ++b) {
        out.push_back(P("b" + std::to_string(r) + std::to_string(l[a]) + "-b" + std::to_string(r) + std::to_string(l[b])));
      }
    }
    return out;
  }
  /// (b_{2i} - x | i in L)
  std::vector<Polynomial> b2_minus(const std::vector<int>& l, const Scalar& x) const {
    std::vector<Polynomial> out;
    for (int i : l) out.push_back(P("b2" + std::to_string(i)) - Polynomial::constant(ctx.short_ring(), x));
    return out;
  }
};

void require_lambda(const PrimeArgs& a, bool nonempty, const std::string& id) {
  if (!a.lambda) throw Error(id + " requires a subset Lambda of {1,2,3,4}");
  for (int i : *a.lambda) {
    if (i < 1 || i > 4) throw Error(id + ": Lambda entries must lie in 1..4");
  }
  std::set<int> uniq(a.lambda->begin(), a.lambda->end());
  if (uniq.size() != a.lambda->size()) throw Error(id + ": Lambda has repeated entries");
  if (nonempty && a.lambda->empty()) throw Error(id + " requires a non-empty Lambda");
}

void forbid(const PrimeArgs& a, bool lambda, bool alpha, bool beta, bool t, const std::string& id) {
  if (!lambda && a.lambda) throw Error(id + " takes no Lambda");
  if (!alpha && a.alpha) throw Error(id + " takes no alpha");
  if (!beta && a.beta) throw Error(id + " takes no beta");
  if (!t && a.t) throw Error(id + " takes no t");
}

void require_root(const Field& k, const std::optional<Scalar>& x, int order, const std::string& what) {
  if (!x) throw Error(what + " is required");
  if (!k.is_one(k.pow(*x, static_cast<std::uint64_t>(order)))) {
    throw Error(what + " must satisfy x^" + std::to_string(order) + " = 1");
  }
}

}  // namespace

PrimeCandidate build_prime(const FamilyContext& ctx, const std::string& id, const PrimeArgs& a) {
  const Field& k = *ctx.field();
  const PrimeBuilder pb{ctx, k};
  const int n = ctx.n();
  const int d = ctx.d();
  std::vector<Polynomial> g;
  auto needs_level_two = [&] {
    if (n < 3) throw Error(id + " uses level-two variables and needs n >= 3");
  };
  const std::vector<int> lam = a.lambda.value_or(std::vector<int>{});

  if (id == "Q1") {
    forbid(a, true, false, false, false, id);
    require_lambda(a, false, id);
    g = pb.list({"b01", "b04"});
    PrimeBuilder::add(g, pb.c_outside(1, lam));
    for (int i : lam) g.push_back(pb.P("b02-b1" + std::to_string(i) + "*b03"));
    PrimeBuilder::add(g, pb.b_equal(1, lam));
  } else if (id == "Q2") {
    forbid(a, false, false, false, false, id);
    g = pb.list({"c1{i}", "b01*b03^{d}-b04*b02^{d}"});
  } else if (id == "Q3") {
    forbid(a, false, false, false, false, id);
    g = pb.list({"c11", "c12", "c14", "b01", "b02", "b13", "b14"});
  } else if (id == "Q4") {
    needs_level_two();
    forbid(a, true, false, false, false, id);
    require_lambda(a, false, id);
    g = pb.list({"c11", "c14", "b01", "b02", "b12", "b13", "c12*b11-c13*b14"});
    PrimeBuilder::add(g, pb.c_outside(2, lam));
    PrimeBuilder::add(g, pb.b2_minus(lam, k.one()));
  } else if (id == "Q5") {
    forbid(a, false, false, false, false, id);
    g = pb.list({"c11", "c14", "b01", "b02", "b12", "b13", "c12*b11-c13*b14"});
  } else if (id == "Q6") {
    needs_level_two();
    forbid(a, true, false, false, false, id);
    require_lambda(a, false, id);
    g = pb.list({"c11", "c13", "c14", "b01", "b02", "b11", "b12"});
    PrimeBuilder::add(g, pb.c_outside(2, lam));
    PrimeBuilder::add(g, pb.b2_minus(lam, k.zero()));
  } else if (id == "Q7" || id == "Q9" || id == "Q10" || id == "Q13" || id == "Q14") {
    needs_level_two();
    forbid(a, true, false, false, false, id);
    require_lambda(a, id == "Q7" || id == "Q9", id);
    if (id == "Q7") g = pb.list({"c11", "c13", "c14", "b01", "b02", "b11", "b12", "b13"});
    if (id == "Q9") g = pb.list({"c1{i}", "b01", "b02", "b03", "b12", "b13"});
    if (id == "Q10") g = pb.list({"c1{i}", "b01", "b02", "b03", "b04", "b12", "b13"});
    if (id == "Q13") g = pb.list({"c1{i}", "b01", "b02", "b11", "b12", "b13", "b14"});
    if (id == "Q14") g = pb.list({"c1{i}", "b01", "b02", "b03", "b11", "b12", "b13", "b14"});
    PrimeBuilder::add(g, pb.c_outside(2, lam));
    PrimeBuilder::add(g, pb.b_equal(2, lam));
  } else if (id == "Q8") {
    needs_level_two();
    forbid(a, true, true, false, false, id);
    require_lambda(a, false, id);
    require_root(k, a.alpha, d, "alpha");
    g = pb.list({"c1{i}", "b01", "b02", "b03", "b12", "b13"});
    PrimeBuilder::add(g, pb.c_outside(2, lam));
    PrimeBuilder::add(g, pb.b2_minus(lam, *a.alpha));
  } else if (id == "Q11" || id == "Q12") {
    needs_level_two();
    forbid(a, true, false, false, false, id);
    require_lambda(a, false, id);
    if (id == "Q11") g = pb.list({"c11", "c13-c12", "c14", "b01", "b02", "b11", "b12", "b13", "b14"});
    if (id == "Q12") g = pb.list({"c1{i}", "b01", "b02", "b11", "b12", "b13", "b14"});
    PrimeBuilder::add(g, pb.c_outside(2, lam));
    PrimeBuilder::add(g, pb.b2_minus(lam, k.one()));
  } else if (id == "Q15" || id == "Q16") {
    needs_level_two();
    forbid(a, true, true, false, false, id);
    require_lambda(a, true, id);
    if (id == "Q15") {
      require_root(k, a.alpha, d * d, "alpha");
      if (k.is_one(k.pow(*a.alpha, static_cast<std::uint64_t>(d)))) throw Error("Q15 needs alpha^d != 1");
    } else {
      require_root(k, a.alpha, d, "alpha");
    }
    g = pb.list({"c1{i}", "b01", "b02", "b03", "b11", "b12", "b13", "b14"});
    PrimeBuilder::add(g, pb.c_outside(2, lam));
    PrimeBuilder::add(g, pb.b2_minus(lam, *a.alpha));
  } else if (id == "Q17" || id == "Q18") {
    forbid(a, false, false, false, true, id);
    if (!a.t || *a.t < 2 || *a.t > n) throw Error(id + " requires t in 2..n");
    const int t = *a.t;
    if (id == "Q18") PrimeBuilder::add(g, aux_C(ctx, 1));
    for (int r = 2; r <= t - 1; ++r) PrimeBuilder::add(g, aux_D(ctx, r));
    PrimeBuilder::add(g, aux_C(ctx, t));
    PrimeBuilder::add(g, aux_Bk(ctx, 2, t - 1));
    if (id == "Q17") {
      PrimeBuilder::add(g, pb.list({"c11-b12^{D}*c12", "c14-c11", "c13-c12", "b02-b12*b03", "b12-b1{i}",
                                    "b01-b12^{d}*b04"}));
    } else {
      PrimeBuilder::add(g, pb.list({"b02-b12*b03", "b12-b1{i}", "b01-b12^{d}*b04"}));
    }
  } else if (id == "Q19") {
    forbid(a, false, true, true, true, id);
    require_root(k, a.alpha, d, "alpha");
    const int t = a.t.value_or(2);
    if (n == 2) {
      if (t != 2) throw Error("Q19 at n = 2 requires t = 2");
      if (a.beta && !k.is_one(*a.beta)) throw Error("Q19 at n = 2 fixes beta = 1");
      g = pb.list({"c1{i}", "b11-b14", "b12-b13", "b02", "b03", "b01-b12^{d}*b04"});
      g.push_back(pb.P("b12") - pb.P("b11").scaled(*a.alpha));
    } else {
      require_root(k, a.beta, d, "beta");
      if (t < 2 || t > n) throw Error("Q19 requires t in 2..n");
      const auto& R = ctx.short_ring();
      const Polynomial al = Polynomial::constant(R, *a.alpha);
      const Polynomial be = Polynomial::constant(R, *a.beta);
      PrimeBuilder::add(g, aux_C(ctx, 1));
      if (t == 2) {
        PrimeBuilder::add(g, aux_C(ctx, 2));
      } else {
        for (int r = 2; r <= t - 1; ++r) PrimeBuilder::add(g, aux_D(ctx, r));
        PrimeBuilder::add(g, aux_C(ctx, t));
        PrimeBuilder::add(g, aux_Bk(ctx, 3, t - 1));
      }
      PrimeBuilder::add(g, pb.list({"b01-b12^{d}*b04", "b02", "b03", "b11-b14"}));
      g.push_back(pb.P("b12") - al * pb.P("b13"));
      g.push_back(pb.P("b11") - be * pb.P("b13"));
      if (t >= 3) PrimeBuilder::add(g, pb.b2_minus({1, 2, 3, 4}, *a.alpha));
    }
  } else if (id == "Q20") {
    forbid(a, false, false, false, false, id);
    g = pb.list({"c1{i}", "b11-b14", "b12-b13", "b01", "b02", "b03", "b04"});
  } else {
    throw Error("unknown prime family '" + id + "'");
  }
  PrimeCandidate out;
  out.family_id = id;
  out.args = a;
  out.ideal = ctx.ideal(std::move(g));
  return out;
}

namespace {

std::size_t gb_fingerprint(const Ideal& i) {
  std::size_t h = 0;
  for (const auto& g : i.gb().basis) h = h * 1000003u ^ g.hash();
  return h;
}

}  // namespace

Enumeration enumerate_primes(const FamilyContext& ctx) {
  const Field& k = *ctx.field();
  const int n = ctx.n();
  const int d = ctx.d();
  Enumeration out;
  auto push = [&](const std::string& id, PrimeArgs a) { out.primes.push_back(build_prime(ctx, id, a)); };
  auto with_lambda = [](std::vector<int> l) {
    PrimeArgs a;
    a.lambda = std::move(l);
    return a;
  };

  const bool d_roots = field_has_roots(k, d);
  const bool dd_roots = field_has_roots(k, d * d);
  if (!d_roots) out.notices.push_back(k.name() + " lacks the " + std::to_string(d) + "-th roots of unity; root families skipped");

  if (n == 2) {
    for (auto& l : lambda_subsets(true)) push("Q1", with_lambda(l));
    for (const char* id : {"Q2", "Q3", "Q5"}) push(id, {});
    push("Q17", PrimeArgs{std::nullopt, std::nullopt, std::nullopt, 2});
    push("Q18", PrimeArgs{std::nullopt, std::nullopt, std::nullopt, 2});
    if (d_roots) {
      for (const auto& al : roots_with_power_one(k, d)) {
        push("Q19", PrimeArgs{std::nullopt, al, k.one(), 2});
      }
    }
    push("Q20", {});
    return out;
  }

  for (const char* id : {"Q4", "Q6", "Q10", "Q11", "Q12", "Q13", "Q14"}) {
    for (auto& l : lambda_subsets(false)) push(id, with_lambda(l));
  }
  for (const char* id : {"Q2", "Q3", "Q5"}) push(id, {});
  for (const char* id : {"Q1", "Q7", "Q9"}) {
    for (auto& l : lambda_subsets(true)) push(id, with_lambda(l));
  }
  if (d_roots) {
    const auto roots = roots_with_power_one(k, d);
    for (auto& l : lambda_subsets(false)) {
      for (const auto& al : roots) push("Q8", PrimeArgs{l, al, std::nullopt, std::nullopt});
    }
    if (dd_roots) {
      for (auto& l : lambda_subsets(true)) {
        for (const auto& al : roots_with_power_one(k, d * d)) {
          if (k.is_one(k.pow(al, static_cast<std::uint64_t>(d)))) continue;
          push("Q15", PrimeArgs{l, al, std::nullopt, std::nullopt});
        }
      }
    } else {
      out.notices.push_back(k.name() + " lacks the " + std::to_string(d * d) + "-th roots of unity; Q15 skipped");
    }
    for (auto& l : lambda_subsets(true)) {
      for (const auto& al : roots) push("Q16", PrimeArgs{l, al, std::nullopt, std::nullopt});
    }
  }
  for (int t = 2; t <= n; ++t) {
    push("Q17", PrimeArgs{std::nullopt, std::nullopt, std::nullopt, t});
    push("Q18", PrimeArgs{std::nullopt, std::nullopt, std::nullopt, t});
  }
  if (d_roots) {
    const auto roots = roots_with_power_one(k, d);
    for (int t = 2; t <= n; ++t) {
      for (const auto& al : roots) {
        for (const auto& be : roots) push("Q19", PrimeArgs{std::nullopt, al, be, t});
      }
    }
  }

  // Duplicates within this level, by reduced Groebner basis.
  {
    std::vector<PrimeCandidate> kept;
    std::map<std::size_t, std::vector<std::size_t>> seen;
    for (auto& q : out.primes) {
      const std::size_t h = gb_fingerprint(q.ideal);
      bool dup = false;
      for (auto idx : seen[h]) {
        if (ideal_equal(kept[idx].ideal, q.ideal)) dup = true;
      }
      if (dup) {
        ++out.duplicates_removed;
        continue;
      }
      seen[h].push_back(kept.size());
      kept.push_back(std::move(q));
    }
    out.primes = std::move(kept);
  }

  // The recursion: associated primes of K(n-1, d^2) + C_1 + (b01, ..., b04).
  const FamilyContext sub(FamilyParams{n - 1, d * d}, ctx.field(), ctx.literal());
  Enumeration inner = enumerate_primes(sub);
  const Ideal lift = ctx.ideal(std::vector<std::string>{"c1{i}", "b0{i}"});
  for (auto& q : inner.primes) {
    PrimeCandidate lifted = q;
    lifted.depth = q.depth + 1;
    lifted.ideal = ideal_sum(shift_up(q.ideal, ctx.short_ring()), lift);
    out.primes.push_back(std::move(lifted));
  }
  out.duplicates_removed += inner.duplicates_removed;
  for (auto& s : inner.notices) out.notices.push_back("K(" + std::to_string(n - 1) + "," + std::to_string(d * d) + "): " + s);
  return out;
}

mpz_class count_primes_formula(const FamilyParams& p) {
  if (p.n < 2 || p.d < 2) throw Error("count needs n, d >= 2");
  const long n = p.n;
  const mpz_class d = p.d;
  if (n == 2) return mpz_class(21) + d;
  auto dpow2 = [&](long j) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), d.get_mpz_t(), 1ul << j);
    return r;
  };
  mpz_class total = mpz_class(160 * n - 301) + 16 * d + mpz_class(n * (n - 1));
  for (long j = 1; j <= n - 3; ++j) {
    total += 31 * dpow2(j);
    total += mpz_class(n - j) * dpow2(j);
  }
  total += 18 * dpow2(n - 2);
  return total;
}

}  // namespace idealforge
