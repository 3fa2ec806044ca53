#include "idealforge/registry.hpp"

#include <algorithm>

namespace idealforge {

namespace {

bool has(const std::string& s, const char* what) { return s.find(what) != std::string::npos; }

std::string subst(std::string s, const std::string& from, const std::string& to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

bool in(const std::vector<int>& l, int i) { return std::find(l.begin(), l.end(), i) != l.end(); }

const std::string G01 = "b01*b03^{d}-b04*b02^{d}";

Step eq(std::string name, Expr lhs, Expr rhs) { return Step{std::move(name), StepKind::Equal, std::move(lhs), std::move(rhs)}; }
Step contains(std::string name, Expr big, Expr small) {
  return Step{std::move(name), StepKind::Contains, std::move(big), std::move(small)};
}

}  // namespace

// ---------------------------------------------------------------- Builder

Expr Builder::I(const std::vector<std::string>& tmpls) const { return of(ctx_.ideal(tmpls)); }

Expr Builder::principal(const std::string& tmpl) const { return of(ctx_.ideal(std::vector<Polynomial>{P(tmpl)})); }

Expr Builder::K() const { return of(build_K(ctx_)); }
Expr Builder::M() const { return of(build_sublevels(ctx_).M); }
Expr Builder::N() const { return of(build_sublevels(ctx_).N); }
Expr Builder::L() const { return of(build_sublevels(ctx_).L); }
Expr Builder::K1() const { return of(build_shifted(ctx_).K1); }
Expr Builder::M1() const { return of(build_shifted(ctx_).M1); }
Expr Builder::N1() const { return of(build_shifted(ctx_).N1); }
Expr Builder::L1() const { return of(build_shifted(ctx_).L1); }

Expr Builder::lam(const std::vector<int>& l, const std::vector<std::string>& base, const std::vector<std::string>& outside,
                  const std::vector<std::string>& inside) const {
  std::vector<std::string> t = base;
  for (const auto& o : outside) {
    for (int i = 1; i <= 4; ++i) {
      if (!in(l, i)) t.push_back(subst(o, "{i}", std::to_string(i)));
    }
  }
  for (const auto& s : inside) {
    const bool hi = has(s, "{i}"), hj = has(s, "{j}");
    if (!hi) {
      if (!l.empty()) t.push_back(s);
      continue;
    }
    for (std::size_t a = 0; a < l.size(); ++a) {
      const std::string si = subst(s, "{i}", std::to_string(l[a]));
      if (!hj) {
        t.push_back(si);
        continue;
      }
      for (std::size_t b = a + 1; b < l.size(); ++b) t.push_back(subst(si, "{j}", std::to_string(l[b])));
    }
  }
  return I(t);
}

Expr Builder::cap_lambda(bool nonempty, const std::function<Expr(const std::vector<int>&)>& f) const {
  std::vector<Expr> parts;
  for (const auto& l : lambda_subsets(nonempty)) parts.push_back(f(l));
  return Expr::intersect(std::move(parts));
}

// ---------------------------------------------------------------- helpers

Ideal rewrite_b01(const FamilyContext& ctx, const Ideal& i) {
  const auto& R = ctx.short_ring();
  const int d = ctx.d();
  const std::size_t b01 = R->index("b01");
  const std::size_t b04 = R->index("b04");
  std::vector<Polynomial> out;
  for (const auto& g : i.generators()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m = t.monomial;
      if (m[b01] >= d) {
        for (int k = 1; k <= 4; ++k) {
          const std::size_t c = R->index(Ring::c_name(1, k));
          if (m[c] == 0) continue;
          const std::size_t b = R->index(Ring::b_name(1, k));
          m.set(b01, static_cast<std::uint16_t>(m[b01] - d));
          m.set(b04, static_cast<std::uint16_t>(m[b04] + d));
          m.set(b, static_cast<std::uint16_t>(m[b] + d * d));
          break;
        }
      }
      terms.push_back({m, t.coeff});
    }
    out.push_back(Polynomial::from_terms(R, std::move(terms)));
  }
  return Ideal(R, std::move(out));
}

Ideal divide_by(const Ideal& i, const Polynomial& mono) {
  if (mono.size() != 1) throw Error("divide_by expects a monomial");
  const Monomial& m = mono.leading_monomial();
  const Scalar& c = mono.leading_coeff();
  const Field& k = mono.field();
  std::vector<Polynomial> out;
  for (const auto& g : i.generators()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      if (!m.divides(t.monomial)) throw Error("divide_by: " + g.to_string() + " is not divisible by " + mono.to_string());
      terms.push_back({t.monomial / m, k.div(t.coeff, c)});
    }
    out.push_back(Polynomial::from_terms(i.ring(), std::move(terms)));
  }
  return Ideal(i.ring(), std::move(out));
}

Ideal L_hat(const FamilyContext& ctx) {
  if (ctx.n() < 3) throw Error("L-hat needs n >= 3");
  const auto sh = build_shifted(ctx);
  const int D = ctx.d() * ctx.d();
  Ideal first = divide_by(sh.L1, ctx.poly("b11").pow(static_cast<unsigned>(D)));
  std::vector<std::string> t = {"c24-c21", "c23-c22", "c22-c21", "c22*(b21-b24)"};
  if (ctx.n() >= 4) {
    t.push_back(ctx.literal() ? "c22*c3{i}*(b12-b2{i}*b13)" : "c22*c3{i}*(b22-b3{i}*b23)");
  } else {
    if (ctx.literal()) throw Error("literal L-hat uses c3i, which do not exist at n = 3");
    t.push_back("c22*(b22-b23)");
  }
  return ideal_sum(first, ctx.ideal(t));
}

// ------------------------------------------------------------------ checks

namespace {

std::vector<Step> sumdecomp_b04(const Builder& b) {
  std::vector<Step> s;
  const Expr b04d = b.principal("b04^{d}");
  const Expr lhs = b.K() + b04d;
  const Expr nm = b.N() + b.M() + b04d;
  const Expr e2 = b.I({"b04^{d}", G01, "c1{i}*(b02-b1{i}*b03)", "c1{i}*c1{j}*(b1{i}-b1{j})", "c1{i}*(b01-b1{i}^{d}*b04)"});
  const Expr e3 = b.cap_lambda(false, [&](const std::vector<int>& l) {
    return b.lam(l, {"b04^{d}", G01}, {"c1{i}"}, {"b02-b1{i}*b03", "b1{i}-b1{j}", "b01-b1{i}^{d}*b04"});
  });
  const Expr e4 = b.cap_lambda(true, [&](const std::vector<int>& l) {
                    return b.lam(l, {"b04^{d}"}, {"c1{i}"}, {"b02-b1{i}*b03", "b1{i}-b1{j}", "b01-b1{i}^{d}*b04"});
                  }) &
                  (b.C(1) + b.I({"b01^{d}", "b04^{d}", G01})) & (b.C(1) + b.I({"b04^{d}", "b03^{D}", G01}));
  s.push_back(eq("K + (b04^d) = N + M + (b04^d)", lhs, nm));
  s.push_back(eq("N + M + (b04^d) = (b04^d, g01) + c1i(...)", nm, e2));
  s.push_back(eq("(b04^d, g01) + c1i(...) = intersection over all Lambda", e2, e3));
  s.push_back(eq("intersection over all Lambda = split form with the two C1 components", e3, e4));
  return s;
}

struct ColonB04 {
  Expr Lp;   // L'/b04^d
  Expr Np;   // N'/b04^d
  Expr Mc;   // M : b04^d
  Expr rest; // the explicit generators of the display
};

ColonB04 colon_b04_parts(const Builder& b) {
  const auto& ctx = b.ctx();
  const auto lv = build_sublevels(ctx);
  const Polynomial b04d = b.P("b04^{d}");
  ColonB04 out;
  out.Lp = b.of(divide_by(rewrite_b01(ctx, lv.L), b04d));
  out.Np = b.of(divide_by(rewrite_b01(ctx, lv.N), b04d));
  out.Mc = b.of(lv.M) / b04d;
  out.rest = b.I({"c11-b12^{D}*c12", "c14-c11", "b13^{D}*c13-b12^{D}*c12", "c12*b11-c13*b14", "c12*c2{i}*(b12-b2{i}*b13)",
                  G01, "c1{i}*(b02-b1{i}*b03)", "c1{i}*c1{j}*(b1{i}-b1{j})", "c1{i}*(b01-b1{i}^{d}*b04)"});
  return out;
}

std::vector<Step> colon_b04(const Builder& b) {
  const auto& ctx = b.ctx();
  const auto lv = build_sublevels(ctx);
  const auto parts = colon_b04_parts(b);
  const Expr Lprime = b.of(rewrite_b01(ctx, lv.L));
  const Expr Nprime = b.of(rewrite_b01(ctx, lv.N));
  const Expr colon = b.K() / b.P("b04^{d}");
  std::vector<Step> s;
  s.push_back(eq("L' + N' + M = K", Lprime + Nprime + b.M(), b.K()));
  s.push_back(eq("K : b04^d = L'/b04^d + N'/b04^d + (M : b04^d)", colon, Expr::sum({parts.Lp, parts.Np, parts.Mc})));
  s.push_back(eq("L'/b04^d + N'/b04^d + (M : b04^d) = displayed generators", Expr::sum({parts.Lp, parts.Np, parts.Mc}),
                 parts.Lp + parts.rest));
  return s;
}

std::vector<Step> colon_b04_plus_c12(const Builder& b) {
  const Expr lhs = (b.K() / b.P("b04^{d}")) + b.principal("c12");
  const Expr e1 = b.I({"c11", "c12", "c14", G01, "c13*b13^{D}", "c13*b14", "c13*(b02-b13*b03)", "c13*(b01-b13^{d}*b04)"});
  const Expr e2 = (b.C(1) + b.I({G01})) & b.I({"c11", "c12", "c14", "b13^{D}", "b14", "b02-b13*b03", "b01-b13^{d}*b04"});
  return {eq("(K : b04^d) + (c12) = displayed generators", lhs, e1), eq("displayed generators = two-component intersection", e1, e2)};
}

std::vector<std::string> b12D_block() {
  return {"b12^{D}*(b02-b11*b03)", "b12^{D}*(b02-b14*b03)", "b12^{D}*(b01-b11^{d}*b04)", "b12^{D}*(b01-b14^{d}*b04)"};
}

std::vector<Step> colon_b04c12(const Builder& b) {
  const auto& ctx = b.ctx();
  const auto parts = colon_b04_parts(b);
  const auto sh = build_shifted(ctx);
  const Expr LN1 = b.of(ideal_sum(sh.L1, sh.N1));
  const Expr b12D = b.principal("b12^{D}");

  Substitution sub(ctx.short_ring(), ctx.short_ring());
  sub.map("c11", b.P("b12^{D}*c12"));
  sub.map("c14", b.P("b12^{D}*c12"));
  std::vector<Polynomial> lpp;
  {
    const auto lv = build_sublevels(ctx);
    const Ideal lp = divide_by(rewrite_b01(ctx, lv.L), b.P("b04^{d}"));
    for (const auto& g : lp.generators()) lpp.push_back(sub.apply(g));
  }
  const Expr Lpp = b.of(ctx.ideal(lpp));
  const Expr T = b.K() / b.P("b04^{d}*c12");

  std::vector<std::string> head = {"c11-b12^{D}*c12", "c14-c11", "c2{i}*(b12-b2{i}*b13)", "b02-b12*b03",
                                   "c1{i}*(b12-b1{i})", "b01-b12^{d}*b04"};
  for (const auto& x : b12D_block()) head.push_back(x);
  const Expr Y = b.I({G01, "b13^{D}*c13-b12^{D}*c12", "c12*b11-c13*b14", "c13*(b02-b13*b03)", "c13*(b01-b13^{d}*b04)"});
  const Expr X1 = (LN1 * b12D) + b.I(head) + (Y / b.P("c12"));
  const Expr Z1 = b.I({"b13^{D}*c13-b12^{D}*c12", "c12*b11-c13*b14", "b11*b13^{D}-b14*b12^{D}", "b02-b13*b03", "b01-b13^{d}*b04"});
  const Expr Ydec = Z1 & b.I({"c13", "b12^{D}*c12", "c12*b11", G01});
  const Expr Ycol = Z1 & b.I({"c13", "b12^{D}", "b11", G01});
  const Expr Ysum = b.I({"b13^{D}*c13-b12^{D}*c12", "c12*b11-c13*b14", "b11*b13^{D}-b14*b12^{D}", G01}) +
                    b.I({"b02-b13*b03", "b01-b13^{d}*b04"}) * b.I({"c13", "b12^{D}", "b11"});
  std::vector<std::string> f1 = head;
  for (const auto& x : {"b13^{D}*c13-b12^{D}*c12", "c12*b11-c13*b14", "b11*b13^{D}-b14*b12^{D}", G01.c_str()}) f1.push_back(x);
  const Expr F1 = (LN1 * b12D) + b.I(f1) + b.I({"b02-b13*b03", "b01-b13^{d}*b04"}) * b.I({"c13", "b12^{D}", "b11"});
  const Expr F2 = (LN1 * b12D) +
                  b.I({"c11-b12^{D}*c12", "c14-c11", "c2{i}*(b12-b2{i}*b13)", "b02-b12*b03", "c12*b12^{D}*(b12-b11)",
                       "c13*(b12-b13)", "c12*b12^{D}*(b12-b14)", "b01-b12^{d}*b04", "b12^{D}*(b12-b1{i})*b03",
                       "b12^{D}*(b12^{d}-b1{i}^{d})*b04", "b12^{D}*(c13-c12)", "c12*b11-c13*b14", "b11*b13^{D}-b14*b12^{D}",
                       "b11*(b12-b13)*b03", "b11*(b12^{d}-b13^{d})*b04"});

  std::vector<Step> s;
  s.push_back(eq("L'' = (L1 + N1) c12 b12^(d^2)", Lpp, LN1 * b.principal("b12^{D}*c12")));
  s.push_back(eq("K : b04^d with L'' in place of L'/b04^d", Expr::sum({Lpp, parts.Np, parts.Mc}), b.K() / b.P("b04^{d}")));
  s.push_back(eq("K : b04^d c12 = display with inner colon by c12", T, X1));
  s.push_back(eq("inner ideal = two-component intersection", Y, Ydec));
  s.push_back(eq("inner ideal : c12 = two-component intersection", Y / b.P("c12"), Ycol));
  s.push_back(eq("two-component intersection = sum form", Ycol, Ysum));
  s.push_back(eq("K : b04^d c12 = first 'it follows' form", T, F1));
  s.push_back(eq("first 'it follows' form = second form", F1, F2));
  return s;
}

Expr vprime(const Builder& b) {
  return b.I({"b12^{D}", "c13*(b12-b13)", "c12*b11-c13*b14", "c2{i}*(b12-b2{i}*b13)", "b11*b13^{D}",
              "b11*(b12-b13)*b03", "b11*(b12^{d}-b13^{d})*b04"});
}

std::vector<Step> vprime_split(const Builder& b) {
  const Expr T = b.K() / b.P("b04^{d}*c12");
  const Expr Tplus = b.I({"c11", "c14", "b02-b12*b03", "b01-b12^{d}*b04", "b12^{D}", "c13*(b12-b13)", "c12*b11-c13*b14",
                          "c2{i}*(b12-b2{i}*b13)", "b11*b13^{D}", "b11*(b12-b13)*b03", "b11*(b12^{d}-b13^{d})*b04"});
  const Expr V = vprime(b);
  const Expr W1 = b.I({"b12^{D}", "c2{i}*b12*(1-b2{i})", "b12-b13", "c12*b11-c13*b14"});
  const Expr W2 = b.I({"b12^{D}", "c2{i}*(b12-b2{i}*b13)", "c13", "b11*c12", "b11*b13^{D}", "b11*(b12-b13)*b03",
                       "b11*(b12^{d}-b13^{d})*b04"});
  const Expr W1b = b.I({"b12^{D}", "c2{i}*b12*(1-b2{i})", "c13", "c12", "b12-b13"});
  const Expr W3 = b.I({"b12^{D}", "c2{i}*(b12-b2{i}*b13)", "c13", "b11*c12", "b11*b13^{D}", "b11*b03",
                       "b11*(b12^{d}-b13^{d})*b04"});
  const Expr V1 = b.I({"b12^{D}", "c2{i}*(1-b2{i})", "b12-b13", "c12*b11-c13*b14"});
  const Expr V2 = b.I({"b12", "b13", "c12*b11-c13*b14"});
  const Expr V3 = b.I({"b12^{D}", "c2{i}*(b12-b2{i}*b13)", "c13", "b11"});
  const Expr V4 = b.I({"b12^{D}", "c2{i}*(b12-b2{i}*b13)", "c12", "c13", "b13^{D}", "b03", "(b12^{d}-b13^{d})*b04"});

  const Expr V1dec = b.cap_lambda(false, [&](const std::vector<int>& l) {
    return b.lam(l, {"b12^{D}", "b12-b13", "c12*b11-c13*b14"}, {"c2{i}"}, {"1-b2{i}"});
  });
  const Expr V3a = b.cap_lambda(false, [&](const std::vector<int>& l) {
    return b.lam(l, {"b12^{D}", "c13", "b11"}, {"c2{i}"}, {"b12-b2{i}*b13"});
  });
  const std::string v3pair = b.lit("b2{i}-b2{j}", "b2{i}-b2{i}");
  const Expr V3b = b.cap_lambda(false, [&](const std::vector<int>& l) {
                     return b.lam(l, {"b12^{D}", "c13", "b11"}, {"c2{i}"}, {"b12-b2{i}*b13", "b2{i}^{D}", v3pair});
                   }) &
                   b.cap_lambda(true, [&](const std::vector<int>& l) {
                     return b.lam(l, {"b12^{D}", "b13^{D}", "c13", "b11"}, {"c2{i}"}, {"b12-b2{i}*b13"});
                   });
  const Expr V3tail = b.I({"b12", "b13", "c13", "b11"});
  const Expr V3c = b.cap_lambda(false, [&](const std::vector<int>& l) {
                     return b.lam(l, {"b12^{D}", "c13", "b11"}, {"c2{i}"}, {"b12-b2{i}*b13", "b2{i}^{D}", "b2{i}-b2{j}"});
                   }) &
                   b.cap_lambda(true, [&](const std::vector<int>& l) {
                     return b.lam(l, {"b12^{D}", "b13^{D}", "c13", "b11"}, {"c2{i}"}, {"b12-b2{i}*b13", "b2{i}-b2{j}"});
                   }) &
                   V3tail;
  const Expr V4a = b.I({"b12^{D}", "c2{i}*(b12-b2{i}*b13)", "c12", "c13", "b13^{D}", "b03", "b12^{d}-b13^{d}"}) &
                   b.I({"b12^{D}", "c2{i}*(b12-b2{i}*b13)", "c12", "c13", "b13^{D}", "b03", "b04"});
  const Expr V4tail3 = b.I({"b12", "b13", "c12", "c13", "b03"});
  const Expr V4tail1 = b.I({"b12", "b13", "c12", "c13", "b03", "b04"});
  const Expr V4b =
      b.cap_lambda(false,
                   [&](const std::vector<int>& l) {
                     return b.lam(l, {"b12^{D}", "c12", "c13", "b03", "b12^{d}-b13^{d}"}, {"c2{i}"},
                                  {"b12-b2{i}*b13", "b2{i}-b2{j}", "1-b2{i}^{d}"});
                   }) &
      b.cap_lambda(true,
                   [&](const std::vector<int>& l) {
                     return b.lam(l, {"b12^{d}", "c12", "c13", "b13^{d}", "b03"}, {"c2{i}"}, {"b12-b2{i}*b13", "b2{i}-b2{j}"});
                   }) &
      V4tail3 &
      b.cap_lambda(false,
                   [&](const std::vector<int>& l) {
                     return b.lam(l, {"b12^{D}", "c12", "c13", "b13^{D}", "b03", "b04"}, {"c2{i}"},
                                  {"b12-b2{i}*b13", "b2{i}-b2{j}"});
                   }) &
      V4tail1;

  std::vector<Step> s;
  s.push_back(eq("(K : b04^d c12) + (b12^(d^2)) = display", T + b.principal("b12^{D}"), Tplus));
  s.push_back(eq("V' = two-component form", V, W1 & W2));
  s.push_back(eq("V' = three-component form", V, Expr::intersect({W1, W1b, W3})));
  s.push_back(contains("second component contains the first", W1b, W1));
  s.push_back(eq("V' = V1 cap V2 cap V3 cap V4", V, Expr::intersect({V1, V2, V3, V4})));
  s.push_back(eq("V1 = intersection over Lambda", V1, V1dec));
  s.push_back(eq("V3 = intersection over Lambda", V3, V3a));
  s.push_back(eq("V3 = second form", V3a, V3b));
  s.push_back(eq("V3 second form = primary form", V3b, V3c));
  s.push_back(contains("last primary factor of V3 contains V2", V3tail, V2));
  s.push_back(eq("V4 = two-component form", V4, V4a));
  s.push_back(eq("V4 two-component form = primary form", V4a, V4b));
  s.push_back(contains("last factor of V4 contains V2", V4tail1, V2));
  s.push_back(contains("third-to-last factor of V4 contains V2", V4tail3, V2));
  return s;
}

Expr vhat(const Builder& b) {
  return b.I({"c2{i}*(b12-b2{i}*b13)", "c13*(b12-b13)", "c12*b11-c13*b14", "b11*b13^{D}-b14*b12^{D}", "b11*(b12-b13)*b03",
              "b11*(b12^{d}-b13^{d})*b04"});
}

Expr vhat_colon_final(const Builder& b) {
  return b.I({"b11*b13^{D}-b14*b12^{D}", "b03*(b11-b14)", "b04*(b11-b14)", "b03*b11*(b12-b13)",
              "b04*b14*(b12^{d}-b13^{d})", "c2{i}*(b12-b2{i}*b13)", "c2{i}*c2{j}*(b2{i}-b2{j})", "c2{i}*(b11-b14*b2{i}^{D})",
              "c2{i}*(b2{i}-1)*b03*b14", "c2{i}*(b2{i}^{d}-1)*b04*b14", "c12*(b11-b14)", "c12*b11-c13*b14",
              "c13*c2{i}*(1-b2{i})", "c13*(b12-b13)", "c13*(b11-b14)"});
}

std::vector<Step> vhat_colon(const Builder& b) {
  const Expr V = vhat(b);
  const Expr H1 = b.I({"c2{i}*b12*(1-b2{i})", "b12-b13", "c12*b11-c13*b14", "b12^{D}*(b11-b14)"});
  const std::vector<std::string> h2base = {"c13", "c12*b11", "b11*b13^{D}-b14*b12^{D}", "(b12-b13)*b03*b11",
                                           "(b12^{d}-b13^{d})*b04*b11"};
  std::vector<std::string> h2 = h2base;
  h2.push_back("c2{i}*(b12-b2{i}*b13)");
  const Expr H2 = b.I(h2);
  const Expr H2dec = b.cap_lambda(false, [&](const std::vector<int>& l) {
    return b.lam(l, h2base, {"c2{i}"}, {"b12-b2{i}*b13"});
  });
  const Expr C2 = b.C(2);
  const Expr empty_comp = C2 + b.I(h2base);
  const Expr e1 = C2 + b.I({"c13", "b11", "b14*b12^{D}"});
  const Expr e2 = C2 + b.I({"c13", "c12", "b11*b13^{D}-b14*b12^{D}", "(b12-b13)*b03*b11", "(b12^{d}-b13^{d})*b04*b11"});
  const Expr e2a = C2 + b.I({"c13", "c12", "(b11-b14)*b12^{D}", "b12-b13"});
  const Expr e2b = C2 + b.I({"c13", "c12", "b11*b13^{D}-b14*b12^{D}", "b03*b11", "(b12^{d}-b13^{d})*b04*b11"});
  const Expr e2b1 = C2 + b.I({"c13", "c12", "(b11-b14)*b12^{D}", "b03", "b12^{d}-b13^{d}"});
  const Expr e2b2 = C2 + b.I({"c13", "c12", "b11*b13^{D}-b14*b12^{D}", "b03", "b04"});
  const Expr e2b3 = C2 + b.I({"c13", "c12", "b14*b12^{D}", "b11"});

  // Components of V-hat : b12^(d^2).
  const Expr k1 = b.I({"c2{i}*(1-b2{i})", "b12-b13", "c12*b11-c13*b14", "b11-b14"});
  const Expr kLam = b.cap_lambda(true, [&](const std::vector<int>& l) {
    return b.lam(l, {"c13", "c12*b14"}, {"c2{i}"},
                 {"b12-b2{i}*b13", "b2{i}-b2{j}", "b11-b14*b2{i}^{D}", "(b2{i}-1)*b03*b14", "(b2{i}^{d}-1)*b04*b14"});
  });
  const Expr k3 = C2 + b.I({"c13", "b11", "b14"});
  const Expr k4 = C2 + b.I({"c13", "c12", "b11-b14", "b12-b13"});
  const Expr k5 = C2 + b.I({"c13", "c12", "b11-b14", "b03", "b12^{d}-b13^{d}"});
  const Expr k6 = C2 + b.I({"c13", "c12", "b11*b13^{D}-b14*b12^{D}", "b03", "b04"});
  const Expr k7 = C2 + b.I({"c13", "c12", "b14", "b11"});
  const Expr seven = Expr::intersect({k1, kLam, k3, k4, k5, k6, k7});

  const std::vector<std::string> formbase = {"c13", "b11*b13^{D}-b14*b12^{D}", "b03*(b11-b14)", "b04*(b11-b14)",
                                             "b03*b11*(b12-b13)", "b04*b14*(b12^{d}-b13^{d})", "c12*b11", "c12*b14"};
  const Expr last2 = C2 + b.I({"c13", "c12", "b11*b13^{D}-b14*b12^{D}", "b03*b11", "b04*b11", "b03*b14", "b04*b14"});
  const Expr prev2 = C2 + b.I({"c13", "c12", "b11-b14", "b03*(b12-b13)", "b12^{d}-b13^{d}"});
  const Expr last4 = C2 + b.I({"c13", "c12", "b11*b13^{D}-b14*b12^{D}", "b03*(b11-b14)", "b04*(b11-b14)",
                               "b03*b11*(b12-b13)", "b04*b14*(b12^{d}-b13^{d})"});
  const Expr last5 = C2 + b.I(formbase);
  const Expr sixteen = b.cap_lambda(false, [&](const std::vector<int>& l) {
    return b.lam(l, formbase, {"c2{i}"},
                 {"b12-b2{i}*b13", "b2{i}-b2{j}", "b11-b14*b2{i}^{D}", "(b2{i}-1)*b03*b14", "(b2{i}^{d}-1)*b04*b14"});
  });
  std::vector<std::string> sixteen_sum = formbase;
  for (const auto& x : {"c2{i}*(b12-b2{i}*b13)", "c2{i}*c2{j}*(b2{i}-b2{j})", "c2{i}*(b11-b14*b2{i}^{D})",
                        "c2{i}*(b2{i}-1)*b03*b14", "c2{i}*(b2{i}^{d}-1)*b04*b14"}) {
    sixteen_sum.push_back(x);
  }
  const Expr colon = V / b.P("b12^{D}");

  std::vector<Step> s;
  s.push_back(eq("V-hat = two-component form", V, H1 & H2));
  s.push_back(eq("second component = intersection over Lambda", H2, H2dec));
  for (const auto& l : lambda_subsets(true)) {
    std::string name = "component for Lambda = {";
    for (std::size_t k = 0; k < l.size(); ++k) name += (k ? "," : "") + std::to_string(l[k]);
    name += "} simplifies";
    s.push_back(eq(name, b.lam(l, h2base, {"c2{i}"}, {"b12-b2{i}*b13"}),
                   b.lam(l, {"c13", "c12*b11"}, {"c2{i}"},
                         {"b12-b2{i}*b13", "b13^{D}*(b11-b14*b2{i}^{D})", "b13*(b2{i}-1)*b03*b11",
                          "b13^{d}*(b2{i}^{d}-1)*b04*b11"})));
  }
  s.push_back(eq("empty-Lambda component = two-component form", empty_comp, e1 & e2));
  s.push_back(eq("empty-Lambda component = three-component form", empty_comp, Expr::intersect({e1, e2a, e2b})));
  s.push_back(eq("last component = three-component form", e2b, Expr::intersect({e2b1, e2b2, e2b3})));
  s.push_back(eq("V-hat : b12^(d^2) = seven-part intersection", colon, seven));
  s.push_back(eq("intersection of the last two components", k6 & k7, last2));
  s.push_back(eq("intersection of the two preceding components", k4 & k5, prev2));
  s.push_back(eq("intersection of the last four components", Expr::intersect({k4, k5, k6, k7}), last4));
  s.push_back(eq("intersection of the last five components", Expr::intersect({k3, k4, k5, k6, k7}), last5));
  s.push_back(eq("intersection of the sixteen components", sixteen, b.I(sixteen_sum)));
  s.push_back(eq("V-hat : b12^(d^2) = final form", colon, vhat_colon_final(b)));
  return s;
}

std::vector<std::string> t2_head() {
  return {"c11-b12^{D}*c12", "c14-c11", "b02-b12*b03", "b01-b12^{d}*b04", "c12*(b12-b11)", "c12*(b12-b14)",
          "(b12-b1{i})*b03", "(b12^{d}-b1{i}^{d})*b04", "c13-c12"};
}

std::vector<std::string> c2_tail() {
  return {"c2{i}*(b12-b2{i}*b13)", "c2{i}*c2{j}*(b2{i}-b2{j})", "c2{i}*(b11-b2{i}^{D}*b14)"};
}

/// Generator that only the corrected reading includes.
std::string dropped_b04_term() { return "c2{i}*(b2{i}^{d}-1)*b04*b14"; }

std::vector<Step> colon_b04c12b12(const Builder& b) {
  const auto sh = build_shifted(b.ctx());
  const Expr LN1 = b.of(ideal_sum(sh.L1, sh.N1));
  const Expr T2 = b.K() / b.P("b04^{d}*c12*b12^{D}");
  const Expr first = LN1 + b.I(t2_head()) + (vhat(b) / b.P("b12^{D}"));
  std::vector<std::string> f = t2_head();
  for (const auto& x : {"b11*b13^{D}-b14*b12^{D}", "b03*(b11-b14)", "b04*(b11-b14)", "b03*b11*(b12-b13)",
                        "b04*b14*(b12^{d}-b13^{d})", "c2{i}*(b12-b2{i}*b13)", "c2{i}*c2{j}*(b2{i}-b2{j})",
                        "c2{i}*(b11-b14*b2{i}^{D})", "c2{i}*(b2{i}-1)*b03*b14", "c2{i}*(b2{i}^{d}-1)*b04*b14",
                        "c12*(b11-b14)", "c12*b11-c13*b14", "c13*c2{i}*(1-b2{i})", "c13*(b12-b13)", "c13*(b11-b14)"}) {
    f.push_back(x);
  }
  const Expr F1 = LN1 + b.I(f);
  std::vector<std::string> g = {"c11-b12^{D}*c12", "c14-c11", "c13-c12", "b02-b12*b03", "b01-b12^{d}*b04",
                                "c12*(b12-b1{i})", "(b12-b1{i})*b03", "(b12^{d}-b1{i}^{d})*b04",
                                "b11*b13^{D}-b14*b12^{D}", "(b11-b14)*b04"};
  for (const auto& x : c2_tail()) g.push_back(x);
  g.push_back("c2{i}*c12*(1-b2{i})");
  if (!b.literal()) g.push_back(dropped_b04_term());
  const Expr F2 = LN1 + b.I(g);
  return {eq("K : b04^d c12 b12^(d^2) = display with V-hat : b12^(d^2)", T2, first),
          eq("K : b04^d c12 b12^(d^2) = expanded form", T2, F1), eq("expanded form = final form", F1, F2)};
}

struct ABCD {
  Expr LN1, A, B, Second, C, D;
  /// C plus dropped_b04_term(); equals C in literal mode.
  Expr Cfull;
};

ABCD abcd_parts(const Builder& b) {
  const auto sh = build_shifted(b.ctx());
  ABCD x;
  x.LN1 = b.of(ideal_sum(sh.L1, sh.N1));
  x.A = x.LN1 + b.I({"c11-b12^{D}*c12", "c14-c11", "c13-c12", "b02-b12*b03", "b12-b1{i}", "b01-b12^{d}*b04",
                     "c2{i}*(1-b2{i})"});
  x.B = x.LN1 + b.C(1) +
        b.I({"b02-b12*b03", "b01-b12^{d}*b04", "b12-b1{i}", "c2{i}*b12*(1-b2{i})", "c2{i}*c2{j}*(b2{i}-b2{j})"});
  std::vector<std::string> second = {"b01-b12^{d}*b04", "b02", "b03", "(b12^{d}-b1{i}^{d})*b04"};
  for (const auto& t : c2_tail()) second.push_back(t);
  second.push_back("b11*b13^{D}-b14*b12^{D}");
  second.push_back("(b11-b14)*b04");
  if (!b.literal()) second.push_back(dropped_b04_term());
  x.Second = x.LN1 + b.C(1) + b.I(second);
  std::vector<std::string> c = {"b01-b12^{d}*b04", "b02", "b03", "b12^{d}-b1{i}^{d}", "b11-b14"};
  for (const auto& t : c2_tail()) c.push_back(t);
  x.C = x.LN1 + b.C(1) + b.I(c);
  x.Cfull = b.literal() ? x.C : x.C + b.I({dropped_b04_term()});
  std::vector<std::string> d = {"b01", "b02", "b03", "b04", "b11*b13^{D}-b14*b12^{D}"};
  for (const auto& t : c2_tail()) d.push_back(t);
  x.D = x.LN1 + b.C(1) + b.I(d);
  return x;
}

std::vector<Step> abcd_split(const Builder& b) {
  const auto x = abcd_parts(b);
  const Expr T2 = b.K() / b.P("b04^{d}*c12*b12^{D}");
  std::vector<std::string> plus = {"b02-b12*b03", "b01-b12^{d}*b04", "(b12-b1{i})*b03", "(b12^{d}-b1{i}^{d})*b04"};
  for (const auto& t : c2_tail()) plus.push_back(t);
  plus.push_back("b11*b13^{D}-b14*b12^{D}");
  plus.push_back("(b11-b14)*b04");
  if (!b.literal()) plus.push_back(dropped_b04_term());
  const Expr Tc = x.LN1 + b.C(1) + b.I(plus);
  const auto sh = build_shifted(b.ctx());
  return {eq("A = K : b04^d c12^2 b12^(d^2)", b.K() / b.P("b04^{d}*c12^2*b12^{D}"), x.A),
          eq("(K : b04^d c12 b12^(d^2)) + (c12) = display", T2 + b.principal("c12"), Tc),
          eq("display = B cap second component", Tc, x.B & x.Second),
          eq("second component = C cap D", x.Second, x.Cfull & x.D),
          eq("D = K(n-1,d^2) + C1 + (b01, b02, b03, b04)", x.D, b.of(sh.K1) + b.C(1) + b.I({"b0{i}"}))};
}

std::vector<Step> u_plus_b11(const Builder& b) {
  const auto x = abcd_parts(b);
  const Expr b11D = b.principal("b11^{D}");
  return {eq("A + (b11^(d^2)) = display", x.A + b11D,
             b.I({"b11^{D}", "c11", "c14-c11", "c13-c12", "b02-b12*b03", "b12-b1{i}", "b01-b12^{d}*b04", "c2{i}*(1-b2{i})"})),
          eq("B + (b11^(d^2)) = display", x.B + b11D,
             b.C(1) + b.I({"b11^{D}", "b02-b12*b03", "b01-b12^{d}*b04", "b12-b1{i}", "c2{i}*b12*(1-b2{i})",
                           "c2{i}*c2{j}*(b2{i}-b2{j})"})),
          eq("C + (b11^(d^2)) = display", x.C + b11D,
             b.C(1) + b.I({"b11^{D}", "b01-b12^{d}*b04", "b02", "b03", "b12^{d}-b1{i}^{d}", "b11-b14",
                           "c2{i}*(b12-b2{i}*b13)", "c2{i}*c2{j}*(b2{i}-b2{j})", "c2{i}*b11*(1-b2{i}^{D})"}))};
}

std::vector<Step> c_plus_b11_decomp(const Builder& b) {
  const auto x = abcd_parts(b);
  const std::vector<std::string> core = {"b11^{D}", "b12^{d}-b11^{d}", "b12^{d}-b13^{d}"};
  std::vector<std::string> xs = core;
  for (const auto& t : {"c2{i}*(b12-b2{i}*b13)", "c2{i}*c2{j}*(b2{i}-b2{j})", "c2{i}*b11*(1-b2{i}^{D})"}) xs.push_back(t);
  const Expr X = b.I(xs);
  const Expr X1 = b.cap_lambda(false, [&](const std::vector<int>& l) {
    return b.lam(l, core, {"c2{i}"}, {"b12-b2{i}*b13", "b2{i}-b2{j}", "b11*(1-b2{i}^{D})"});
  });
  const Expr head = b.C(2) + b.I(core);
  const Expr X2 = head & b.cap_lambda(true, [&](const std::vector<int>& l) {
                    return b.lam(l, {"b11^{D}", "b13^{d}-b11^{d}"}, {"c2{i}"},
                                 {"b12-b2{i}*b13", "b2{i}-b2{j}", "b11*(1-b2{i}^{D})", "b13^{d}*(b2{i}^{d}-1)"});
                  });
  const Expr X3 = Expr::intersect(
      {head, b.cap_lambda(true, [&](const std::vector<int>& l) {
         return b.lam(l, {"b11", "b13^{d}"}, {"c2{i}"}, {"b12-b2{i}*b13", "b2{i}-b2{j}"});
       }),
       b.cap_lambda(true, [&](const std::vector<int>& l) {
         return b.lam(l, {"b11^{d}", "b13^{d}"}, {"c2{i}"}, {"b12-b2{i}*b13", "b2{i}-b2{j}", "1+b2{i}^{d}"});
       }),
       b.cap_lambda(true, [&](const std::vector<int>& l) {
         return b.lam(l, {"b11^{D}", "b13^{d}-b11^{d}"}, {"c2{i}"}, {"b12-b2{i}*b13", "b2{i}-b2{j}", "1-b2{i}^{d}"});
       })});
  const Expr rest = b.C(1) + b.I({"b01-b12^{d}*b04", "b02", "b03", "b11-b14"});
  return {eq("C + (b11^(d^2)) = reduced ideal + C1 + (b01 - b12^d b04, b02, b03, b11 - b14)", x.C + b.principal("b11^{D}"),
             X + rest),
          eq("reduced ideal = intersection over Lambda", X, X1), eq("intersection over Lambda = split form", X1, X2),
          eq("split form = primary form", X2, X3)};
}

Expr chain_D(const Builder& b, int lo, int hi) {
  std::vector<Expr> parts{b.zero()};
  for (int r = lo; r <= hi; ++r) parts.push_back(b.D(r));
  return Expr::sum(std::move(parts));
}

std::vector<Step> u_colon_b11(const Builder& b) {
  const auto& ctx = b.ctx();
  const int n = ctx.n();
  const auto x = abcd_parts(b);
  const Expr Lh = b.of(L_hat(ctx));
  const Expr b11D = b.principal("b11^{D}");
  const Polynomial b11Dp = b.P("b11^{D}");

  const std::vector<std::string> arest = {"c11-b12^{D}*c12", "c14-c11", "c13-c12", "b02-b12*b03", "b12-b1{i}",
                                          "b01-b12^{d}*b04", "c2{i}*(1-b2{i})"};
  const Expr Ared = (Lh * b11D) + b.I(arest);
  std::vector<std::string> acol = arest;
  acol.back() = "c22*(1-b2{i})";
  const Expr Acolon = Lh + b.I(acol);
  std::vector<Expr> Aparts;
  for (int t = 2; t <= n; ++t) {
    Aparts.push_back(chain_D(b, 2, t - 1) + b.C(t) + b.Bk(2, t - 1) +
                     b.I({"c11-b12^{D}*c12", "c14-c11", "c13-c12", "b02-b12*b03", "b12-b1{i}", "b01-b12^{d}*b04"}));
  }
  const Expr Bcolon = Lh + b.C(1) + b.I({"b02-b12*b03", "b01-b12^{d}*b04", "b12-b1{i}", "c22*(1-b2{i})"});
  const Expr Ccolon = Lh + b.C(1) +
                      b.I({"b01-b12^{d}*b04", "b02", "b03", "b11-b14", "b12^{d}-b1{i}^{d}", "c22*(b12-b2{i}*b13)",
                           b.lit("c22*c2{j}*(b2{i}-b2{j})", "c22*(b2{i}-b2{j})"), "c22*(1-b2{i}^{d})"});
  std::vector<Expr> Cparts{
      b.literal() ? b.C(1) + b.C(2) + b.I({"b01-b12^{d}*b04", "b02", "b03", "b11-b14", "b12^{d}-b1{i}^{d}"})
                  : Lh + b.C(1) +
                        b.I({"c22^2", "c22*(b12-b2{i}*b13)", "c22*(1-b2{i}^{d})", "b01-b12^{d}*b04", "b02", "b03",
                             "b11-b14", "b12^{d}-b1{i}^{d}"})};
  for (int t = 3; t <= n; ++t) {
    Cparts.push_back(b.C(1) + chain_D(b, 2, t - 1) + b.C(t) + b.Bk(3, t - 1) +
                     b.I({"b01-b12^{d}*b04", "b02", "b03", "b11-b14", "b12^{d}-b1{i}^{d}", "b12-b2{i}*b13",
                          "b2{i}-b2{j}", "1-b2{i}^{d}"}));
  }
  std::vector<Expr> Bparts;
  for (int t = 2; t <= n; ++t) Bparts.push_back(b.of(build_prime(ctx, "Q18", PrimeArgs{{}, {}, {}, t}).ideal));

  return {eq("L-hat contains D2", Lh + b.D(2), Lh),
          eq("A = b11^(d^2) L-hat + (other generators of A)", x.A, Ared),
          eq("A : b11^(d^2) = display", x.A / b11Dp, Acolon),
          eq("A : b11^(d^2) = intersection over t", Acolon, Expr::intersect(Aparts)),
          eq("B : b11^(d^2) = display", x.B / b11Dp, Bcolon),
          contains("every Q18t contains B : b11^(d^2)", Expr::intersect(Bparts), Bcolon),
          eq("C : b11^(d^2) = display", x.C / b11Dp, Ccolon),
          eq("C : b11^(d^2) = intersection over t", Ccolon, Expr::intersect(Cparts))};
}

std::vector<Step> n2_chain(const Builder& b) {
  const Expr T = b.K() / b.P("b04^{d}*c12");
  const Expr b12D = b.principal("b12^{D}");
  const Expr d1 = b12D * b.I({"b04^{d}*c11-b01^{d}*c12", "b01^{d}*(c13-c12)", "(b12-b1{i})*b03", "(b12^{d}-b1{i}^{d})*b04", "c13-c12"}) +
                  b.I({"c11-b12^{D}*c12", "c14-c11", "b12-b13", "b02-b12*b03", "c12*b12^{D}*(b12-b11)",
                       "c12*b12^{D}*(b12-b14)", "b01-b12^{d}*b04", "c12*b11-c13*b14", "b11*b13^{D}-b14*b12^{D}"});
  const std::vector<std::string> tail = {"c11-b12^{D}*c12", "c14-c11", "b12-b13", "b02-b12*b03", "b01-b12^{d}*b04",
                                         "c12*b11-c13*b14"};
  const std::vector<std::string> inner = {"(b12-b11)*c12", "b11-b14", "(b12-b1{i})*b03", "(b12^{d}-b1{i}^{d})*b04",
                                          "c13-c12"};
  const Expr d2 = b12D * b.I(inner) + b.I(tail);
  const Expr plus = b.I({"b12^{D}", "c11", "c14", "b12-b13", "b02-b12*b03", "b01-b12^{d}*b04", "c12*b11-c13*b14"});
  const Expr T2 = b.K() / b.P("b04^{d}*c12*b12^{D}");
  const Expr e1 = b.I(inner) + b.I(tail);
  const std::vector<std::string> inner2 =
      b.literal() ? std::vector<std::string>{"(b12-b11)*c12", "b11-b14*(b12-b1{i})*b03", "(b12^{d}-b1{i}^{d})*b04",
                                             "c13-c12"}
                  : inner;
  const Expr e2 = b.I(inner2) + b.I({"c11-b12^{D}*c12", "c14-c11", "b12-b13", "b02-b12*b03", "b01-b12^{d}*b04"});
  const Expr q17 = b.I({"b12-b1{i}", "c13-c12", "c11-b12^{D}*c12", "c14-c11", "b02-b12*b03", "b01-b12^{d}*b04"});
  const Expr e3 = q17 & (b.C(1) + b.I({"b11-b14", "b12-b13", "b02-b12*b03", "b01-b12^{d}*b04", "(b12-b11)*b03",
                                        "(b12^{d}-b11^{d})*b04"}));
  const Expr q18 = b.C(1) + b.I({"b11-b1{i}", "b02-b12*b03", "b01-b12^{d}*b04"});
  const Expr e4 = Expr::intersect(
      {q17, q18, b.C(1) + b.I({"b11-b14", "b12-b13", "b02", "b03", "b01-b12^{d}*b04", "(b12^{d}-b11^{d})*b04"})});
  const Expr e5 = Expr::intersect({q17, q18,
                                   b.C(1) + b.I({"b11-b14", "b12-b13", "b02", "b03", "b01-b12^{d}*b04", "b12^{d}-b11^{d}"}),
                                   b.C(1) + b.I({"b11-b14", "b12-b13", "b01", "b02", "b03", "b04"})});
  return {eq("K : b04^d c12 = first n = 2 display", T, d1),
          eq("first n = 2 display = second form", d1, d2),
          eq("(K : b04^d c12) + (b12^(d^2)) = display", T + b12D, plus),
          eq("K : b04^d c12 b12^(d^2) = display", T2, e1),
          eq("display = second form", e1, e2),
          eq("second form = two-component intersection", e2, e3),
          eq("two-component intersection = three-component form", e3, e4),
          eq("three-component form = four-component intersection", e4, e5)};
}

std::vector<CheckDef> make_registry() {
  using K = CheckDef::Kind;
  std::vector<CheckDef> r;
  auto add = [&](std::string id, K kind, std::string summary, std::vector<std::string> deps, int min_n, int max_n,
                 std::function<std::vector<Step>(const Builder&)> steps) {
    CheckDef c;
    c.id = std::move(id);
    c.kind = kind;
    c.summary = std::move(summary);
    c.deps = std::move(deps);
    c.min_n = min_n;
    c.max_n = max_n;
    c.steps = std::move(steps);
    r.push_back(std::move(c));
  };
  const int any = std::numeric_limits<int>::max();
  add("sumdecomp-b04", K::Identity, "K + (b04^d) and its decomposition over Lambda", {}, 2, any, sumdecomp_b04);
  add("colon-b04", K::Identity, "K : b04^d via L' and N'", {"sumdecomp-b04"}, 2, any, colon_b04);
  add("colon-b04-plus-c12", K::Identity, "(K : b04^d) + (c12) and its two components", {"colon-b04"}, 2, any,
      colon_b04_plus_c12);
  add("colon-b04c12", K::Identity, "K : b04^d c12 via L''", {"colon-b04-plus-c12"}, 3, any, colon_b04c12);
  add("Vprime-split", K::Identity, "(K : b04^d c12) + (b12^(d^2)) and V' = V1 V2 V3 V4", {"colon-b04c12"}, 3, any,
      vprime_split);
  add("Vhat-colon", K::Identity, "V-hat and V-hat : b12^(d^2)", {"colon-b04c12"}, 3, any, vhat_colon);
  add("colon-b04c12b12", K::Identity, "K : b04^d c12 b12^(d^2)", {"Vhat-colon"}, 3, any, colon_b04c12b12);
  add("ABCD-split", K::Identity, "A, B, C, D and the recursion ideal", {"colon-b04c12b12"}, 3, any, abcd_split);
  add("U-plus-b11", K::Identity, "A, B, C plus (b11^(d^2))", {"ABCD-split"}, 3, any, u_plus_b11);
  add("C-plus-b11-decomp", K::Identity, "decomposition of C + (b11^(d^2))", {"U-plus-b11"}, 3, any, c_plus_b11_decomp);
  add("U-colon-b11", K::Identity, "L-hat and A, B, C : b11^(d^2)", {"ABCD-split"}, 3, any, u_colon_b11);
  add("n2-chain", K::Identity, "the n = 2 colon chain", {"colon-b04-plus-c12"}, 2, 2, n2_chain);
  add("membership", K::Membership, "s_n - f_n in K_l(n,d) with certificate; Short-ring equivalent", {}, 2, any, nullptr);
  add("prime-list", K::PrimeList, "every candidate prime is prime and contains K where claimed", {}, 2, any, nullptr);
  add("modular-law", K::Fact, "(I + I') cap I'' = I + (I' cap I'') for I in I''", {}, 2, any, nullptr);
  add("principal-intersection", K::Fact, "(x) cap I = x (I : x)", {}, 2, any, nullptr);
  add("colon-of-sum", K::Fact, "(I + x I') : x = (I : x) + I'", {}, 2, any, nullptr);
  add("count", K::Count, "closed-form count against the enumeration", {}, 2, any, nullptr);
  return r;
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> r = make_registry();
  return r;
}

const CheckDef* find_check(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace idealforge
