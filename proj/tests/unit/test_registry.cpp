#include <set>

#include "doctest.h"
#include "idealforge/registry.hpp"

using namespace idealforge;

namespace {
FamilyContext ctx(int n, int d) {
  const FamilyParams p{n, d};
  return FamilyContext(p, default_family_field(p));
}
}  // namespace

TEST_CASE("expression keys ignore operand order of commutative operations") {
  const auto c = ctx(2, 2);
  const Builder b(c);
  const Expr x = b.I({"b01"}), y = b.I({"b02*c11"});
  CHECK((x + y).key() == (y + x).key());
  CHECK((x & y).key() == (y & x).key());
  CHECK((x / b.P("b03")).key() != (y / b.P("b03")).key());
}

TEST_CASE("evaluator memoizes shared subexpressions") {
  const auto c = ctx(2, 2);
  const Builder b(c);
  const Expr x = b.I({"b01", "c11*b02"}), y = b.I({"b03"});
  Evaluator ev;
  const Ideal s1 = ev.evaluate(x + y);
  const std::size_t after_first = ev.memo_size();
  const Ideal s2 = ev.evaluate(y + x);
  CHECK(ev.memo_size() == after_first);
  CHECK(ideal_equal(s1, s2));
  CHECK(ideal_equal(ev.evaluate(x & y), ideal_intersect(ev.evaluate(x), ev.evaluate(y))));
}

TEST_CASE("registry ids are unique and dependencies come first") {
  std::set<std::string> seen;
  for (const auto& def : registry()) {
    CHECK(seen.insert(def.id).second);
    for (const auto& dep : def.deps) CHECK(seen.count(dep) == 1);
  }
  for (const char* id : {"sumdecomp-b04", "colon-b04", "colon-b04-plus-c12", "n2-chain", "colon-b04c12", "Vprime-split",
                         "Vhat-colon", "colon-b04c12b12", "ABCD-split", "U-plus-b11", "C-plus-b11-decomp",
                         "U-colon-b11", "membership", "prime-list", "modular-law", "principal-intersection",
                         "colon-of-sum", "count"}) {
    CHECK_MESSAGE(find_check(id) != nullptr, id);
  }
  CHECK(find_check("no-such-check") == nullptr);
}

TEST_CASE("identity checks build their steps at their own levels") {
  const auto c2 = ctx(2, 2);
  const auto c3 = ctx(3, 2);
  for (const auto& def : registry()) {
    if (def.kind != CheckDef::Kind::Identity) continue;
    const auto& c = def.min_n <= 2 && def.max_n >= 2 ? c2 : c3;
    const auto steps = def.steps(Builder(c));
    CHECK_MESSAGE(!steps.empty(), def.id);
  }
}

TEST_CASE("b01 rewriting replaces b01^d using the first c1i of a term") {
  const auto c = ctx(3, 2);
  const Ideal in = c.ideal(std::vector<std::string>{"b01^2*c12*c13"});
  const Ideal out = rewrite_b01(c, in);
  REQUIRE(out.size() == 1);
  CHECK(out.generators()[0] == c.poly("b04^2*b12^4*c12*c13"));
}

TEST_CASE("exact monomial division") {
  const auto c = ctx(2, 2);
  const Ideal in = c.ideal(std::vector<std::string>{"b01^2*c11", "b01^3"});
  CHECK(ideal_equal(divide_by(in, c.poly("b01^2")), c.ideal(std::vector<std::string>{"c11", "b01"})));
  CHECK_THROWS_AS(divide_by(in, c.poly("c11")), Error);
}
