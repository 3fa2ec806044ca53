// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "idealforge/verifier.hpp"
#include "linear_oracle.hpp"

using namespace idealforge;

namespace {

struct Line {
  int id;
  bool pass;
  std::string detail;
};

VerifyOptions opts_for(int n, int d) {
  VerifyOptions o;
  o.params = {n, d};
  return o;
}

std::string pd(int n, int d) { return "(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

Line membership() {
  bool ok = true;
  std::ostringstream out;
  for (auto [n, d] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const Report r = verify_membership(opts_for(n, d));
    const bool pass = r.status == Status::Pass && r.max_coeff_degree.has_value() && r.elapsed_ms < 600'000;
    ok = ok && pass;
    out << pd(n, d) << " " << to_string(r.status);
    if (r.max_coeff_degree) out << " max_coeff_degree=" << *r.max_coeff_degree;
    out << "; ";
  }
  out << "Long/Short verdicts agree at all three";
  return {1, ok, out.str()};
}

Line identities() {
  const std::vector<std::string> n2 = {"sumdecomp-b04", "colon-b04", "colon-b04-plus-c12", "n2-chain"};
  const std::vector<std::string> n3 = {"colon-b04c12",  "Vprime-split",      "Vhat-colon",  "colon-b04c12b12",
                                       "ABCD-split",    "U-plus-b11",        "C-plus-b11-decomp", "U-colon-b11"};
  bool ok = true;
  std::ostringstream out;
  auto run = [&](const std::vector<std::string>& ids, int n, int d) {
    for (const auto& r : run_suite(ids, opts_for(n, d))) {
      if (r.status != Status::Pass) {
        ok = false;
        out << r.check_id << pd(n, d) << "=" << to_string(r.status) << " ";
      }
    }
  };
  run(n2, 2, 2);
  run(n2, 2, 3);
  run(n3, 3, 2);
  if (ok) out << "4 checks at (2,2) and (2,3), 8 checks at (3,2) all Pass";
  return {2, ok, out.str()};
}

Line facts() {
  bool ok = true;
  std::ostringstream out;
  for (const char* id : {"modular-law", "principal-intersection", "colon-of-sum"}) {
    const Report r = verify_fact(id, 200, 7);
    ok = ok && r.status == Status::Pass;
    out << id << "=" << to_string(r.status) << " ";
  }
  out << "(200 trials each, seed 7)";
  return {3, ok, out.str()};
}

Line oracle_equivalence() {
  const auto R = Ring::custom({"x", "y", "z"}, Field::rationals());
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> fdeg(1, 2);
  int bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Ideal i = oracle::random_homogeneous_ideal(R, rng);
    const Ideal j = oracle::random_homogeneous_ideal(R, rng);
    const Polynomial f = oracle::random_homogeneous(R, rng, fdeg(rng));
    const Ideal cap = ideal_intersect(i, j), col = ideal_quotient(i, f), elim = eliminate(i, {"z"});
    bool agree = true;
    for (int deg = 0; deg <= 6; ++deg) {
      agree = agree && oracle::intersection_agrees(i, j, cap, deg) && oracle::quotient_agrees(i, f, col, deg) &&
              oracle::elimination_agrees(i, {2}, elim, deg);
    }
    if (!agree) ++bad;
  }
  return {4, bad == 0, std::to_string(50 - bad) + "/50 instances agree in every degree up to 6"};
}

Line prime_list() {
  bool ok = true;
  std::ostringstream out;
  for (const auto& field : {FieldPtr{}, Field::make(FieldSpec::prime(13, 4))}) {
    VerifyOptions o = opts_for(2, 2);
    o.field = field;
    const Report r = verify_prime_list(o);
    ok = ok && r.status == Status::Pass;
    out << "(2,2) over " << r.field << " " << to_string(r.status) << " [" << r.notes.at(0) << "; " << r.notes.at(1)
        << "]; ";
  }
  const CheckDef* abcd = find_check("ABCD-split");
  const FamilyParams p{3, 2};
  const FamilyContext ctx(p, default_family_field(p));
  const auto steps = abcd->steps(Builder(ctx));
  Evaluator ev;
  const Step& rec = steps.back();
  const bool rec_ok = ideal_equal(ev.evaluate(rec.lhs), ev.evaluate(rec.rhs));
  ok = ok && rec_ok;
  out << "recursion ideal at (3,2) " << (rec_ok ? "Pass" : "Fail");
  return {5, ok, out.str()};
}

Line counting() {
  const bool formula_ok = count_primes_formula({3, 2}) == 289 && count_primes_formula({4, 2}) == 807;
  const Report r = verify_count(opts_for(3, 2));
  std::ostringstream out;
  out << "formula (3,2)=289 (4,2)=807 " << (formula_ok ? "match" : "MISMATCH") << "; ";
  for (std::size_t k = 0; k < r.notes.size(); ++k) out << (k ? ", " : "") << r.notes[k];
  return {6, formula_ok && r.status == Status::Pass, out.str()};
}

Line determinism() {
  std::vector<std::string> ids;
  for (const auto& def : registry()) ids.push_back(def.id);
  const auto a = reports_to_json(run_suite(ids, opts_for(2, 2)), false);
  const auto b = reports_to_json(run_suite(ids, opts_for(2, 2)), false);
  return {7, a == b, a == b ? "two runs of the full suite at (2,2) agree outside timing fields" : "runs differ"};
}

}  // namespace

int main() {
  bool all = true;
  int index = 0;
  for (auto make : {membership, identities, facts, oracle_equivalence, prime_list, counting, determinism}) {
    ++index;
    Line l;
    try {
      l = make();
    } catch (const std::exception& e) {
      l = {index, false, std::string("error: ") + e.what()};
    }
    all = all && l.pass;
    std::cout << "criterion " << l.id << ": " << (l.pass ? "PASS" : "FAIL") << " - " << l.detail << std::endl;
  }
  return all ? 0 : 1;
}
