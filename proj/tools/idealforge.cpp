#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idealforge/family.hpp"
#include "idealforge/ideals.hpp"
#include "idealforge/registry.hpp"
#include "idealforge/verifier.hpp"
#include "json.hpp"

namespace ifg = idealforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Usage-level problem detected after CLI parsing (bad parameters, files, fields).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 2;
  int d = 2;
  std::string field;
  std::string order = "grevlex";
  double budget_seconds = 0;
  std::string output;
  std::string format = "text";
  std::uint64_t seed = 7;
  int trials = 200;
  bool literal = false;
  bool force = false;
  bool json_manifest = false;
  std::string name;
  std::string file_a;
  std::string file_b;
  std::string poly;
  std::string vars;
  std::string check;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "QQ", "GF(p)" or a bare prime p. Prime fields carry the given unity order
/// when p allows it.
ifg::FieldPtr parse_field(const std::string& text, std::uint64_t unity_order) {
  if (text.empty() || text == "QQ" || text == "Q") return ifg::Field::rationals();
  std::string digits = text;
  if (digits.starts_with("GF(") && digits.ends_with(")")) digits = digits.substr(3, digits.size() - 4);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("unknown field '" + text + "' (QQ, GF(p) or p)");
  }
  const std::uint64_t p = std::stoull(digits);
  try {
    return ifg::Field::make(ifg::FieldSpec::prime(p, unity_order));
  } catch (const ifg::Error& e) {
    throw UsageError(e.what());
  }
}

ifg::FamilyParams family_params(const Config& c) {
  ifg::FamilyParams p{c.n, c.d};
  try {
    ifg::validate(p);
  } catch (const ifg::Error& e) {
    throw UsageError(e.what());
  }
  return p;
}

ifg::FieldPtr family_field(const Config& c, const ifg::FamilyParams& p) {
  if (c.field.empty()) return ifg::default_family_field(p);
  return parse_field(c.field, c.field == "QQ" || c.field == "Q" ? 2 : ifg::required_unity_order(p));
}

ifg::Ideal load_ideal(const Config& c, const std::string& path) {
  try {
    return ifg::Ideal::parse(read_file(path), parse_field(c.field, 1));
  } catch (const ifg::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

ifg::Polynomial load_poly(const ifg::RingPtr& ring, const std::string& text) {
  try {
    return ifg::parse_poly(ring, text);
  } catch (const ifg::ParseError& e) {
    throw UsageError(e.what());
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

ifg::Ideal named_ideal(const ifg::FamilyContext& ctx, const std::string& name) {
  if (name == "K") return ifg::build_K(ctx);
  if (name == "Kl") return ifg::build_Kl(ctx);
  if (name == "M" || name == "N" || name == "L") {
    const auto s = ifg::build_sublevels(ctx);
    return name == "M" ? s.M : name == "N" ? s.N : s.L;
  }
  if (name == "K1" || name == "M1" || name == "N1" || name == "L1") {
    const auto s = ifg::build_shifted(ctx);
    return name == "K1" ? s.K1 : name == "M1" ? s.M1 : name == "N1" ? s.N1 : s.L1;
  }
  if (name == "Lhat") return ifg::L_hat(ctx);
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D') &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int r = std::stoi(name.substr(1));
    return name[0] == 'C' ? ifg::aux_C(ctx, r) : ifg::aux_D(ctx, r);
  }
  throw UsageError("unknown ideal '" + name + "' (K, Kl, M, N, L, K1, M1, N1, L1, Lhat, C<r>, D<r>)");
}

int cmd_family(const Config& c) {
  const auto p = family_params(c);
  const ifg::FamilyContext ctx(p, family_field(c, p), c.literal);
  const ifg::Ideal ideal = named_ideal(ctx, c.name);
  Output o(c.output);
  if (c.json_manifest) {
    nlohmann::ordered_json j;
    j["family_id"] = c.name;
    j["params"] = {{"n", p.n}, {"d", p.d}, {"field", ctx.field()->name()}};
    j["generators"] = ideal.size();
    j["max_degree"] = ideal.max_degree();
    o.out() << j.dump(2) << "\n";
  } else {
    o.out() << ideal.to_text();
  }
  return kExitOk;
}

int cmd_gb(const Config& c) {
  const ifg::Ideal ideal = load_ideal(c, c.file_a);
  ifg::MonomialOrder order;
  try {
    order = ifg::MonomialOrder::parse(c.order);
  } catch (const ifg::ParseError& e) {
    throw UsageError(e.what());
  }
  const auto& gb = ideal.gb(order);
  Output o(c.output);
  o.out() << ifg::Ideal(ideal.ring(), gb.basis).to_text();
  std::cerr << gb.basis.size() << " basis elements (" << order.name() << ")\n";
  return kExitOk;
}

int cmd_member(const Config& c) {
  const ifg::Ideal ideal = load_ideal(c, c.file_a);
  const ifg::Polynomial f = load_poly(ideal.ring(), c.poly);
  Output o(c.output);
  const auto cert = ifg::member_certificate(ideal, f);
  if (!cert) {
    o.out() << "member: no\nnormal form: " << ideal.normal_form(f).to_string() << "\n";
    return kExitFail;
  }
  o.out() << "member: yes\n";
  o.out() << "certificate re-expands: " << (cert->verify(ideal.generators()) ? "yes" : "no") << "\n";
  o.out() << "max coefficient degree: " << cert->max_coeff_degree << "\n";
  o.out() << "coefficient degrees:";
  for (const auto& q : cert->coefficients) o.out() << " " << (q.is_zero() ? -1 : q.total_degree());
  o.out() << "\n";
  return kExitOk;
}

int cmd_colon(const Config& c) {
  const ifg::Ideal ideal = load_ideal(c, c.file_a);
  ifg::Ideal result;
  if (std::ifstream(c.poly).good()) {
    const ifg::Ideal j = load_ideal(c, c.poly);
    if (!j.ring()->same_as(*ideal.ring())) throw UsageError("the two ideal files declare different rings");
    result = ifg::ideal_quotient(ideal, j);
  } else {
    const ifg::Polynomial f = load_poly(ideal.ring(), c.poly);
    if (f.is_zero()) throw UsageError("colon by the zero polynomial");
    result = ifg::ideal_quotient(ideal, f);
  }
  Output o(c.output);
  o.out() << result.to_text();
  return kExitOk;
}

int cmd_intersect(const Config& c) {
  const ifg::Ideal a = load_ideal(c, c.file_a);
  const ifg::Ideal b = load_ideal(c, c.file_b);
  if (!a.ring()->same_as(*b.ring())) throw UsageError("the two ideal files declare different rings");
  Output o(c.output);
  o.out() << ifg::ideal_intersect(a, b).to_text();
  return kExitOk;
}

int cmd_eliminate(const Config& c) {
  const ifg::Ideal ideal = load_ideal(c, c.file_a);
  std::vector<std::string> vars;
  std::stringstream ss(c.vars);
  for (std::string v; std::getline(ss, v, ',');) {
    if (v.empty()) continue;
    if (!ideal.ring()->index_of(v)) throw UsageError("unknown variable '" + v + "'");
    vars.push_back(v);
  }
  if (vars.empty()) throw UsageError("--vars needs at least one variable");
  Output o(c.output);
  o.out() << ifg::eliminate(ideal, vars).to_text();
  return kExitOk;
}

void print_text(std::ostream& out, const std::vector<ifg::Report>& reports) {
  for (const auto& r : reports) {
    out << r.check_id << " (n=" << r.n << ", d=" << r.d << ", " << r.field << "): " << ifg::to_string(r.status);
    if (r.max_coeff_degree) out << "  max_coeff_degree=" << *r.max_coeff_degree;
    out << "  [" << static_cast<long long>(r.elapsed_ms) << " ms]\n";
    if (r.witness) out << "  witness: " << *r.witness << "\n";
    for (const auto& note : r.notes) out << "  - " << note << "\n";
  }
}

int cmd_verify(const Config& c) {
  const auto p = family_params(c);
  ifg::VerifyOptions opts;
  opts.params = p;
  opts.field = family_field(c, p);
  opts.literal = c.literal;
  opts.force = c.force;
  opts.seed = c.seed;
  opts.trials = c.trials;
  std::vector<std::string> ids;
  if (c.check == "all") {
    for (const auto& def : ifg::registry()) ids.push_back(def.id);
  } else {
    if (!ifg::find_check(c.check)) throw UsageError("unknown check '" + c.check + "'");
    ids.push_back(c.check);
  }
  const auto reports = ifg::run_suite(ids, opts);
  Output o(c.output);
  if (c.format == "json") {
    o.out() << ifg::reports_to_json(reports) << "\n";
  } else {
    print_text(o.out(), reports);
  }
  return ifg::exit_code(reports) == 0 ? kExitOk : kExitFail;
}

int cmd_primes(const Config& c) {
  const auto p = family_params(c);
  const ifg::FamilyContext ctx(p, family_field(c, p), c.literal);
  const auto e = ifg::enumerate_primes(ctx);
  Output o(c.output);
  if (c.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& q : e.primes) {
      std::vector<std::string> gens;
      for (const auto& g : q.ideal.generators()) gens.push_back(g.to_string());
      arr.push_back({{"label", q.label(*ctx.field())}, {"family_id", q.family_id}, {"depth", q.depth}, {"generators", gens}});
    }
    o.out() << arr.dump(2) << "\n";
  } else {
    for (const auto& q : e.primes) {
      o.out() << q.label(*ctx.field()) << ": (";
      const auto& gens = q.ideal.generators();
      for (std::size_t k = 0; k < gens.size(); ++k) o.out() << (k ? ", " : "") << gens[k].to_string();
      o.out() << ")\n";
    }
  }
  std::cerr << e.primes.size() << " candidates, " << e.duplicates_removed << " duplicates removed\n";
  for (const auto& notice : e.notices) std::cerr << notice << "\n";
  return kExitOk;
}

int cmd_count(const Config& c) {
  const auto p = family_params(c);
  ifg::VerifyOptions opts;
  opts.params = p;
  opts.field = family_field(c, p);
  opts.force = c.force;
  const auto r = ifg::verify_count(opts);
  Output o(c.output);
  for (const auto& note : r.notes) o.out() << note << "\n";
  return r.status == ifg::Status::Fail ? kExitFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal family construction, ideal algebra and verification"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--budget-seconds", c.budget_seconds, "Time cap for one Groebner run")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", c.output, "Write data to this file instead of stdout");
  app.add_option("--field", c.field, "QQ, GF(p) or p");
  app.fallthrough();

  auto add_nd = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Number of levels")->required();
    sub->add_option("--d", c.d, "Degree parameter")->required();
  };

  auto* family = app.add_subcommand("family", "Construct named ideals of the family");
  auto* emit = family->add_subcommand("emit", "Print a named ideal in ideal text format");
  family->require_subcommand(1);
  emit->add_option("name", c.name, "K, Kl, M, N, L, K1, M1, N1, L1, Lhat, C<r>, D<r>")->required();
  add_nd(emit);
  emit->add_flag("--json", c.json_manifest, "Print a manifest instead of the generators");
  emit->add_flag("--literal", c.literal, "Use the uncorrected readings");

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
  gb->add_option("file", c.file_a)->required();
  gb->add_option("--order", c.order, "lex, grevlex or block:<k>");

  auto* member = app.add_subcommand("member", "Ideal membership with a certificate");
  member->add_option("file", c.file_a)->required();
  member->add_option("poly", c.poly)->required();

  auto* colon = app.add_subcommand("colon", "Quotient I : f or I : J");
  colon->add_option("file", c.file_a)->required();
  colon->add_option("poly-or-file", c.poly)->required();

  auto* intersect = app.add_subcommand("intersect", "Intersection of two ideal files");
  intersect->add_option("a", c.file_a)->required();
  intersect->add_option("b", c.file_b)->required();

  auto* elim = app.add_subcommand("eliminate", "Eliminate variables");
  elim->add_option("file", c.file_a)->required();
  elim->add_option("--vars", c.vars, "Comma-separated variables to eliminate")->required();

  auto* verify = app.add_subcommand("verify", "Run registry checks");
  verify->add_option("check", c.check, "Check id or 'all'")->required();
  add_nd(verify);
  verify->add_flag("--literal", c.literal, "Use the uncorrected readings");
  verify->add_flag("--force", c.force, "Run outside the default budget");
  verify->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", c.seed, "Seed for randomized facts");
  verify->add_option("--trials", c.trials, "Trials per randomized fact")->check(CLI::PositiveNumber);

  auto* primes = app.add_subcommand("primes", "Enumerate candidate associated primes");
  add_nd(primes);
  primes->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* count = app.add_subcommand("count", "Closed-form count next to the enumeration size");
  add_nd(count);
  count->add_flag("--force", c.force, "Enumerate outside the default budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (c.budget_seconds > 0) {
    ifg::set_default_gb_budget(std::chrono::milliseconds(static_cast<long long>(c.budget_seconds * 1000)));
  }

  try {
    if (*family) return cmd_family(c);
    if (*gb) return cmd_gb(c);
    if (*member) return cmd_member(c);
    if (*colon) return cmd_colon(c);
    if (*intersect) return cmd_intersect(c);
    if (*elim) return cmd_eliminate(c);
    if (*verify) return cmd_verify(c);
    if (*primes) return cmd_primes(c);
    if (*count) return cmd_count(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ifg::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitFail;
  } catch (const ifg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
