#include "idealforge/scalars.hpp"

#include <algorithm>
#include <numeric>

namespace idealforge {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field::Field(FieldSpec spec) : spec_(spec), p_(spec.modulus.value_or(0)) {}

FieldPtr Field::make(const FieldSpec& spec) {
  if (spec.unity_order == 0) throw Error("unity_order must be positive");
  if (spec.kind == FieldKind::Rationals) {
    if (spec.modulus) throw Error("the rationals take no modulus");
    if (spec.unity_order > 2) {
      throw Error("Q contains only the roots of unity +1 and -1 (unity_order " +
                  std::to_string(spec.unity_order) + " requested)");
    }
    return FieldPtr(new Field(spec));
  }
  if (!spec.modulus) throw Error("prime field requires a modulus");
  const std::uint64_t p = *spec.modulus;
  if (p >= kMaxModulus) throw Error("prime field modulus must be below 2^32");
  if (!is_prime_u64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  if ((p - 1) % spec.unity_order != 0) {
    throw Error("modulus " + std::to_string(p) + " is not 1 mod " + std::to_string(spec.unity_order) +
                "; no primitive root of that order exists");
  }
  return FieldPtr(new Field(spec));
}

FieldPtr Field::rationals() { return make({FieldKind::Rationals, std::nullopt, 2}); }

std::uint64_t Field::default_verification_prime(std::uint64_t unity_order) {
  if (unity_order == 0) throw Error("unity_order must be positive");
  const std::uint64_t floor = std::uint64_t{1} << 30;
  std::uint64_t p = (floor / unity_order + 1) * unity_order + 1;
  while (p <= floor) p += unity_order;
  while (!is_prime_u64(p)) {
    p += unity_order;
    if (p >= kMaxModulus) throw Error("no suitable prime below 2^32");
  }
  return p;
}

bool Field::same_as(const Field& other) const {
  return this == &other || (spec_.kind == other.spec_.kind && p_ == other.p_);
}

std::string Field::name() const {
  if (!is_prime_field()) return "QQ";
  return "GF(" + std::to_string(p_) + ")";
}

Scalar Field::zero() const { return is_prime_field() ? Scalar(std::uint64_t{0}) : Scalar(mpq_class(0)); }
Scalar Field::one() const { return is_prime_field() ? Scalar(std::uint64_t{1}) : Scalar(mpq_class(1)); }

Scalar Field::from_int(std::int64_t v) const {
  if (!is_prime_field()) return Scalar(mpq_class(static_cast<long>(v)));
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Scalar(static_cast<std::uint64_t>(r));
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (!is_prime_field()) return Scalar(mpq_class(v));
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Scalar(static_cast<std::uint64_t>(r.get_ui()));
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw ParseError("zero denominator");
  if (!is_prime_field()) return Scalar(mpq_class(num, den));
  Scalar d = from_mpz(den);
  if (is_zero(d)) throw ParseError("denominator vanishes in " + name());
  return div(from_mpz(num), d);
}

bool Field::is_zero(const Scalar& a) const {
  return a.is_residue() ? a.residue() == 0 : sgn(a.rational()) == 0;
}

bool Field::is_one(const Scalar& a) const {
  return a.is_residue() ? a.residue() == 1 : a.rational() == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (a.is_residue()) {
    std::uint64_t s = a.residue() + b.residue();
    return Scalar(s >= p_ ? s - p_ : s);
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (a.is_residue()) {
    return Scalar(a.residue() >= b.residue() ? a.residue() - b.residue() : a.residue() + p_ - b.residue());
  }
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (a.is_residue()) return Scalar(a.residue() * b.residue() % p_);
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
  if (a.is_residue()) return Scalar(a.residue() == 0 ? 0 : p_ - a.residue());
  return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error("division by zero in " + name());
  if (a.is_residue()) return Scalar(powmod64(a.residue(), p_ - 2, p_));
  return Scalar(mpq_class(1 / a.rational()));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, std::uint64_t e) const {
  if (a.is_residue()) return Scalar(powmod64(a.residue(), e, p_));
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), a.rational().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), a.rational().get_den_mpz_t(), e);
  return Scalar(mpq_class(num, den));
}

std::uint64_t Field::multiplicative_order(const Scalar& a) const {
  if (is_zero(a)) return 0;
  if (!is_prime_field()) {
    if (a.rational() == 1) return 1;
    if (a.rational() == -1) return 2;
    return 0;
  }
  std::uint64_t order = p_ - 1;
  for (std::uint64_t q : prime_factors(p_ - 1)) {
    while (order % q == 0 && powmod64(a.residue(), order / q, p_) == 1) order /= q;
  }
  return order;
}

std::vector<Scalar> Field::roots_of_unity(std::uint64_t m) const {
  if (m == 0) throw Error("root order must be positive");
  if (!is_prime_field()) {
    if (m == 1) return {one()};
    if (m == 2) return {from_int(-1), one()};
    throw Error("Q has no primitive root of unity of order " + std::to_string(m));
  }
  if ((p_ - 1) % m != 0) {
    throw Error(name() + " has no primitive root of unity of order " + std::to_string(m));
  }
  // A generator of the multiplicative group.
  const auto factors = prime_factors(p_ - 1);
  std::uint64_t g = 2;
  for (;; ++g) {
    bool generator = std::all_of(factors.begin(), factors.end(),
                                 [&](std::uint64_t q) { return powmod64(g, (p_ - 1) / q, p_) != 1; });
    if (generator || p_ == 2) break;
  }
  const std::uint64_t zeta = powmod64(g, (p_ - 1) / m, p_);
  std::vector<std::uint64_t> residues;
  std::uint64_t acc = 1;
  for (std::uint64_t k = 0; k < m; ++k) {
    residues.push_back(acc);
    acc = mulmod64(acc, zeta, p_);
  }
  std::sort(residues.begin(), residues.end());
  std::vector<Scalar> out;
  for (auto r : residues) out.emplace_back(r);
  return out;
}

Scalar Field::root_of_unity(std::uint64_t m) const {
  if (!is_prime_field()) {
    if (m == 1) return one();
    if (m == 2) return from_int(-1);
    throw Error("Q has no primitive root of unity of order " + std::to_string(m));
  }
  if (spec_.unity_order % m != 0 && (p_ - 1) % m != 0) {
    throw Error(name() + " has no primitive root of unity of order " + std::to_string(m));
  }
  for (const auto& r : roots_of_unity(m)) {
    if (multiplicative_order(r) == m) return r;
  }
  throw Error("no primitive root of order " + std::to_string(m));
}

std::string Field::format(const Scalar& a) const {
  if (a.is_residue()) {
    const std::uint64_t r = a.residue();
    if (r > p_ / 2) return "-" + std::to_string(p_ - r);
    return std::to_string(r);
  }
  return a.rational().get_str();
}

std::string Field::describe(const Scalar& a) const {
  if (a.is_residue()) return std::to_string(a.residue()) + " mod " + std::to_string(p_);
  return a.rational().get_str();
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ParseError("empty scalar literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return from_mpz(mpz_class(s, 10));
    return from_fraction(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed scalar literal '" + s + "'");
  }
}

Scalar Field::random_small(std::mt19937_64& rng, int lo, int hi) const {
  std::uniform_int_distribution<int> dist(lo, hi);
  return from_int(dist(rng));
}

Scalar Field::random_nonzero(std::mt19937_64& rng) const {
  if (is_prime_field()) {
    std::uniform_int_distribution<std::uint64_t> dist(1, p_ - 1);
    return Scalar(dist(rng));
  }
  std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
  int n = 0;
  while (n == 0) n = num(rng);
  return Scalar(mpq_class(n, den(rng)));
}

}  // namespace idealforge
