#include "pmod/scalars.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace pmod {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::InvalidArgument, "malformed rational literal '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, "F_" + std::to_string(p) + " is not a word-sized prime field");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    std::uint64_t p = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return prime_field(p);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown field '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long value) {
  if (field.is_rational()) return Scalar(Rational(value));
  return Scalar(Residue{reduce(mpz_class(value), field.characteristic()), field.characteristic()});
}

Scalar Scalar::from_rational(const FieldSpec& field, const Rational& value) {
  if (field.is_rational()) return Scalar(value);
  std::uint64_t p = field.characteristic();
  std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + field.to_string());
  Scalar num(Residue{reduce(value.get_num(), p), p});
  return num * Scalar(Residue{den, p}).inverse();
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  if (field.is_rational()) return Scalar(parse_rational(text));
  if (!is_integer_literal(text)) return from_rational(field, parse_rational(text));  // a/b means a * b^-1
  if (text.front() == '+') text.remove_prefix(1);
  return Scalar(Residue{reduce(mpz_class(std::string(text), 10), field.characteristic()), field.characteristic()});
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return FieldSpec(r->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<Rational>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<Rational>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
  const auto* r = std::get_if<Residue>(&value_);
  if (r == nullptr) throw Error(ErrorKind::FieldMismatch, "residue() on a rational scalar");
  return r->value;
}

const Rational& Scalar::rational() const {
  const auto* q = std::get_if<Rational>(&value_);
  if (q == nullptr) throw Error(ErrorKind::FieldMismatch, "rational() on a residue scalar");
  return *q;
}

void Scalar::check_same_field(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->p != b->p)) {
    throw Error(ErrorKind::FieldMismatch, "scalars from different fields");
  }
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  }
  return Scalar(Rational(-std::get<Rational>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(other.value_).value) % r->p;
  } else {
    std::get<Rational>(value_) += std::get<Rational>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = r->value * std::get<Residue>(other.value_).value % r->p;
  } else {
    std::get<Rational>(value_) *= std::get<Rational>(other.value_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->value == std::get<Scalar::Residue>(b.value_).value;
  }
  return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{mod_pow(r->value, r->p - 2, r->p), r->p});
  }
  Rational q = 1 / std::get<Rational>(value_);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return pmod::to_string(std::get<Rational>(value_));
}

std::string Scalar::to_signed_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->value > r->p / 2) return "-" + std::to_string(r->p - r->value);
    return std::to_string(r->value);
  }
  return pmod::to_string(std::get<Rational>(value_));
}

}  // namespace pmod
