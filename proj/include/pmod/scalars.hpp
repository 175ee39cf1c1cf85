#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "pmod/error.hpp"

namespace pmod {

using Rational = mpq_class;

/// Parses `n`, `-n` or `n/d` into a normalized rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// The coefficient field: either Q or F_p for a word-sized prime p.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws InvalidArgument unless p is prime and below 2^32.
  static FieldSpec prime_field(std::uint64_t p);
  /// Accepts `Q` or `F<p>`.
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// An element of a FieldSpec. Rationals are kept in lowest terms, residues
/// in [0, p). Mixing fields throws FieldMismatch.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long value);
  static Scalar from_rational(const FieldSpec& field, const Rational& value);
  /// Rational literal; over F_p, a/b is read as a * b^-1.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Residue representative in [0, p); only valid over F_p.
  std::uint64_t residue() const;
  /// The rational value; only valid over Q.
  const Rational& rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;

  /// Canonical text: `num/den` (or `num`) over Q, residue in [0, p) over F_p.
  std::string to_string() const;
  /// Like to_string but residues above p/2 print as negatives; used for
  /// human-facing monomial notation.
  std::string to_signed_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
  };

  explicit Scalar(Rational q) : value_(std::move(q)) { std::get<Rational>(value_).canonicalize(); }
  explicit Scalar(Residue r) : value_(r) {}

  void check_same_field(const Scalar& other) const;

  std::variant<Residue, Rational> value_;
};

inline Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar inv(const Scalar& a) { return a.inverse(); }

}  // namespace pmod
