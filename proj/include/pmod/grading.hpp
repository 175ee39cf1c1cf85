#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmod/scalars.hpp"

namespace pmod {

/// A nonnegative rational shift amount.
class Epsilon {
 public:
  Epsilon() = default;
  explicit Epsilon(Rational value);
  Epsilon(long value) : Epsilon(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  static Epsilon parse(std::string_view text);

  const Rational& value() const { return value_; }
  std::string to_string() const { return pmod::to_string(value_); }

  friend Epsilon operator+(const Epsilon& a, const Epsilon& b) { return Epsilon(Rational(a.value_ + b.value_)); }
  friend bool operator==(const Epsilon& a, const Epsilon& b) { return a.value_ == b.value_; }
  friend bool operator<(const Epsilon& a, const Epsilon& b) { return a.value_ < b.value_; }

 private:
  Rational value_{0};
};

/// A point of the parameter poset Q^n.
class Grade {
 public:
  Grade() = default;
  explicit Grade(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) c.canonicalize();
  }
  Grade(std::initializer_list<long> coords);
  static Grade zero(std::size_t n) { return Grade(std::vector<Rational>(n, Rational(0))); }
  /// Accepts `(q1, ..., qn)`; a bare rational is read as a 1-vector.
  static Grade parse(std::string_view text);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  /// `(q1, ..., qn)`, or the bare coordinate when n == 1 and `bare_1d` is set.
  std::string to_string(bool bare_1d = false) const;

  friend bool operator==(const Grade& a, const Grade& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order, used only for deterministic sorting.
  friend bool lex_less(const Grade& a, const Grade& b);

 private:
  std::vector<Rational> coords_;
};

/// Componentwise order; throws DimensionMismatch for unequal lengths.
bool grade_leq(const Grade& a, const Grade& b);

/// a + e on every coordinate.
Grade grade_shift(const Grade& a, const Epsilon& e);
/// a + delta on every coordinate, delta of any sign.
Grade grade_offset(const Grade& a, const Rational& delta);
/// Componentwise maximum.
Grade grade_join(const Grade& a, const Grade& b);

/// A rational or +infinity.
class ExtRational {
 public:
  ExtRational() : value_(Rational(0)) {}
  ExtRational(Rational value) : value_(std::move(value)) { value_->canonicalize(); }  // NOLINT(google-explicit-constructor)
  ExtRational(long value) : value_(Rational(value)) {}       // NOLINT(google-explicit-constructor)
  static ExtRational infinity() { return ExtRational(std::nullopt); }
  /// Rational literal, or `inf`.
  static ExtRational parse(std::string_view text);

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  std::string to_string() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);

 private:
  explicit ExtRational(std::optional<Rational> v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

}  // namespace pmod
