#include "pmod/grading.hpp"

#include <algorithm>
#include <cctype>

namespace pmod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_dims(const Grade& a, const Grade& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "grades of length " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

}  // namespace

Epsilon::Epsilon(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0) throw Error(ErrorKind::InvalidArgument, "epsilon must be nonnegative");
}

Epsilon Epsilon::parse(std::string_view text) { return Epsilon(parse_rational(trim(text))); }

Grade::Grade(std::initializer_list<long> coords) {
  for (long c : coords) coords_.emplace_back(c);
}

Grade Grade::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty grade");
  if (text.front() != '(') return Grade({parse_rational(text)});
  if (text.back() != ')') throw Error(ErrorKind::InvalidArgument, "unterminated grade '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  std::vector<Rational> coords;
  while (true) {
    auto comma = text.find(',');
    coords.push_back(parse_rational(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Grade(std::move(coords));
}

std::string Grade::to_string(bool bare_1d) const {
  if (bare_1d && coords_.size() == 1) return pmod::to_string(coords_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ", ";
    out += pmod::to_string(coords_[i]);
  }
  return out + ")";
}

bool lex_less(const Grade& a, const Grade& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

bool grade_leq(const Grade& a, const Grade& b) {
  check_dims(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Grade grade_shift(const Grade& a, const Epsilon& e) { return grade_offset(a, e.value()); }

Grade grade_offset(const Grade& a, const Rational& delta) {
  std::vector<Rational> coords;
  coords.reserve(a.dim());
  for (const auto& c : a.coords()) coords.emplace_back(c + delta);
  return Grade(std::move(coords));
}

Grade grade_join(const Grade& a, const Grade& b) {
  check_dims(a, b);
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < a.dim(); ++i) coords.push_back(std::max(a[i], b[i]));
  return Grade(std::move(coords));
}

ExtRational ExtRational::parse(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "+inf") return infinity();
  return ExtRational(parse_rational(text));
}

const Rational& ExtRational::value() const {
  if (!value_) throw Error(ErrorKind::InvalidArgument, "value() of infinity");
  return *value_;
}

std::string ExtRational::to_string() const { return value_ ? pmod::to_string(*value_) : "inf"; }

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtRational::infinity();
  return ExtRational(Rational(*a.value_ + *b.value_));
}

}  // namespace pmod
