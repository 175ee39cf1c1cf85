#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pmod/freemod.hpp"

namespace pmod {

struct Relation {
  std::string name;
  HomogeneousElement element;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// A finite presentation <G | R> of an n-module over a fixed field.
class Presentation {
 public:
  /// Validates grade lengths, zero patterns, fields and name uniqueness.
  Presentation(std::string name, FieldSpec field, std::size_t n, GradedSet generators, std::vector<Relation> relations);
  /// The zero module with no generators.
  static Presentation zero(const FieldSpec& field, std::size_t n, std::string name = "Z");

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  std::size_t params() const { return n_; }
  const GradedSet& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::vector<HomogeneousElement> relation_elements() const;

  Presentation renamed(std::string name) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::string name_;
  FieldSpec field_;
  std::size_t n_;
  GradedSet generators_;
  std::vector<Relation> relations_;
};

/// Reads the line-oriented `.pmod` format:
///
///   module M
///   field F5
///   params 2
///   gen a @ (0, 0)
///   rel r1 @ (2, 1) = 1*a + 4*b
///
/// `#` starts a comment. Throws SyntaxError (with line/column) or
/// PatternViolation for a relation carrying a generator above its grade.
Presentation parse_presentation(std::string_view text);
Presentation read_presentation_file(const std::string& path);
std::string serialize(const Presentation& p);

/// |G| x |R| matrix; column i is the coefficient vector of relation i.
Matrix relation_matrix(const Presentation& p);

/// A minimal presentation of the same module. Repeats unit-pivot
/// elimination (a relation whose grade equals a generator's grade and which
/// has a nonzero coefficient on it removes both) until none applies, then
/// drops relations lying in the span of the remaining ones. Relations come
/// out sorted lexicographically by grade, ties in input order.
Presentation minimize(const Presentation& p);

/// Per-axis sorted coordinate sets of the grades in a minimal presentation.
struct CriticalGrades {
  std::vector<std::vector<Rational>> axes;
};
CriticalGrades critical_grades(const Presentation& p);

/// Forward produces the presentation with every grade lowered by e, the
/// G(e) convention; Backward raises every grade by e, the G(-e) convention.
enum class ShiftDirection { Forward, Backward };
Presentation shift_presentation(const Presentation& p, const Epsilon& e, ShiftDirection direction);

/// Cyclic module with one generator at `lower` and one relation at each upper
/// grade; with n = 1 and one upper grade d this is the interval [lower, d).
Presentation box_interval(const FieldSpec& field, const Grade& lower, const std::vector<Grade>& uppers);

/// Monomial notation, e.g. `x b - x^2 a` (n = 1) or `x1^2 a` (n >= 2).
/// Terms follow basis order; residues print with symmetric signs.
std::string format_element(const HomogeneousElement& v, const GradedSet& basis);
/// Inverse of format_element. Every term must land on the same grade.
HomogeneousElement parse_monomial_element(std::string_view text, const GradedSet& basis, const FieldSpec& field);

}  // namespace pmod
