#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmod/grading.hpp"
#include "pmod/linalg.hpp"

namespace pmod {

struct Generator {
  std::string name;
  Grade grade;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// An ordered n-graded set; the order fixes row/column indexing of every
/// vector and matrix built over it.
class GradedSet {
 public:
  GradedSet() = default;
  GradedSet(std::size_t n, std::vector<Generator> generators);

  std::size_t params() const { return n_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  const Grade& grade(std::size_t i) const { return generators_[i].grade; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  void push_back(Generator g);
  GradedSet without(std::size_t index) const;
  /// The same names with every grade offset by delta.
  GradedSet offset(const Rational& delta) const;

  friend bool operator==(const GradedSet&, const GradedSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Generator> generators_;
};

/// A homogeneous element of a free module, stored as its grade and its
/// coefficient vector over a basis. coeffs[i] may be nonzero only when
/// gr(b_i) <= grade.
struct HomogeneousElement {
  FieldSpec field = FieldSpec::rationals();
  Grade grade;
  Vector coeffs;

  bool is_zero() const { return pmod::is_zero(coeffs); }
  friend bool operator==(const HomogeneousElement&, const HomogeneousElement&) = default;
};

/// Throws PatternViolation when a nonzero coefficient sits on a generator
/// whose grade is not <= u.
HomogeneousElement make_element(const FieldSpec& field, const GradedSet& basis, const Grade& u, Vector coeffs);
bool respects_pattern(const GradedSet& basis, const HomogeneousElement& v);

/// A morphism <B> -> <B'>(shift) of free modules. Entry (i, j) is the
/// coefficient of b'_i in the image of b_j and must vanish unless
/// gr(b'_i) <= gr(b_j) + shift.
class MorphismMatrix {
 public:
  MorphismMatrix(GradedSet domain, GradedSet codomain, Matrix entries, Epsilon shift = Epsilon());
  static MorphismMatrix identity(const FieldSpec& field, const GradedSet& basis);
  static MorphismMatrix zero(const FieldSpec& field, const GradedSet& domain, const GradedSet& codomain,
                             Epsilon shift = Epsilon());

  const GradedSet& domain() const { return domain_; }
  const GradedSet& codomain() const { return codomain_; }
  const Matrix& entries() const { return entries_; }
  const Epsilon& shift() const { return shift_; }

  /// Whether (i, j) is allowed to be nonzero.
  static bool entry_allowed(const GradedSet& domain, const GradedSet& codomain, const Epsilon& shift, std::size_t i,
                            std::size_t j);

  MorphismMatrix& operator+=(const MorphismMatrix& other);
  friend MorphismMatrix operator+(MorphismMatrix a, const MorphismMatrix& b) { return a += b; }

 private:
  GradedSet domain_;
  GradedSet codomain_;
  Matrix entries_;
  Epsilon shift_;
};

/// f(v): an element over f.codomain at grade gr(v) + shift.
HomogeneousElement apply(const MorphismMatrix& f, const HomogeneousElement& v);
/// g o f; requires f.codomain == g.domain. Shifts add.
MorphismMatrix compose(const MorphismMatrix& g, const MorphismMatrix& f);

struct SpanResult {
  bool member = false;
  /// One coefficient per element of W; zero for elements not below gr(v).
  Vector coefficients;
};

/// Whether v lies in the submodule generated by W, tested at grade gr(v):
/// only elements w with gr(w) <= gr(v) participate, and the transition to
/// gr(v) leaves their coefficient vectors unchanged.
SpanResult span_membership(const HomogeneousElement& v, const std::vector<HomogeneousElement>& W);

/// Coefficient vectors of the elements of W lying at grades <= u.
std::vector<Vector> vectors_below(const std::vector<HomogeneousElement>& W, const Grade& u);

}  // namespace pmod
