#include "pmod/freemod.hpp"

#include <set>

namespace pmod {

GradedSet::GradedSet(std::size_t n, std::vector<Generator> generators) : n_(n) {
  for (auto& g : generators) push_back(std::move(g));
}

std::optional<std::size_t> GradedSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

void GradedSet::push_back(Generator g) {
  if (g.grade.dim() != n_) {
    throw Error(ErrorKind::DimensionMismatch, "generator '" + g.name + "' has a grade of the wrong length");
  }
  if (index_of(g.name)) throw Error(ErrorKind::InvalidArgument, "duplicate generator name '" + g.name + "'");
  generators_.push_back(std::move(g));
}

GradedSet GradedSet::without(std::size_t index) const {
  GradedSet out = *this;
  out.generators_.erase(out.generators_.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

GradedSet GradedSet::offset(const Rational& delta) const {
  GradedSet out = *this;
  for (auto& g : out.generators_) g.grade = grade_offset(g.grade, delta);
  return out;
}

bool respects_pattern(const GradedSet& basis, const HomogeneousElement& v) {
  if (v.coeffs.size() != basis.size()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!v.coeffs[i].is_zero() && !grade_leq(basis.grade(i), v.grade)) return false;
  }
  return true;
}

HomogeneousElement make_element(const FieldSpec& field, const GradedSet& basis, const Grade& u, Vector coeffs) {
  if (coeffs.size() != basis.size()) {
    throw Error(ErrorKind::BasisMismatch, "coefficient vector length differs from basis size");
  }
  if (u.dim() != basis.params()) throw Error(ErrorKind::DimensionMismatch, "element grade length");
  for (const auto& c : coeffs) {
    if (!(c.field() == field)) throw Error(ErrorKind::FieldMismatch, "coefficient from another field");
  }
  HomogeneousElement v{field, u, std::move(coeffs)};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!v.coeffs[i].is_zero() && !grade_leq(basis.grade(i), u)) {
      throw Error(ErrorKind::PatternViolation, "generator '" + basis[i].name + "' at " + basis.grade(i).to_string() +
                                                   " is not below " + u.to_string());
    }
  }
  return v;
}

bool MorphismMatrix::entry_allowed(const GradedSet& domain, const GradedSet& codomain, const Epsilon& shift,
                                   std::size_t i, std::size_t j) {
  return grade_leq(codomain.grade(i), grade_shift(domain.grade(j), shift));
}

MorphismMatrix::MorphismMatrix(GradedSet domain, GradedSet codomain, Matrix entries, Epsilon shift)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(entries)), shift_(std::move(shift)) {
  if (entries_.rows() != codomain_.size() || entries_.cols() != domain_.size()) {
    throw Error(ErrorKind::BasisMismatch, "matrix shape does not match its bases");
  }
  for (std::size_t i = 0; i < entries_.rows(); ++i) {
    for (std::size_t j = 0; j < entries_.cols(); ++j) {
      if (!entries_(i, j).is_zero() && !entry_allowed(domain_, codomain_, shift_, i, j)) {
        throw Error(ErrorKind::PatternViolation, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                                     ") violates the grade pattern");
      }
    }
  }
}

MorphismMatrix MorphismMatrix::identity(const FieldSpec& field, const GradedSet& basis) {
  return MorphismMatrix(basis, basis, Matrix::identity(field, basis.size()));
}

MorphismMatrix MorphismMatrix::zero(const FieldSpec& field, const GradedSet& domain, const GradedSet& codomain,
                                    Epsilon shift) {
  return MorphismMatrix(domain, codomain, Matrix(field, codomain.size(), domain.size()), std::move(shift));
}

MorphismMatrix& MorphismMatrix::operator+=(const MorphismMatrix& other) {
  if (!(domain_ == other.domain_) || !(codomain_ == other.codomain_) || !(shift_ == other.shift_)) {
    throw Error(ErrorKind::BasisMismatch, "sum of morphisms between different free modules");
  }
  entries_ += other.entries_;
  return *this;
}

HomogeneousElement apply(const MorphismMatrix& f, const HomogeneousElement& v) {
  if (v.coeffs.size() != f.domain().size()) throw Error(ErrorKind::BasisMismatch, "element is not over f's domain");
  return HomogeneousElement{f.entries().field(), grade_shift(v.grade, f.shift()), f.entries() * v.coeffs};
}

MorphismMatrix compose(const MorphismMatrix& g, const MorphismMatrix& f) {
  if (!(f.codomain() == g.domain())) throw Error(ErrorKind::BasisMismatch, "codomain of f is not the domain of g");
  return MorphismMatrix(f.domain(), g.codomain(), g.entries() * f.entries(), f.shift() + g.shift());
}

std::vector<Vector> vectors_below(const std::vector<HomogeneousElement>& W, const Grade& u) {
  std::vector<Vector> out;
  for (const auto& w : W) {
    if (grade_leq(w.grade, u)) out.push_back(w.coeffs);
  }
  return out;
}

SpanResult span_membership(const HomogeneousElement& v, const std::vector<HomogeneousElement>& W) {
  std::vector<std::size_t> usable;
  std::vector<Vector> columns;
  for (std::size_t k = 0; k < W.size(); ++k) {
    if (W[k].coeffs.size() != v.coeffs.size()) throw Error(ErrorKind::BasisMismatch, "span over different bases");
    if (!(W[k].field == v.field)) throw Error(ErrorKind::FieldMismatch, "span over different fields");
    if (grade_leq(W[k].grade, v.grade)) {
      usable.push_back(k);
      columns.push_back(W[k].coeffs);
    }
  }
  SpanResult result{false, zero_vector(v.field, W.size())};
  auto x = solve(Matrix::from_columns(v.field, v.coeffs.size(), columns), v.coeffs);
  if (!x) return result;
  result.member = true;
  for (std::size_t i = 0; i < usable.size(); ++i) result.coefficients[usable[i]] = (*x)[i];
  return result;
}

}  // namespace pmod
