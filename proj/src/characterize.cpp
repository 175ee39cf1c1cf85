#include "pmod/characterize.hpp"

#include <algorithm>

namespace pmod {

namespace {

// Relations of `y` lifted onto `basis`, each regraded by delta.
std::vector<Relation> regraded(const std::vector<HomogeneousElement>& y, const std::string& prefix,
                               const Rational& delta) {
  std::vector<Relation> out;
  for (std::size_t k = 0; k < y.size(); ++k) {
    HomogeneousElement v = y[k];
    v.grade = grade_offset(v.grade, delta);
    out.push_back({prefix + std::to_string(k + 1), std::move(v)});
  }
  return out;
}

bool respects(const std::vector<HomogeneousElement>& ys, const GradedSet& own, const GradedSet& other,
              const Epsilon& e) {
  for (const auto& y : ys) {
    if (y.coeffs.size() != own.size() + other.size()) return false;
    for (std::size_t i = 0; i < own.size(); ++i) {
      if (!y.coeffs[i].is_zero() && !grade_leq(own.grade(i), y.grade)) return false;
    }
    for (std::size_t j = 0; j < other.size(); ++j) {
      if (!y.coeffs[own.size() + j].is_zero() && !grade_leq(grade_shift(other.grade(j), e), y.grade)) return false;
    }
  }
  return true;
}

// Y2 is stored over W1 then W2; reorder to W2 then W1 for `respects`.
std::vector<HomogeneousElement> swap_blocks(const std::vector<HomogeneousElement>& ys, std::size_t first) {
  std::vector<HomogeneousElement> out = ys;
  for (auto& y : out) std::rotate(y.coeffs.begin(), y.coeffs.begin() + first, y.coeffs.end());
  return out;
}

}  // namespace

GradedSet CompatiblePair::combined_basis() const {
  GradedSet out = w1;
  for (const auto& g : w2.generators()) out.push_back(g);
  return out;
}

bool grade_invariants_hold(const CompatiblePair& pair) {
  if (pair.w1.params() != pair.w2.params()) return false;
  return respects(pair.y1, pair.w1, pair.w2, pair.e) &&
         respects(swap_blocks(pair.y2, pair.w1.size()), pair.w2, pair.w1, pair.e);
}

CompatibleResult induced_presentations(const CompatiblePair& pair) {
  if (!grade_invariants_hold(pair)) throw Error(ErrorKind::PatternViolation, "pair breaks its grade invariants");
  const Rational& e = pair.e.value();
  const std::size_t n = pair.w1.params();

  GradedSet gens_m = pair.w1;
  const GradedSet raised_w2 = pair.w2.offset(e);
  for (const auto& g : raised_w2.generators()) gens_m.push_back(g);
  std::vector<Relation> rels_m = regraded(pair.y1, "y1_", Rational(0));
  for (auto& r : regraded(pair.y2, "y2_", e)) rels_m.push_back(std::move(r));

  GradedSet gens_n = pair.w1.offset(e);
  for (const auto& g : pair.w2.generators()) gens_n.push_back(g);
  std::vector<Relation> rels_n = regraded(pair.y1, "y1_", e);
  for (auto& r : regraded(pair.y2, "y2_", Rational(0))) rels_n.push_back(std::move(r));

  return CompatibleResult{pair, Presentation("M'", pair.field, n, std::move(gens_m), std::move(rels_m)),
                          Presentation("N'", pair.field, n, std::move(gens_n), std::move(rels_n))};
}

CompatibleResult compatible_presentations(const Presentation& pm, const Presentation& pn,
                                          const InterleavingWitness& witness, const Epsilon& e) {
  InterleavingProblem prob(pm, pn, e);
  if (!verify_witness(witness, prob)) throw Error(ErrorKind::InvalidWitness, "witness is not an interleaving");
  const FieldSpec& field = pm.field();
  const GradedSet& gm = pm.generators();
  const GradedSet& gn = pn.generators();

  CompatiblePair pair;
  pair.field = field;
  pair.e = e;
  pair.w1 = gm;
  std::vector<Generator> renamed;
  for (auto g : gn.generators()) {
    while (gm.index_of(g.name)) g.name += "'";
    renamed.push_back(std::move(g));
  }
  pair.w2 = GradedSet(pn.params(), std::move(renamed));
  const std::size_t total = gm.size() + gn.size();

  for (const auto& r : pm.relations()) {
    Vector v = r.element.coeffs;
    v.resize(total, Scalar::zero(field));
    pair.y1.push_back({field, r.element.grade, std::move(v)});
  }
  const Matrix& b = witness.b.entries();
  for (std::size_t j = 0; j < gn.size(); ++j) {
    Vector v = zero_vector(field, total);
    for (std::size_t i = 0; i < gm.size(); ++i) v[i] = -b(i, j);
    v[gm.size() + j] = Scalar::one(field);
    pair.y1.push_back({field, grade_shift(gn.grade(j), e), std::move(v)});
  }

  for (const auto& r : pn.relations()) {
    Vector v = zero_vector(field, gm.size());
    v.insert(v.end(), r.element.coeffs.begin(), r.element.coeffs.end());
    pair.y2.push_back({field, r.element.grade, std::move(v)});
  }
  const Matrix& a = witness.a.entries();
  for (std::size_t j = 0; j < gm.size(); ++j) {
    Vector v = zero_vector(field, total);
    v[j] = Scalar::one(field);
    for (std::size_t i = 0; i < gn.size(); ++i) v[gm.size() + i] = -a(i, j);
    pair.y2.push_back({field, grade_shift(gm.grade(j), e), std::move(v)});
  }
  return induced_presentations(pair);
}

bool verify_compatible(const CompatiblePair& pair, const Presentation& pm, const Presentation& pn,
                       const SearchOptions& options) {
  if (!(pair.field == pm.field()) || !(pair.field == pn.field())) return false;
  if (pair.w1.params() != pm.params() || pair.w2.params() != pn.params()) return false;
  if (!grade_invariants_hold(pair)) return false;
  CompatibleResult induced = induced_presentations(pair);
  return is_isomorphic(induced.induced_m, pm, options) == std::optional<bool>(true) &&
         is_isomorphic(induced.induced_n, pn, options) == std::optional<bool>(true);
}

std::string serialize(const CompatiblePair& pair) {
  const bool bare = pair.w1.params() == 1;
  GradedSet basis = pair.combined_basis();
  std::string out = "field " + pair.field.to_string() + "\nparams " + std::to_string(pair.w1.params()) +
                    "\neps " + pair.e.to_string() + "\n";
  auto gens = [&](const char* tag, const GradedSet& w) {
    out += std::string("block ") + tag + "\n";
    for (const auto& g : w.generators()) out += "gen " + g.name + " @ " + g.grade.to_string(bare) + "\n";
  };
  auto rels = [&](const char* tag, const std::vector<HomogeneousElement>& ys) {
    out += std::string("block ") + tag + "\n";
    for (const auto& y : ys) out += "rel @ " + y.grade.to_string(bare) + " = " + format_element(y, basis) + "\n";
  };
  gens("W1", pair.w1);
  gens("W2", pair.w2);
  rels("Y1", pair.y1);
  rels("Y2", pair.y2);
  return out;
}

}  // namespace pmod
