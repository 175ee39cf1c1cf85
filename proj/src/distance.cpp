#include "pmod/distance.hpp"

#include <algorithm>
#include <set>

namespace pmod {

bool CandidateSet::contains(const ExtRational& x) const { return std::binary_search(values.begin(), values.end(), x); }

CandidateSet candidate_set(const Presentation& pm, const Presentation& pn) {
  if (pm.params() != pn.params()) throw Error(ErrorKind::DimensionMismatch, "presentations with different n");
  CriticalGrades um = critical_grades(pm);
  CriticalGrades un = critical_grades(pn);
  std::set<Rational> finite{Rational(0)};
  auto half_gaps = [&](const std::vector<Rational>& axis) {
    for (const auto& x : axis) {
      for (const auto& y : axis) finite.insert(Rational(abs(x - y) / 2));
    }
  };
  for (std::size_t i = 0; i < pm.params(); ++i) {
    for (const auto& x : um.axes[i]) {
      for (const auto& y : un.axes[i]) finite.insert(Rational(abs(x - y)));
    }
    half_gaps(um.axes[i]);
    half_gaps(un.axes[i]);
  }
  CandidateSet out;
  for (const auto& q : finite) out.values.emplace_back(q);
  out.values.push_back(ExtRational::infinity());
  return out;
}

DistanceResult interleaving_distance(const Presentation& pm, const Presentation& pn, const SearchOptions& options) {
  if (!(pm.field() == pn.field())) throw Error(ErrorKind::FieldMismatch, "presentations over different fields");
  if (pm.field().is_rational()) throw Error(ErrorKind::UnsupportedField, "d_I needs a prime field");

  DistanceResult result;
  result.candidates = candidate_set(pm, pn);
  const auto& values = result.candidates.values;
  std::size_t lo = 0;
  std::size_t hi = values.size() - 1;  // index of inf: not searched
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    InterleavingProblem prob(pm, pn, Epsilon(values[mid].value()));
    InterleavingResult r = is_interleaved(prob, options);
    ++result.solver_calls;
    if (r.decision == Decision::BudgetExceeded) {
      result.status = DistanceStatus::BudgetExceeded;
      if (lo > 0) result.last_no = values[lo - 1];
      result.first_unknown = values[mid];
      result.first_yes = values[hi];
      return result;
    }
    if (r.decision == Decision::Yes) {
      hi = mid;
      result.witness = std::move(r.witness);
    } else {
      lo = mid + 1;
    }
  }
  result.value = values[lo];
  if (result.value.is_infinite()) result.witness.reset();
  return result;
}

std::optional<bool> is_isomorphic(const Presentation& pm, const Presentation& pn, const SearchOptions& options) {
  InterleavingResult r = is_interleaved(InterleavingProblem(pm, pn, Epsilon(0)), options);
  if (r.decision == Decision::BudgetExceeded) return std::nullopt;
  return r.decision == Decision::Yes;
}

}  // namespace pmod
