#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pmod/interleave.hpp"

namespace pmod {

/// Sorted, duplicate-free candidate values for d_I; always holds 0 and inf.
struct CandidateSet {
  std::vector<ExtRational> values;

  bool contains(const ExtRational& x) const;
  std::size_t size() const { return values.size(); }
};

/// Per axis i, with U^i the i-th coordinates of the critical grades of a
/// minimal presentation: all |x - y| across M and N, plus half-gaps inside
/// each module. Throws DimensionMismatch when n differs.
CandidateSet candidate_set(const Presentation& pm, const Presentation& pn);

enum class DistanceStatus { Exact, BudgetExceeded };

struct DistanceResult {
  DistanceStatus status = DistanceStatus::Exact;
  /// d_I when status is Exact.
  ExtRational value;
  /// An interleaving at `value` (absent when value is inf).
  std::optional<InterleavingWitness> witness;

  /// On BudgetExceeded: the largest candidate known to fail (if any), the
  /// candidate whose search blew the budget, and the smallest known success
  /// (inf if none). d_I lies in (last_no, first_yes].
  std::optional<ExtRational> last_no;
  ExtRational first_unknown;
  ExtRational first_yes = ExtRational::infinity();

  std::size_t solver_calls = 0;
  CandidateSet candidates;
};

/// Binary search over the finite candidates for the least e at which the two
/// presentations are e-interleaved; inf if the largest finite one fails.
/// Throws UnsupportedField over Q, FieldMismatch, DimensionMismatch.
DistanceResult interleaving_distance(const Presentation& pm, const Presentation& pn, const SearchOptions& options = {});

/// 0-interleaving. Returns nullopt when the search exceeds the budget.
std::optional<bool> is_isomorphic(const Presentation& pm, const Presentation& pn, const SearchOptions& options = {});

}  // namespace pmod
