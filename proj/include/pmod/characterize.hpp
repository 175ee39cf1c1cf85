#pragma once

#include <string>
#include <vector>

#include "pmod/distance.hpp"

namespace pmod {

/// Two graded sets and two relation lists over the combined basis W1 then
/// W2, at unshifted grades. Elements of Y1 may use a W2 generator w only
/// when gr(w) + e <= gr(y); symmetrically for Y2 and W1.
struct CompatiblePair {
  FieldSpec field = FieldSpec::rationals();
  GradedSet w1;
  GradedSet w2;
  std::vector<HomogeneousElement> y1;
  std::vector<HomogeneousElement> y2;
  Epsilon e;

  GradedSet combined_basis() const;
};

struct CompatibleResult {
  CompatiblePair pair;
  /// <W1, W2(-e) | Y1, Y2(-e)>, a presentation of M.
  Presentation induced_m;
  /// <W1(-e), W2 | Y1(-e), Y2>, a presentation of N.
  Presentation induced_n;
};

/// W1 = G_M, W2 = G_N; Y1 = R_M followed by y - B(y) for y in G_N, and
/// Y2 = R_N followed by y - A(y) for y in G_M. A W2 name equal to a W1 name
/// gets primes appended. Throws InvalidWitness unless verify_witness holds.
CompatibleResult compatible_presentations(const Presentation& pm, const Presentation& pn,
                                          const InterleavingWitness& witness, const Epsilon& e);

/// The two presentations a pair induces; throws PatternViolation if the
/// grade invariants fail.
CompatibleResult induced_presentations(const CompatiblePair& pair);

/// Grade invariants of the pair only.
bool grade_invariants_hold(const CompatiblePair& pair);

/// Grade invariants, then both induced presentations isomorphic to the
/// inputs. Budget exhaustion in an isomorphism test counts as failure.
bool verify_compatible(const CompatiblePair& pair, const Presentation& pm, const Presentation& pn,
                       const SearchOptions& options = {});

/// Presentation-style text with `block W1`, `block W2`, `block Y1`, `block Y2`
/// sections.
std::string serialize(const CompatiblePair& pair);

}  // namespace pmod
