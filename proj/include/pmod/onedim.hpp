#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pmod/grading.hpp"
#include "pmod/presentation.hpp"

namespace pmod {

/// Half-open interval [birth, death). birth == death is allowed only for
/// hand-built degenerate diagrams; barcodes never contain such intervals.
struct Interval {
  Rational birth;
  ExtRational death;

  Interval(Rational b, ExtRational d);

  ExtRational length() const;
  /// (death - birth) / 2, infinite for an infinite interval.
  ExtRational half_width() const;
  std::string to_string() const;

  friend bool operator==(const Interval& a, const Interval& b) { return a.birth == b.birth && a.death == b.death; }
  friend bool operator<(const Interval& a, const Interval& b);
};

/// Multiset of intervals: interval -> positive multiplicity.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  PersistenceDiagram(std::initializer_list<std::pair<Interval, std::size_t>> entries);

  void add(const Interval& interval, std::size_t multiplicity = 1);
  const std::map<Interval, std::size_t>& entries() const { return entries_; }
  std::size_t total() const;
  bool empty() const { return entries_.empty(); }
  /// Each interval repeated by its multiplicity, in sorted order.
  std::vector<Interval> expanded() const;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

 private:
  std::map<Interval, std::size_t> entries_;
};

/// A partial matching between two diagrams counted with multiplicity; what
/// is not matched is listed per side.
struct Multibijection {
  std::map<std::pair<Interval, Interval>, std::size_t> matched;
  std::map<Interval, std::size_t> unmatched_first;
  std::map<Interval, std::size_t> unmatched_second;

  /// Row and column sums reproduce the two diagrams.
  bool covers(const PersistenceDiagram& first, const PersistenceDiagram& second) const;
  /// Largest matched interval distance or unmatched half-width (0 if empty).
  ExtRational cost() const;
};

/// Barcode of a one-parameter presentation by column reduction of the
/// relation matrix of its minimization. Throws NotOneParameter if n != 1.
PersistenceDiagram barcode(const Presentation& p);

/// max(|birth1 - birth2|, |death1 - death2|) with inf - inf = 0.
ExtRational interval_bottleneck(const Interval& a, const Interval& b);

struct MatchingResult {
  bool feasible = false;
  Multibijection witness;
};

/// Whether some partial matching has cost <= e: matched pairs within e,
/// every unmatched interval of half-width <= e. Decided by maximum
/// bipartite matching where every interval may also pair with a diagonal
/// copy of itself.
MatchingResult matching_feasible(const PersistenceDiagram& first, const PersistenceDiagram& second,
                                 const ExtRational& e);

/// Least candidate cost (pairwise distances, half-widths, 0, inf) at which
/// matching_feasible holds.
ExtRational diagram_bottleneck(const PersistenceDiagram& first, const PersistenceDiagram& second);

/// One `interval [b, d) x m` line per support interval, sorted by (b, d).
std::string format_diagram(const PersistenceDiagram& d);

}  // namespace pmod
