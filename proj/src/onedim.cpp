#include "pmod/onedim.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace pmod {

namespace {

ExtRational abs_difference(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() && b.is_infinite()) return ExtRational(0);
  if (a.is_infinite() || b.is_infinite()) return ExtRational::infinity();
  return ExtRational(Rational(abs(a.value() - b.value())));
}

// Kuhn's augmenting-path matching; adjacency is left -> list of right.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left, std::size_t right) : adjacency_(left), match_right_(right) {}

  void add_edge(std::size_t l, std::size_t r) { adjacency_[l].push_back(r); }

  std::size_t solve() {
    std::size_t size = 0;
    for (std::size_t l = 0; l < adjacency_.size(); ++l) {
      std::vector<bool> seen(match_right_.size(), false);
      if (augment(l, seen)) ++size;
    }
    return size;
  }

  std::optional<std::size_t> partner_of_right(std::size_t r) const { return match_right_[r]; }

 private:
  bool augment(std::size_t l, std::vector<bool>& seen) {
    for (std::size_t r : adjacency_[l]) {
      if (seen[r]) continue;
      seen[r] = true;
      if (!match_right_[r] || augment(*match_right_[r], seen)) {
        match_right_[r] = l;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::optional<std::size_t>> match_right_;
};

}  // namespace

Interval::Interval(Rational b, ExtRational d) : birth(std::move(b)), death(std::move(d)) {
  birth.canonicalize();
  if (death < ExtRational(birth)) throw Error(ErrorKind::InvalidArgument, "interval with death before birth");
}

ExtRational Interval::length() const {
  if (death.is_infinite()) return ExtRational::infinity();
  return ExtRational(Rational(death.value() - birth));
}

ExtRational Interval::half_width() const {
  if (death.is_infinite()) return ExtRational::infinity();
  return ExtRational(Rational((death.value() - birth) / 2));
}

std::string Interval::to_string() const { return "[" + pmod::to_string(birth) + ", " + death.to_string() + ")"; }

bool operator<(const Interval& a, const Interval& b) {
  if (a.birth != b.birth) return a.birth < b.birth;
  return a.death < b.death;
}

PersistenceDiagram::PersistenceDiagram(std::initializer_list<std::pair<Interval, std::size_t>> entries) {
  for (const auto& [interval, m] : entries) add(interval, m);
}

void PersistenceDiagram::add(const Interval& interval, std::size_t multiplicity) {
  if (multiplicity > 0) entries_[interval] += multiplicity;
}

std::size_t PersistenceDiagram::total() const {
  std::size_t t = 0;
  for (const auto& [_, m] : entries_) t += m;
  return t;
}

std::vector<Interval> PersistenceDiagram::expanded() const {
  std::vector<Interval> out;
  for (const auto& [interval, m] : entries_) out.insert(out.end(), m, interval);
  return out;
}

bool Multibijection::covers(const PersistenceDiagram& first, const PersistenceDiagram& second) const {
  std::map<Interval, std::size_t> rows = unmatched_first;
  std::map<Interval, std::size_t> cols = unmatched_second;
  for (const auto& [pair, m] : matched) {
    rows[pair.first] += m;
    cols[pair.second] += m;
  }
  std::erase_if(rows, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(cols, [](const auto& kv) { return kv.second == 0; });
  return rows == first.entries() && cols == second.entries();
}

ExtRational Multibijection::cost() const {
  ExtRational worst(0);
  for (const auto& [pair, m] : matched) worst = std::max(worst, interval_bottleneck(pair.first, pair.second));
  for (const auto& [interval, m] : unmatched_first) worst = std::max(worst, interval.half_width());
  for (const auto& [interval, m] : unmatched_second) worst = std::max(worst, interval.half_width());
  return worst;
}

PersistenceDiagram barcode(const Presentation& input) {
  if (input.params() != 1) throw Error(ErrorKind::NotOneParameter, "barcodes need a one-parameter presentation");
  Presentation p = minimize(input);
  const GradedSet& gens = p.generators();

  // Rows in grade order (ties by index); relations are already grade-sorted.
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gens.grade(a)[0] < gens.grade(b)[0]; });

  std::vector<std::optional<Vector>> reduced_by_pivot(gens.size());
  std::vector<bool> killed(gens.size(), false);
  PersistenceDiagram diagram;
  for (const auto& rel : p.relations()) {
    Vector column;
    for (std::size_t idx : order) column.push_back(rel.element.coeffs[idx]);
    while (true) {
      std::size_t pivot = column.size();
      while (pivot > 0 && column[pivot - 1].is_zero()) --pivot;
      if (pivot == 0) break;
      --pivot;
      if (!reduced_by_pivot[pivot]) {
        reduced_by_pivot[pivot] = column;
        killed[pivot] = true;
        const Rational& birth = gens.grade(order[pivot])[0];
        const Rational& death = rel.element.grade[0];
        if (birth != death) diagram.add(Interval(birth, ExtRational(death)));
        break;
      }
      const Vector& other = *reduced_by_pivot[pivot];
      Scalar factor = column[pivot] * other[pivot].inverse();
      for (std::size_t k = 0; k < column.size(); ++k) column[k] -= factor * other[k];
    }
  }
  for (std::size_t row = 0; row < order.size(); ++row) {
    if (!killed[row]) diagram.add(Interval(gens.grade(order[row])[0], ExtRational::infinity()));
  }
  return diagram;
}

ExtRational interval_bottleneck(const Interval& a, const Interval& b) {
  return std::max(abs_difference(ExtRational(a.birth), ExtRational(b.birth)), abs_difference(a.death, b.death));
}

MatchingResult matching_feasible(const PersistenceDiagram& first, const PersistenceDiagram& second,
                                 const ExtRational& e) {
  if (e < ExtRational(0)) throw Error(ErrorKind::InvalidArgument, "negative matching threshold");
  std::vector<Interval> xs = first.expanded();
  std::vector<Interval> ys = second.expanded();
  const std::size_t m = xs.size();
  const std::size_t k = ys.size();

  // Left: xs then a diagonal slot per y. Right: ys then a diagonal slot per x.
  BipartiteMatcher matcher(m + k, k + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (interval_bottleneck(xs[i], ys[j]) <= e) matcher.add_edge(i, j);
    }
    if (xs[i].half_width() <= e) matcher.add_edge(i, k + i);
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (ys[j].half_width() <= e) matcher.add_edge(m + j, j);
    for (std::size_t i = 0; i < m; ++i) matcher.add_edge(m + j, k + i);
  }

  MatchingResult result;
  result.feasible = matcher.solve() == m + k;
  if (!result.feasible) return result;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t l = *matcher.partner_of_right(j);
    if (l < m) {
      ++result.witness.matched[{xs[l], ys[j]}];
    } else {
      ++result.witness.unmatched_second[ys[j]];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (*matcher.partner_of_right(k + i) == i) ++result.witness.unmatched_first[xs[i]];
  }
  return result;
}

ExtRational diagram_bottleneck(const PersistenceDiagram& first, const PersistenceDiagram& second) {
  std::vector<ExtRational> candidates{ExtRational(0), ExtRational::infinity()};
  for (const auto& [x, _] : first.entries()) {
    candidates.push_back(x.half_width());
    for (const auto& [y, __] : second.entries()) candidates.push_back(interval_bottleneck(x, y));
  }
  for (const auto& [y, _] : second.entries()) candidates.push_back(y.half_width());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  auto it = std::partition_point(candidates.begin(), candidates.end(), [&](const ExtRational& e) {
    return !matching_feasible(first, second, e).feasible;
  });
  return it == candidates.end() ? ExtRational::infinity() : *it;
}

std::string format_diagram(const PersistenceDiagram& d) {
  std::string out;
  for (const auto& [interval, m] : d.entries()) {
    out += "interval " + interval.to_string() + " x " + std::to_string(m) + "\n";
  }
  return out;
}

}  // namespace pmod
