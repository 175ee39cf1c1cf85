#include "pmod/interleave.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <thread>

namespace pmod {

namespace {

// Maps <G_src> -> <G_dst>(e): rows index G_dst, columns index G_src.
struct Route {
  const Presentation& src;
  const Presentation& dst;
  const Epsilon& e;

  std::size_t rows() const { return dst.generators().size(); }
  std::size_t cols() const { return src.generators().size(); }
  const FieldSpec& field() const { return src.field(); }

  bool entry_free(std::size_t i, std::size_t j) const {
    return grade_leq(dst.generators().grade(i), grade_shift(src.generators().grade(j), e));
  }
};

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& s : m.row(r)) v.push_back(s);
  }
  return v;
}

// Annihilator of the span of `relations` at grade u, inside k^dim.
std::vector<Vector> relation_checks(const FieldSpec& field, std::size_t dim,
                                    const std::vector<HomogeneousElement>& relations, const Grade& u) {
  return annihilator(field, dim, vectors_below(relations, u));
}

bool in_relation_span(const FieldSpec& field, std::size_t dim, const std::vector<HomogeneousElement>& relations,
                      const Grade& u, const Vector& v) {
  auto below = vectors_below(relations, u);
  return solve(Matrix::from_columns(field, dim, below), v).has_value();
}

std::vector<Matrix> lift_space(const Route& route) {
  const FieldSpec& field = route.field();
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < route.rows(); ++i) {
    for (std::size_t j = 0; j < route.cols(); ++j) {
      if (route.entry_free(i, j)) free.emplace_back(i, j);
    }
  }
  auto dst_relations = route.dst.relation_elements();
  std::vector<Vector> equations;
  for (const auto& w : route.src.relations()) {
    Grade target = grade_shift(w.element.grade, route.e);
    for (const auto& check : relation_checks(field, route.rows(), dst_relations, target)) {
      Vector row = zero_vector(field, free.size());
      for (std::size_t f = 0; f < free.size(); ++f) {
        auto [i, j] = free[f];
        if (!check[i].is_zero() && !w.element.coeffs[j].is_zero()) row[f] = check[i] * w.element.coeffs[j];
      }
      equations.push_back(std::move(row));
    }
  }
  Matrix system(field, equations.size(), free.size());
  for (std::size_t r = 0; r < equations.size(); ++r) {
    for (std::size_t c = 0; c < free.size(); ++c) system(r, c) = equations[r][c];
  }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(system)) {
    Matrix x(field, route.rows(), route.cols());
    for (std::size_t f = 0; f < free.size(); ++f) x(free[f].first, free[f].second) = v[f];
    basis.push_back(std::move(x));
  }
  return basis;
}

// Lifts whose every column lies in the target relation submodule; they
// induce the zero morphism.
std::vector<Matrix> null_lifts(const Route& route) {
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < route.cols(); ++j) {
    Grade top = grade_shift(route.src.generators().grade(j), route.e);
    for (const auto& r : route.dst.relations()) {
      if (!grade_leq(r.element.grade, top) || r.element.is_zero()) continue;
      Matrix x(route.field(), route.rows(), route.cols());
      for (std::size_t i = 0; i < route.rows(); ++i) x(i, j) = r.element.coeffs[i];
      out.push_back(std::move(x));
    }
  }
  return out;
}

// Representatives of lift_space(route) modulo null_lifts(route).
std::vector<Matrix> morphism_representatives(const Route& route) {
  auto space = lift_space(route);
  std::vector<Vector> base;
  for (const auto& m : null_lifts(route)) base.push_back(flatten(m));
  std::vector<Vector> candidates;
  for (const auto& m : space) candidates.push_back(flatten(m));
  std::vector<Matrix> reps;
  for (std::size_t idx : complement_indices(route.field(), route.rows() * route.cols(), base, candidates)) {
    reps.push_back(space[idx]);
  }
  return reps;
}

// Enumerates X over `forward`, solving for Y over the reverse route.
class LiftSearch {
 public:
  LiftSearch(const Route& forward, const Route& reverse)
      : field_(forward.field()),
        src_size_(forward.cols()),
        dst_size_(forward.rows()),
        x_basis_(morphism_representatives(forward)),
        y_basis_(lift_space(reverse)) {
    auto src_relations = forward.src.relation_elements();
    auto dst_relations = forward.dst.relation_elements();
    Epsilon twice = forward.e + forward.e;
    for (std::size_t i = 0; i < src_size_; ++i) {
      src_checks_.push_back(relation_checks(field_, src_size_, src_relations,
                                            grade_shift(forward.src.generators().grade(i), twice)));
    }
    for (std::size_t j = 0; j < dst_size_; ++j) {
      dst_checks_.push_back(relation_checks(field_, dst_size_, dst_relations,
                                            grade_shift(forward.dst.generators().grade(j), twice)));
    }
  }

  std::size_t dimension() const { return x_basis_.size(); }

  Matrix candidate(std::uint64_t index) const {
    const std::uint64_t p = field_.characteristic();
    Matrix x(field_, dst_size_, src_size_);
    // The first coordinate is the most significant digit.
    for (std::size_t k = x_basis_.size(); k-- > 0;) {
      std::uint64_t digit = index % p;
      index /= p;
      if (digit != 0) x += x_basis_[k].scaled(Scalar::from_int(field_, static_cast<long>(digit)));
    }
    return x;
  }

  // A reverse lift Y completing X to an interleaving, if any exists.
  std::optional<Matrix> complete(const Matrix& x) const {
    std::vector<Vector> rows;
    Vector rhs;
    const std::size_t unknowns = y_basis_.size();
    // (Y X - I) e_i in span of source relations at gr + 2e.
    for (std::size_t i = 0; i < src_size_; ++i) {
      Vector xi = x.column(i);
      for (const auto& check : src_checks_[i]) {
        Vector row = zero_vector(field_, unknowns);
        for (std::size_t k = 0; k < unknowns; ++k) {
          Vector image = y_basis_[k] * xi;
          if (!image.empty()) row[k] = dot(check, image);
        }
        rows.push_back(std::move(row));
        rhs.push_back(check[i]);
      }
    }
    // (X Y - I) e_j in span of target relations at gr + 2e.
    for (std::size_t j = 0; j < dst_size_; ++j) {
      for (const auto& check : dst_checks_[j]) {
        Vector row = zero_vector(field_, unknowns);
        for (std::size_t k = 0; k < unknowns; ++k) {
          Vector image = x * y_basis_[k].column(j);
          if (!image.empty()) row[k] = dot(check, image);
        }
        rows.push_back(std::move(row));
        rhs.push_back(check[j]);
      }
    }
    Matrix system(field_, rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = rows[r][c];
    }
    auto y = solve(system, rhs);
    if (!y) return std::nullopt;
    Matrix out(field_, src_size_, dst_size_);
    for (std::size_t k = 0; k < unknowns; ++k) {
      if (!(*y)[k].is_zero()) out += y_basis_[k].scaled((*y)[k]);
    }
    return out;
  }

 private:
  FieldSpec field_;
  std::size_t src_size_;
  std::size_t dst_size_;
  std::vector<Matrix> x_basis_;
  std::vector<Matrix> y_basis_;
  std::vector<std::vector<Vector>> src_checks_;
  std::vector<std::vector<Vector>> dst_checks_;
};

std::uint64_t saturating_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

struct Hit {
  std::uint64_t index;
  Matrix x;
  Matrix y;
};

std::optional<Hit> run_search(const LiftSearch& search, std::uint64_t total, unsigned threads) {
  threads = std::max(1u, threads);
  if (total < threads) threads = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));
  std::atomic<std::uint64_t> best{total};
  std::vector<std::optional<Hit>> hits(threads);

  auto worker = [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end && t < best.load(); ++t) {
      Matrix x = search.candidate(t);
      if (auto y = search.complete(x)) {
        hits[w] = Hit{t, std::move(x), std::move(*y)};
        std::uint64_t current = best.load();
        while (t < current && !best.compare_exchange_weak(current, t)) {
        }
        return;
      }
    }
  };

  std::uint64_t chunk = total / threads + (total % threads != 0);
  if (threads == 1) {
    worker(0, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      std::uint64_t begin = std::min(total, w * chunk);
      pool.emplace_back(worker, w, begin, std::min(total, begin + chunk));
    }
    for (auto& t : pool) t.join();
  }

  std::optional<Hit> out;
  for (auto& h : hits) {
    if (h && (!out || h->index < out->index)) out = std::move(h);
  }
  return out;
}

}  // namespace

const char* to_string(Unknown u) {
  static constexpr const char* names[] = {"A", "B", "C", "D", "E", "F"};
  return names[static_cast<int>(u)];
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "Yes";
    case Decision::No: return "No";
    case Decision::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

InterleavingProblem::InterleavingProblem(Presentation m, Presentation n, Epsilon e)
    : m_(std::move(m)), n_(std::move(n)), e_(std::move(e)) {
  if (!(m_.field() == n_.field())) throw Error(ErrorKind::FieldMismatch, "presentations over different fields");
  if (m_.params() != n_.params()) throw Error(ErrorKind::DimensionMismatch, "presentations with different n");
}

std::size_t InterleavingProblem::rows(Unknown u) const {
  switch (u) {
    case Unknown::A: return n_.generators().size();
    case Unknown::B: return m_.generators().size();
    case Unknown::C: return n_.relations().size();
    case Unknown::D: return m_.relations().size();
    case Unknown::E: return m_.relations().size();
    case Unknown::F: return n_.relations().size();
  }
  return 0;
}

std::size_t InterleavingProblem::cols(Unknown u) const {
  switch (u) {
    case Unknown::A: return m_.generators().size();
    case Unknown::B: return n_.generators().size();
    case Unknown::C: return m_.relations().size();
    case Unknown::D: return n_.relations().size();
    case Unknown::E: return m_.generators().size();
    case Unknown::F: return n_.generators().size();
  }
  return 0;
}

const Grade& InterleavingProblem::row_grade(Unknown u, std::size_t i) const {
  switch (u) {
    case Unknown::A: return n_.generators().grade(i);
    case Unknown::B: return m_.generators().grade(i);
    case Unknown::C: return n_.relations()[i].element.grade;
    case Unknown::D:
    case Unknown::E: return m_.relations()[i].element.grade;
    case Unknown::F: return n_.relations()[i].element.grade;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown matrix");
}

const Grade& InterleavingProblem::col_grade(Unknown u, std::size_t j) const {
  switch (u) {
    case Unknown::A:
    case Unknown::E: return m_.generators().grade(j);
    case Unknown::B:
    case Unknown::F: return n_.generators().grade(j);
    case Unknown::C: return m_.relations()[j].element.grade;
    case Unknown::D: return n_.relations()[j].element.grade;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown matrix");
}

bool InterleavingProblem::is_free(Unknown u, std::size_t i, std::size_t j) const {
  Epsilon shift = (u == Unknown::E || u == Unknown::F) ? e_ + e_ : e_;
  return grade_leq(row_grade(u, i), grade_shift(col_grade(u, j), shift));
}

InterleavingWitness make_witness(const InterleavingProblem& prob, const Matrix& a, const Matrix& b) {
  return InterleavingWitness{MorphismMatrix(prob.m().generators(), prob.n().generators(), a, prob.epsilon()),
                             MorphismMatrix(prob.n().generators(), prob.m().generators(), b, prob.epsilon())};
}

std::vector<Matrix> constraint_space(const InterleavingProblem& prob, Direction direction) {
  if (direction == Direction::MToN) return lift_space(Route{prob.m(), prob.n(), prob.epsilon()});
  return lift_space(Route{prob.n(), prob.m(), prob.epsilon()});
}

bool in_constraint_space(const InterleavingProblem& prob, Direction direction, const Matrix& x) {
  Route route = direction == Direction::MToN ? Route{prob.m(), prob.n(), prob.epsilon()}
                                             : Route{prob.n(), prob.m(), prob.epsilon()};
  if (x.rows() != route.rows() || x.cols() != route.cols()) return false;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (!x(i, j).is_zero() && !route.entry_free(i, j)) return false;
    }
  }
  auto dst_relations = route.dst.relation_elements();
  for (const auto& w : route.src.relations()) {
    if (!in_relation_span(route.field(), route.rows(), dst_relations, grade_shift(w.element.grade, route.e),
                          x * w.element.coeffs)) {
      return false;
    }
  }
  return true;
}

bool check_closure(const Matrix& a, const Matrix& b, const InterleavingProblem& prob) {
  const FieldSpec& field = prob.field();
  const GradedSet& gm = prob.m().generators();
  const GradedSet& gn = prob.n().generators();
  if (a.rows() != gn.size() || a.cols() != gm.size() || b.rows() != gm.size() || b.cols() != gn.size()) {
    throw Error(ErrorKind::DimensionMismatch, "witness shapes do not match the presentations");
  }
  Epsilon twice = prob.epsilon() + prob.epsilon();
  Matrix ba = b * a - Matrix::identity(field, gm.size());
  auto rm = prob.m().relation_elements();
  for (std::size_t i = 0; i < gm.size(); ++i) {
    if (!in_relation_span(field, gm.size(), rm, grade_shift(gm.grade(i), twice), ba.column(i))) return false;
  }
  Matrix ab = a * b - Matrix::identity(field, gn.size());
  auto rn = prob.n().relation_elements();
  for (std::size_t j = 0; j < gn.size(); ++j) {
    if (!in_relation_span(field, gn.size(), rn, grade_shift(gn.grade(j), twice), ab.column(j))) return false;
  }
  return true;
}

bool check_closure(const InterleavingWitness& w, const InterleavingProblem& prob) {
  return check_closure(w.a.entries(), w.b.entries(), prob);
}

bool verify_witness(const InterleavingWitness& w, const InterleavingProblem& prob) {
  return w.a.domain() == prob.m().generators() && w.a.codomain() == prob.n().generators() &&
         w.b.domain() == prob.n().generators() && w.b.codomain() == prob.m().generators() &&
         w.a.shift() == prob.epsilon() && w.b.shift() == prob.epsilon() &&
         in_constraint_space(prob, Direction::MToN, w.a.entries()) &&
         in_constraint_space(prob, Direction::NToM, w.b.entries()) && check_closure(w, prob);
}

InterleavingResult is_interleaved(const InterleavingProblem& prob, const SearchOptions& options) {
  if (prob.field().is_rational()) {
    throw Error(ErrorKind::UnsupportedField, "interleaving search needs a prime field; over Q only witness checks");
  }
  Route m_to_n{prob.m(), prob.n(), prob.epsilon()};
  Route n_to_m{prob.n(), prob.m(), prob.epsilon()};
  LiftSearch forward(m_to_n, n_to_m);
  LiftSearch backward(n_to_m, m_to_n);
  bool use_backward = backward.dimension() < forward.dimension();
  const LiftSearch& search = use_backward ? backward : forward;

  InterleavingResult result;
  result.search_space = saturating_power(prob.field().characteristic(), search.dimension());
  if (result.search_space > options.budget) {
    result.decision = Decision::BudgetExceeded;
    return result;
  }
  auto hit = run_search(search, result.search_space, options.threads);
  if (!hit) {
    result.decision = Decision::No;
    result.examined = result.search_space;
    return result;
  }
  result.decision = Decision::Yes;
  result.examined = hit->index + 1;
  result.witness = use_backward ? make_witness(prob, hit->y, hit->x) : make_witness(prob, hit->x, hit->y);
  return result;
}

std::string QuadraticSystem::to_text() const {
  std::string out = "field " + field.to_string() + "\nvars " + std::to_string(variables.size()) + "\neqs " +
                    std::to_string(equations.size()) + "\n";
  for (const auto& eq : equations) {
    std::string line;
    for (const auto& term : eq) {
      if (!line.empty()) line += " + ";
      line += term.coefficient.to_string();
      for (std::size_t v : term.variables) line += "*" + variables[v];
    }
    out += line + "\n";
  }
  return out;
}

QuadraticSystem export_quadratic_system(const InterleavingProblem& prob) {
  const FieldSpec& field = prob.field();
  QuadraticSystem sys;
  sys.field = field;

  constexpr Unknown all[] = {Unknown::A, Unknown::B, Unknown::C, Unknown::D, Unknown::E, Unknown::F};
  std::map<Unknown, std::vector<std::vector<std::optional<std::size_t>>>> ids;
  for (Unknown u : all) {
    auto& grid = ids[u];
    grid.assign(prob.rows(u), std::vector<std::optional<std::size_t>>(prob.cols(u)));
    for (std::size_t i = 0; i < prob.rows(u); ++i) {
      for (std::size_t j = 0; j < prob.cols(u); ++j) {
        if (!prob.is_free(u, i, j)) continue;
        grid[i][j] = sys.variables.size();
        sys.variables.push_back(std::string(to_string(u)) + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      }
    }
  }

  const Matrix tm = relation_matrix(prob.m());
  const Matrix tn = relation_matrix(prob.n());

  using Poly = std::map<std::vector<std::size_t>, Scalar>;
  auto add = [&](Poly& poly, const Scalar& c, std::vector<std::size_t> vars) {
    if (c.is_zero()) return;
    std::sort(vars.begin(), vars.end());
    auto [it, inserted] = poly.emplace(std::move(vars), c);
    if (!inserted) it->second += c;
  };
  auto emit = [&](Poly& poly) {
    std::vector<QuadraticTerm> eq;
    for (auto& [vars, c] : poly) {
      if (!c.is_zero()) eq.push_back({c, vars});
    }
    if (!eq.empty()) sys.equations.push_back(std::move(eq));
  };
  const Scalar one = Scalar::one(field);
  const Scalar minus_one = -one;

  // X T = T' Y  with X, Y unknowns and T, T' fixed relation matrices.
  auto linear_block = [&](Unknown x, const Matrix& t, const Matrix& t_prime, Unknown y) {
    for (std::size_t i = 0; i < prob.rows(x); ++i) {
      for (std::size_t j = 0; j < t.cols(); ++j) {
        Poly poly;
        for (std::size_t k = 0; k < prob.cols(x); ++k) {
          if (auto v = ids[x][i][k]) add(poly, t(k, j), {*v});
        }
        for (std::size_t l = 0; l < t_prime.cols(); ++l) {
          if (auto v = ids[y][l][j]) add(poly, -t_prime(i, l), {*v});
        }
        emit(poly);
      }
    }
  };
  // X Y - I = T Z.
  auto quadratic_block = [&](Unknown x, Unknown y, const Matrix& t, Unknown z) {
    for (std::size_t i = 0; i < prob.rows(x); ++i) {
      for (std::size_t j = 0; j < prob.cols(y); ++j) {
        Poly poly;
        for (std::size_t k = 0; k < prob.cols(x); ++k) {
          auto vx = ids[x][i][k];
          auto vy = ids[y][k][j];
          if (vx && vy) add(poly, one, {*vx, *vy});
        }
        if (i == j) add(poly, minus_one, {});
        for (std::size_t l = 0; l < t.cols(); ++l) {
          if (auto v = ids[z][l][j]) add(poly, -t(i, l), {*v});
        }
        emit(poly);
      }
    }
  };

  linear_block(Unknown::A, tm, tn, Unknown::C);
  linear_block(Unknown::B, tn, tm, Unknown::D);
  quadratic_block(Unknown::B, Unknown::A, tm, Unknown::E);
  quadratic_block(Unknown::A, Unknown::B, tn, Unknown::F);
  return sys;
}

}  // namespace pmod
