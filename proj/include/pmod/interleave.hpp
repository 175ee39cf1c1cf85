#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmod/freemod.hpp"
#include "pmod/presentation.hpp"

namespace pmod {

enum class Direction { MToN, NToM };

/// The six unknown matrices of the quadratic system. A, B are the lifts;
/// C, D witness that relations map into relations; E, F witness that the
/// round trips agree with the 2e transition modulo relations.
enum class Unknown { A, B, C, D, E, F };
const char* to_string(Unknown u);

/// Two presentations over one field and one parameter count, plus e.
class InterleavingProblem {
 public:
  /// Throws FieldMismatch or DimensionMismatch.
  InterleavingProblem(Presentation m, Presentation n, Epsilon e);

  const Presentation& m() const { return m_; }
  const Presentation& n() const { return n_; }
  const Epsilon& epsilon() const { return e_; }
  const FieldSpec& field() const { return m_.field(); }

  std::size_t rows(Unknown u) const;
  std::size_t cols(Unknown u) const;
  /// Entry (i, j) of u is a genuine unknown, i.e. the grade of the row object
  /// is <= the grade of the column object plus e (2e for E and F). Every
  /// other entry is forced to zero.
  bool is_free(Unknown u, std::size_t i, std::size_t j) const;

  /// The same problem with M and N exchanged.
  InterleavingProblem swapped() const { return InterleavingProblem(n_, m_, e_); }

 private:
  const Grade& row_grade(Unknown u, std::size_t i) const;
  const Grade& col_grade(Unknown u, std::size_t j) const;

  Presentation m_;
  Presentation n_;
  Epsilon e_;
};

/// Lifts A: <G_M> -> <G_N>(e) and B: <G_N> -> <G_M>(e) of an interleaving.
struct InterleavingWitness {
  MorphismMatrix a;
  MorphismMatrix b;
};

/// Wraps raw matrices as morphisms over the problem's bases; throws
/// PatternViolation if an entry breaks the grade pattern.
InterleavingWitness make_witness(const InterleavingProblem& prob, const Matrix& a, const Matrix& b);

/// Basis of the matrices X (A for MToN, B for NToM) respecting the zero
/// pattern that send every source relation w into the span of the target
/// relations at grade gr(w) + e.
std::vector<Matrix> constraint_space(const InterleavingProblem& prob, Direction direction);

/// Whether the matrix lies in the constraint space of `direction`.
bool in_constraint_space(const InterleavingProblem& prob, Direction direction, const Matrix& x);

/// Round-trip conditions: for every generator i of M, column i of BA - I
/// lies in the span of the relations of M at grade gr(G_M,i) + 2e, and
/// symmetrically for AB - I over N.
bool check_closure(const Matrix& a, const Matrix& b, const InterleavingProblem& prob);
bool check_closure(const InterleavingWitness& w, const InterleavingProblem& prob);

/// Closure plus constraint-space membership of both lifts.
bool verify_witness(const InterleavingWitness& w, const InterleavingProblem& prob);

enum class Decision { Yes, No, BudgetExceeded };
const char* to_string(Decision d);

struct SearchOptions {
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

struct InterleavingResult {
  Decision decision = Decision::No;
  std::optional<InterleavingWitness> witness;
  /// Number of enumerated lifts, |k|^d with d the enumerated dimension
  /// (saturates at UINT64_MAX).
  std::uint64_t search_space = 0;
  /// Candidates tested up to and including the witness (all of them on No).
  std::uint64_t examined = 0;
};

/// Decides e-interleaving over a prime field.
///
/// Lifts that differ by a map into the target relation submodule induce the
/// same module morphism, so one lift direction is enumerated modulo that
/// subspace (a dimension-d quotient, d = dim Hom(M, N(e)) or the reverse,
/// whichever is smaller). For each candidate the round-trip conditions are
/// affine in the other lift, which is then solved for by elimination.
/// Enumeration is lexicographic in the quotient coordinates, so the witness
/// does not depend on the thread count.
///
/// Throws UnsupportedField over Q. Returns BudgetExceeded, never No, when
/// p^d exceeds options.budget.
InterleavingResult is_interleaved(const InterleavingProblem& prob, const SearchOptions& options = {});

/// One scalar equation `sum of terms = 0`; each term is a coefficient times
/// a product of zero, one or two variables.
struct QuadraticTerm {
  Scalar coefficient;
  std::vector<std::size_t> variables;
};

struct QuadraticSystem {
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::string> variables;
  std::vector<std::vector<QuadraticTerm>> equations;

  /// Header lines `field`, `vars`, `eqs`, then one polynomial per line.
  std::string to_text() const;
};

/// The system A T_M = T_N C, B T_N = T_M D, BA - I = T_M E, AB - I = T_N F
/// in the free entries of A..F (named `A_i_j`, 1-based). Identically zero
/// equations are omitted.
QuadraticSystem export_quadratic_system(const InterleavingProblem& prob);

}  // namespace pmod
