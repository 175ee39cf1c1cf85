#include <doctest.h>

#include "pmod/linalg.hpp"
#include "support/random_modules.hpp"

using namespace pmod;

namespace {

const FieldSpec F5 = FieldSpec::prime_field(5);
const FieldSpec Q = FieldSpec::rationals();

Matrix random_matrix(testing::Rng& rng, const FieldSpec& f, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      // Sparse-ish so that ranks vary.
      if (testing::uniform(rng, 0, 2) != 0) m(i, j) = Scalar::from_int(f, testing::uniform(rng, -3, 3));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("identity and products") {
  Matrix i3 = Matrix::identity(F5, 3);
  Matrix m = Matrix::from_columns(F5, 3, std::vector<Vector>{{Scalar::from_int(F5, 1), Scalar::from_int(F5, 2), Scalar::from_int(F5, 3)}});
  CHECK(i3 * m == m);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 1);
  CHECK(Matrix(F5, 0, 4).rows() == 0);
  CHECK((Matrix(F5, 2, 0) * Matrix(F5, 0, 3)).is_zero());
  CHECK(rank(i3) == 3);
}

TEST_CASE("rank-nullity and solve on random matrices") {
  testing::Rng rng(3);
  for (const FieldSpec& f : {F5, Q, FieldSpec::prime_field(2)}) {
    for (int t = 0; t < 100; ++t) {
      std::size_t r = static_cast<std::size_t>(testing::uniform(rng, 0, 5));
      std::size_t c = static_cast<std::size_t>(testing::uniform(rng, 0, 5));
      Matrix m = random_matrix(rng, f, r, c);
      auto ns = nullspace(m);
      CHECK(rank(m) + ns.size() == c);
      for (const auto& v : ns) CHECK(is_zero(m * v));
      Vector x = zero_vector(f, c);
      for (auto& s : x) s = Scalar::from_int(f, testing::uniform(rng, -2, 2));
      Vector rhs = m * x;
      auto sol = solve(m, rhs);
      REQUIRE(sol.has_value());
      CHECK(m * *sol == rhs);
      auto ann = annihilator(f, r, [&] {
        std::vector<Vector> cols;
        for (std::size_t j = 0; j < c; ++j) cols.push_back(m.column(j));
        return cols;
      }());
      CHECK(ann.size() == r - rank(m));
      for (const auto& a : ann) {
        for (std::size_t j = 0; j < c; ++j) CHECK(dot(a, m.column(j)).is_zero());
      }
    }
  }
}

TEST_CASE("inconsistent system") {
  Matrix m(F5, 2, 1);
  m(0, 0) = Scalar::one(F5);
  m(1, 0) = Scalar::one(F5);
  CHECK_FALSE(solve(m, Vector{Scalar::one(F5), Scalar::zero(F5)}).has_value());
}

TEST_CASE("complement selection") {
  std::vector<Vector> base{{Scalar::one(F5), Scalar::zero(F5)}};
  std::vector<Vector> cands{{Scalar::from_int(F5, 2), Scalar::zero(F5)}, {Scalar::one(F5), Scalar::one(F5)},
                            {Scalar::zero(F5), Scalar::one(F5)}};
  CHECK(complement_indices(F5, 2, base, cands) == std::vector<std::size_t>{1});
}
