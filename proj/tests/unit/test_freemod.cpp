#include <doctest.h>

#include "pmod/freemod.hpp"
#include "pmod/presentation.hpp"
#include "support/random_modules.hpp"

using namespace pmod;

namespace {

const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F5 = FieldSpec::prime_field(5);

Vector vec(const FieldSpec& f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar::from_int(f, x));
  return v;
}

// Exhaustive span test over F_2 with the same grade restriction.
bool brute_span(const HomogeneousElement& v, const std::vector<HomogeneousElement>& ws) {
  std::vector<Vector> below;
  for (const auto& w : ws) {
    if (grade_leq(w.grade, v.grade)) below.push_back(w.coeffs);
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << below.size()); ++mask) {
    Vector sum = zero_vector(F2, v.coeffs.size());
    for (std::size_t k = 0; k < below.size(); ++k) {
      if ((mask >> k) & 1) {
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += below[k][i];
      }
    }
    if (sum == v.coeffs) return true;
  }
  return false;
}

HomogeneousElement random_element(testing::Rng& rng, const FieldSpec& f, const GradedSet& basis,
                                  const testing::ShapeLimits& s) {
  Grade u = testing::random_grade(rng, s);
  Vector c = zero_vector(f, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (grade_leq(basis.grade(i), u)) c[i] = Scalar::from_int(f, testing::uniform(rng, 0, 4));
  }
  return make_element(f, basis, u, c);
}

Matrix random_pattern_matrix(testing::Rng& rng, const FieldSpec& f, const GradedSet& dom, const GradedSet& cod,
                             const Epsilon& e) {
  Matrix m(f, cod.size(), dom.size());
  for (std::size_t i = 0; i < cod.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (MorphismMatrix::entry_allowed(dom, cod, e, i, j)) m(i, j) = Scalar::from_int(f, testing::uniform(rng, 0, 4));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("make_element") {
  GradedSet b1(2, {{"a", {0, 0}}});
  CHECK_NOTHROW(make_element(F5, b1, {2, 1}, vec(F5, {1})));
  GradedSet b2(2, {{"a", {0, 0}}, {"b", {1, 1}}});
  try {
    make_element(F5, b2, {1, 0}, vec(F5, {1, 1}));
    FAIL("expected PatternViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PatternViolation);
  }
  // x a - b over {a@0, b@1} at grade 1.
  GradedSet ab(1, {{"a", {0}}, {"b", {1}}});
  auto v = make_element(F5, ab, {1}, vec(F5, {1, -1}));
  CHECK(format_element(v, ab) == "x a - b");
  CHECK_THROWS_AS(make_element(F5, ab, {1}, vec(F5, {1})), Error);
  CHECK_THROWS_AS(GradedSet(1, {{"a", {0}}, {"a", {1}}}), Error);
}

TEST_CASE("apply and compose on the worked example") {
  GradedSet a(1, {{"a", {0}}});
  GradedSet b(1, {{"b", {1}}});
  Matrix one = Matrix::identity(F5, 1);
  MorphismMatrix f(a, b, one, 1);
  MorphismMatrix g(b, a, one, 1);
  auto image = apply(f, make_element(F5, a, {0}, vec(F5, {1})));
  CHECK(image.grade == Grade{1});
  CHECK(image.coeffs == vec(F5, {1}));
  auto gf = compose(g, f);
  CHECK(gf.shift() == Epsilon(2));
  CHECK(gf.entries() == one);
  CHECK(compose(MorphismMatrix::identity(F5, b), f).entries() == f.entries());
  CHECK(compose(MorphismMatrix::zero(F5, b, a, 1), f).entries().is_zero());
  auto v = make_element(F5, a, {2}, vec(F5, {3}));
  CHECK(apply(MorphismMatrix::identity(F5, a), v) == v);
  CHECK(apply(MorphismMatrix::zero(F5, a, b, 1), v).is_zero());
  CHECK_THROWS_AS(MorphismMatrix(a, b, one, 0), Error);
  CHECK_THROWS_AS(compose(f, f), Error);
  CHECK_THROWS_AS(apply(f, HomogeneousElement{F5, Grade{1}, vec(F5, {1, 1})}), Error);
}

TEST_CASE("span membership examples") {
  GradedSet a1(1, {{"a", {0}}});
  auto v0 = make_element(F2, a1, {2}, vec(F2, {0}));
  auto r = span_membership(v0, {});
  CHECK(r.member);
  auto v = make_element(F2, a1, {2}, vec(F2, {1}));
  auto w = make_element(F2, a1, {3}, vec(F2, {1}));
  CHECK_FALSE(span_membership(v, {w}).member);

  GradedSet a2(2, {{"a", {0, 0}}});
  auto target = make_element(F2, a2, {2, 2}, vec(F2, {1}));
  auto r1 = make_element(F2, a2, {2, 0}, vec(F2, {1}));
  auto r2 = make_element(F2, a2, {0, 2}, vec(F2, {1}));
  auto res = span_membership(target, {r1, r2});
  CHECK(res.member);
  REQUIRE(res.coefficients.size() == 2);
  CHECK((res.coefficients[0] + res.coefficients[1]).is_one());
  CHECK_FALSE(span_membership(make_element(F2, a2, {1, 1}, vec(F2, {1})), {r1, r2}).member);
}

TEST_CASE("span membership agrees with exhaustive search over F_2") {
  testing::Rng rng(17);
  testing::ShapeLimits s;
  s.params = 2;
  s.grade_hi = 2;
  s.max_den = 1;
  for (int t = 0; t < 400; ++t) {
    std::vector<Generator> gens;
    std::size_t ng = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    for (std::size_t i = 0; i < ng; ++i) gens.push_back({"g" + std::to_string(i), testing::random_grade(rng, s)});
    GradedSet basis(2, gens);
    std::vector<HomogeneousElement> ws;
    std::size_t nw = static_cast<std::size_t>(testing::uniform(rng, 0, 4));
    for (std::size_t k = 0; k < nw; ++k) ws.push_back(random_element(rng, F2, basis, s));
    auto v = random_element(rng, F2, basis, s);
    auto res = span_membership(v, ws);
    CHECK(res.member == brute_span(v, ws));
    if (res.member) {
      Vector sum = zero_vector(F2, basis.size());
      for (std::size_t k = 0; k < ws.size(); ++k) {
        if (res.coefficients[k].is_zero()) continue;
        CHECK(grade_leq(ws[k].grade, v.grade));
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += res.coefficients[k] * ws[k].coeffs[i];
      }
      CHECK(sum == v.coeffs);
    }
  }
}

TEST_CASE("apply is compatible with compose and sums") {
  testing::Rng rng(23);
  testing::ShapeLimits s;
  s.params = 2;
  s.grade_hi = 2;
  s.max_den = 2;
  for (int t = 0; t < 200; ++t) {
    auto make_basis = [&](const char* prefix) {
      std::vector<Generator> gens;
      std::size_t k = static_cast<std::size_t>(testing::uniform(rng, 0, 3));
      for (std::size_t i = 0; i < k; ++i) gens.push_back({prefix + std::to_string(i), testing::random_grade(rng, s)});
      return GradedSet(2, gens);
    };
    GradedSet b0 = make_basis("a");
    GradedSet b1 = make_basis("b");
    GradedSet b2 = make_basis("c");
    Epsilon e1(testing::random_rational(rng, 0, 1, 2));
    Epsilon e2(testing::random_rational(rng, 0, 1, 2));
    MorphismMatrix f(b0, b1, random_pattern_matrix(rng, F5, b0, b1, e1), e1);
    MorphismMatrix f2(b0, b1, random_pattern_matrix(rng, F5, b0, b1, e1), e1);
    MorphismMatrix g(b1, b2, random_pattern_matrix(rng, F5, b1, b2, e2), e2);
    auto v = random_element(rng, F5, b0, s);
    CHECK(apply(compose(g, f), v) == apply(g, apply(f, v)));
    auto sum = apply(f + f2, v);
    auto parts = apply(f, v);
    auto other = apply(f2, v);
    for (std::size_t i = 0; i < parts.coeffs.size(); ++i) parts.coeffs[i] += other.coeffs[i];
    CHECK(sum == parts);
  }
}
