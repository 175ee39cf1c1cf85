#include <doctest.h>

#include "pmod/characterize.hpp"
#include "support/random_modules.hpp"

using namespace pmod;

namespace {

const FieldSpec F5 = FieldSpec::prime_field(5);

Presentation cyclic(const FieldSpec& f, long birth, long death, const char* name, const char* gen) {
  GradedSet g(1, {{gen, {birth}}});
  return Presentation(name, f, 1, g, {{"r", make_element(f, g, {death}, {Scalar::one(f)})}});
}

std::vector<std::string> formatted(const std::vector<HomogeneousElement>& ys, const GradedSet& basis) {
  std::vector<std::string> out;
  for (const auto& y : ys) out.push_back(format_element(y, basis));
  return out;
}

}  // namespace

TEST_CASE("worked example") {
  Presentation m = cyclic(F5, 0, 3, "M", "a");
  Presentation n = cyclic(F5, 1, 3, "N", "b");
  InterleavingProblem prob(m, n, 1);
  auto c = compatible_presentations(m, n, make_witness(prob, Matrix::identity(F5, 1), Matrix::identity(F5, 1)), 1);
  GradedSet basis = c.pair.combined_basis();
  auto canon = [&](std::initializer_list<const char*> xs) {
    std::vector<std::string> out;
    for (const char* x : xs) out.push_back(format_element(parse_monomial_element(x, basis, F5), basis));
    return out;
  };
  CHECK(formatted(c.pair.y1, basis) == canon({"x^3 a", "x b - x^2 a"}));
  CHECK(formatted(c.pair.y2, basis) == canon({"x^2 b", "x a - b"}));
  CHECK(c.induced_m.generators().grade(1) == Grade{2});
  CHECK(c.induced_n.generators().grade(0) == Grade{1});
  CHECK(verify_compatible(c.pair, m, n));
  std::string text = serialize(c.pair);
  CHECK(text.find("block W2\ngen b @ 1\n") != std::string::npos);
  CHECK(text.find("rel @ 1 = x a - b\n") != std::string::npos);
}

TEST_CASE("induced presentations match the displayed quotients") {
  Presentation m = cyclic(F5, 0, 3, "M", "a");
  Presentation n = cyclic(F5, 1, 3, "N", "b");
  InterleavingProblem prob(m, n, 1);
  auto c = compatible_presentations(m, n, make_witness(prob, Matrix::identity(F5, 1), Matrix::identity(F5, 1)), 1);
  // <(a,0),(b,2) | x^3 a, b - x^2 a, x^2 b, x^2 a - b>
  GradedSet gm = c.induced_m.generators();
  std::vector<std::string> want_m{"x^3 a", "-x^2 a + b", "x^2 b", "x^2 a - b"};
  CHECK(formatted(c.induced_m.relation_elements(), gm) == want_m);
  // <(a,1),(b,1) | x^3 a, x^2 b - x^2 a, x^2 b, a - b>
  GradedSet gn = c.induced_n.generators();
  std::vector<std::string> want_n{"x^3 a", "-x^2 a + x^2 b", "x^2 b", "a - b"};
  CHECK(formatted(c.induced_n.relation_elements(), gn) == want_n);
}

TEST_CASE("invalid witnesses and broken pairs") {
  Presentation m = cyclic(F5, 0, 3, "M", "a");
  Presentation n = cyclic(F5, 1, 3, "N", "b");
  InterleavingProblem prob(m, n, 1);
  auto zero = make_witness(prob, Matrix(F5, 1, 1), Matrix::identity(F5, 1));
  try {
    compatible_presentations(m, n, zero, 1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidWitness);
  }
  auto good = compatible_presentations(m, n, make_witness(prob, Matrix::identity(F5, 1), Matrix::identity(F5, 1)), 1);

  CompatiblePair graded = good.pair;
  graded.y1[1].grade = Grade{1};  // x b - x^2 a moved below b + e
  CHECK_FALSE(grade_invariants_hold(graded));
  CHECK_FALSE(verify_compatible(graded, m, n));

  CompatiblePair dropped = good.pair;
  dropped.y1.erase(dropped.y1.begin());  // lose x^3 a
  CHECK(grade_invariants_hold(dropped));
  CHECK_FALSE(verify_compatible(dropped, m, n));
}

TEST_CASE("identity and empty cases") {
  Presentation m = cyclic(F5, 0, 3, "M", "a");
  InterleavingProblem self(m, m, 0);
  auto c = compatible_presentations(m, m, make_witness(self, Matrix::identity(F5, 1), Matrix::identity(F5, 1)), 0);
  CHECK(c.pair.w2[0].name == "a'");
  CHECK(verify_compatible(c.pair, m, m));
  Presentation z = Presentation::zero(F5, 2);
  InterleavingProblem zz(z, z, 0);
  auto e = compatible_presentations(z, z, make_witness(zz, Matrix(F5, 0, 0), Matrix(F5, 0, 0)), 0);
  CHECK(e.pair.w1.empty());
  CHECK(e.pair.y1.empty());
  CHECK(e.pair.y2.empty());
  CHECK(verify_compatible(e.pair, z, z));
}

TEST_CASE("round trip on solver witnesses") {
  testing::Rng rng(83);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 60; ++t) {
    testing::ShapeLimits s;
    s.params = static_cast<std::size_t>(testing::uniform(rng, 1, 2));
    s.max_gens = 2;
    s.max_rels = 2;
    FieldSpec f = t % 2 ? FieldSpec::prime_field(2) : F5;
    Presentation m = testing::random_presentation(rng, f, s, "M");
    Presentation n = testing::random_presentation(rng, f, s, "N");
    Epsilon e(testing::random_rational(rng, 0, 3, 2));
    auto r = is_interleaved(InterleavingProblem(m, n, e));
    if (r.decision != Decision::Yes) continue;
    ++checked;
    auto c = compatible_presentations(m, n, *r.witness, e);
    CHECK(verify_compatible(c.pair, m, n));
    // Bookkeeping: W1 carries the grades of G_M; the mixed part of Y2 sits
    // at gr(y) + e for the generators y of M.
    CHECK(c.pair.w1 == m.generators());
    for (std::size_t j = 0; j < m.generators().size(); ++j) {
      CHECK(c.pair.y2[n.relations().size() + j].grade == grade_shift(m.generators().grade(j), e));
    }
  }
  CHECK(checked >= 30);
}
