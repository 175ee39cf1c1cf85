#include <doctest.h>

#include "pmod/distance.hpp"
#include "support/oracles.hpp"
#include "support/random_modules.hpp"

using namespace pmod;

namespace {

const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F5 = FieldSpec::prime_field(5);

Presentation cyclic(const FieldSpec& f, long birth, long death, const char* name) {
  return box_interval(f, {birth}, {{death}}).renamed(name);
}

std::vector<ExtRational> values(std::initializer_list<const char*> xs) {
  std::vector<ExtRational> out;
  for (const char* x : xs) out.push_back(ExtRational::parse(x));
  return out;
}

std::size_t ceil_log2(std::size_t x) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < x) ++k;
  return k;
}

}  // namespace

TEST_CASE("candidate sets") {
  Presentation m = cyclic(F5, 0, 3, "M");
  Presentation n = cyclic(F5, 1, 3, "N");
  CHECK(candidate_set(m, n).values == values({"0", "1", "3/2", "2", "3", "inf"}));
  CHECK(candidate_set(Presentation::zero(F2, 2), Presentation::zero(F2, 2)).values == values({"0", "inf"}));
  auto self = candidate_set(m, m);
  CHECK(self.contains(ExtRational(0)));
  CHECK(self.contains(ExtRational(Rational(3, 2))));
  CHECK_THROWS_AS(candidate_set(m, Presentation::zero(F5, 2)), Error);
}

TEST_CASE("distance examples") {
  Presentation m = cyclic(F5, 0, 3, "M");
  Presentation n = cyclic(F5, 1, 3, "N");
  auto r = interleaving_distance(m, n);
  CHECK(r.status == DistanceStatus::Exact);
  CHECK(r.value == ExtRational(1));
  REQUIRE(r.witness);
  CHECK(verify_witness(*r.witness, InterleavingProblem(m, n, 1)));
  CHECK(interleaving_distance(m, m).value == ExtRational(0));
  CHECK(interleaving_distance(box_interval(F2, {0, 0}, {{2, 0}, {0, 2}}), Presentation::zero(F2, 2)).value ==
        ExtRational(1));
  auto inf = interleaving_distance(parse_presentation("field F2\nparams 1\ngen a @ 0\n"), Presentation::zero(F2, 1));
  CHECK(inf.value.is_infinite());
  CHECK_FALSE(inf.witness);
  CHECK_THROWS_AS(interleaving_distance(cyclic(FieldSpec::rationals(), 0, 1, "Q"), cyclic(FieldSpec::rationals(), 0, 1, "Q")),
                  Error);
}

TEST_CASE("isomorphism") {
  Presentation m = cyclic(F5, 0, 3, "M");
  Presentation n = cyclic(F5, 1, 3, "N");
  CHECK(is_isomorphic(m, n) == std::optional<bool>(false));
  CHECK(is_isomorphic(Presentation::zero(F2, 1), Presentation::zero(F2, 1)) == std::optional<bool>(true));
  testing::Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    testing::ShapeLimits s;
    s.params = 2;
    Presentation p = testing::random_presentation(rng, F2, s);
    CHECK(is_isomorphic(p, minimize(p)) == std::optional<bool>(true));
  }
}

TEST_CASE("budget bracket") {
  Presentation m = parse_presentation("field F5\nparams 1\ngen a @ 0\ngen b @ 0\ngen c @ 0\nrel r @ 4 = a\n");
  SearchOptions tiny;
  tiny.budget = 3;
  auto r = interleaving_distance(m, m, tiny);
  CHECK(r.status == DistanceStatus::BudgetExceeded);
  CHECK(r.solver_calls >= 1);
  CHECK(r.candidates.contains(r.first_unknown));
}

TEST_CASE("one-parameter isometry, membership, closure and call count") {
  testing::Rng rng(73);
  testing::ShapeLimits s;
  for (int t = 0; t < 120; ++t) {
    FieldSpec f = t % 2 ? F2 : F5;
    Presentation m = testing::random_presentation(rng, f, s, "M");
    Presentation n = t % 3 == 0 ? testing::perturb(rng, m, s, "N") : testing::random_presentation(rng, f, s, "N");
    auto r = interleaving_distance(m, n);
    REQUIRE(r.status == DistanceStatus::Exact);
    CHECK(r.value == testing::brute_bottleneck(testing::rank_barcode(m), testing::rank_barcode(n)));
    CHECK(r.candidates.contains(r.value));
    CHECK(r.solver_calls <= ceil_log2(r.candidates.size()) + 1);
    CHECK(interleaving_distance(n, m).value == r.value);
    if (!r.value.is_infinite()) {
      InterleavingProblem prob(m, n, Epsilon(r.value.value()));
      CHECK(is_interleaved(prob).decision == Decision::Yes);
      REQUIRE(r.witness);
      CHECK(verify_witness(*r.witness, prob));
    }
  }
}

TEST_CASE("two-parameter triangle inequality") {
  testing::Rng rng(79);
  testing::ShapeLimits s;
  s.params = 2;
  s.max_gens = 2;
  s.max_rels = 2;
  s.grade_hi = 3;
  s.max_den = 2;
  for (int t = 0; t < 30; ++t) {
    Presentation a = testing::random_presentation(rng, F2, s, "A");
    Presentation b = testing::random_presentation(rng, F2, s, "B");
    Presentation c = testing::random_presentation(rng, F2, s, "C");
    ExtRational ab = interleaving_distance(a, b).value;
    CHECK(ab == interleaving_distance(b, a).value);
    CHECK(ab <= interleaving_distance(a, c).value + interleaving_distance(c, b).value);
  }
}
