#include <doctest.h>

#include "pmod/onedim.hpp"
#include "support/oracles.hpp"
#include "support/random_modules.hpp"

using namespace pmod;

namespace {

const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F5 = FieldSpec::prime_field(5);

Interval iv(long b, long d) { return Interval(Rational(b), ExtRational(d)); }
Interval ray(long b) { return Interval(Rational(b), ExtRational::infinity()); }

}  // namespace

TEST_CASE("barcodes of cyclic modules") {
  auto m = parse_presentation("field F2\nparams 1\ngen a @ 0\nrel r @ 3 = a\n");
  CHECK(barcode(m) == PersistenceDiagram{{iv(0, 3), 1}});
  auto n = parse_presentation("field F2\nparams 1\ngen b @ 1\nrel r @ 3 = b\n");
  CHECK(barcode(n) == PersistenceDiagram{{iv(1, 3), 1}});
  auto f = parse_presentation("field F2\nparams 1\ngen a @ 0\n");
  CHECK(barcode(f) == PersistenceDiagram{{ray(0), 1}});
  CHECK(barcode(Presentation::zero(F2, 1)).empty());
  CHECK_THROWS_AS(barcode(Presentation::zero(F2, 2)), Error);
}

TEST_CASE("elder rule on a merge") {
  // Two classes born at 0 and 1 merging at 2: the younger one dies.
  auto p = parse_presentation("field F5\nparams 1\ngen a @ 0\ngen b @ 1\nrel r @ 2 = a - b\n");
  CHECK(barcode(p) == PersistenceDiagram{{ray(0), 1}, {iv(1, 2), 1}});
}

TEST_CASE("barcode agrees with the rank-function oracle") {
  testing::Rng rng(43);
  testing::ShapeLimits s;
  s.max_gens = 4;
  s.max_rels = 4;
  for (int t = 0; t < 300; ++t) {
    FieldSpec f = t % 3 == 0 ? FieldSpec::rationals() : (t % 3 == 1 ? F2 : F5);
    Presentation p = testing::random_presentation(rng, f, s);
    PersistenceDiagram d = barcode(p);
    CHECK(d == testing::rank_barcode(p));
    for (int k = 0; k < 50; ++k) {
      Rational x = testing::random_rational(rng, -1, 5, 8);
      std::size_t alive = 0;
      for (const auto& [interval, m] : d.entries()) {
        if (interval.birth <= x && ExtRational(x) < interval.death) alive += m;
      }
      CHECK(alive == testing::pointwise_dimension(p, x));
    }
  }
}

TEST_CASE("interval distance") {
  CHECK(interval_bottleneck(iv(0, 3), iv(1, 3)) == ExtRational(1));
  CHECK(interval_bottleneck(ray(0), ray(1)) == ExtRational(1));
  CHECK(interval_bottleneck(iv(0, 3), ray(0)).is_infinite());
}

TEST_CASE("matching feasibility") {
  PersistenceDiagram a{{iv(0, 3), 1}};
  PersistenceDiagram b{{iv(1, 3), 1}};
  PersistenceDiagram empty;
  auto self = matching_feasible(a, a, 0);
  CHECK(self.feasible);
  CHECK(self.witness.covers(a, a));
  CHECK(matching_feasible(a, empty, ExtRational(Rational(3, 2))).feasible);
  CHECK_FALSE(matching_feasible(a, empty, ExtRational(Rational(7, 5))).feasible);
  auto ab = matching_feasible(a, b, 1);
  CHECK(ab.feasible);
  CHECK(ab.witness.covers(a, b));
  CHECK(ab.witness.cost() <= ExtRational(1));
  CHECK_FALSE(matching_feasible(a, b, ExtRational(Rational(3, 4))).feasible);
}

TEST_CASE("bottleneck examples") {
  PersistenceDiagram a{{iv(0, 3), 1}};
  CHECK(diagram_bottleneck(a, PersistenceDiagram{{iv(1, 3), 1}}) == ExtRational(1));
  CHECK(diagram_bottleneck(a, a) == ExtRational(0));
  PersistenceDiagram flat{{Interval(Rational(2), ExtRational(2)), 1}};
  CHECK(diagram_bottleneck(flat, PersistenceDiagram{}) == ExtRational(0));
  CHECK(diagram_bottleneck(PersistenceDiagram{{ray(0), 1}}, PersistenceDiagram{}).is_infinite());
  CHECK(diagram_bottleneck(PersistenceDiagram{{ray(0), 2}}, PersistenceDiagram{{ray(1), 1}, {ray(3), 1}}) ==
        ExtRational(3));
}

TEST_CASE("bottleneck agrees with exhaustive multibijections") {
  testing::Rng rng(47);
  for (int t = 0; t < 300; ++t) {
    auto d1 = testing::random_diagram(rng, 3);
    auto d2 = testing::random_diagram(rng, 3);
    ExtRational d = diagram_bottleneck(d1, d2);
    CHECK(d == testing::brute_bottleneck(d1, d2));
    auto m = matching_feasible(d1, d2, d);
    REQUIRE(m.feasible);
    CHECK(m.witness.covers(d1, d2));
    CHECK(m.witness.cost() <= d);
  }
}

TEST_CASE("bottleneck is a pseudometric and feasibility is monotone") {
  testing::Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    auto a = testing::random_diagram(rng, 3);
    auto b = testing::random_diagram(rng, 3);
    auto c = testing::random_diagram(rng, 3);
    ExtRational ab = diagram_bottleneck(a, b);
    CHECK(ab == diagram_bottleneck(b, a));
    CHECK(ab <= diagram_bottleneck(a, c) + diagram_bottleneck(c, b));
    Rational e = testing::random_rational(rng, 0, 3, 4);
    if (matching_feasible(a, b, ExtRational(e)).feasible) {
      CHECK(matching_feasible(a, b, ExtRational(Rational(e + Rational(1, 4)))).feasible);
    }
  }
}

TEST_CASE("diagram text") {
  PersistenceDiagram d{{iv(0, 3), 1}, {ray(1), 2}};
  CHECK(format_diagram(d) == "interval [0, 3) x 1\ninterval [1, inf) x 2\n");
  CHECK_THROWS_AS(iv(3, 1), Error);
}
