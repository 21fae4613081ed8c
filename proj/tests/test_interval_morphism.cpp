#include <doctest.h>

#include "fixtures.hpp"
#include "permulex/errors.hpp"
#include "permulex/interval_morphism.hpp"

using namespace permulex;

namespace {

ConstructionInputs inputs_for(const Morphism& phi) { return prepare_construction(phi, 0); }

IntervalMorphism build(const Morphism& phi) {
  const ConstructionInputs in = inputs_for(phi);
  return build_at_precision(in, kDefaultPrecision);
}

bool same(const Interval& iv, const Scalar& lo, const Scalar& hi) { return equal(iv.lo, lo) && equal(iv.hi, hi); }

}  // namespace

TEST_CASE("Thue-Morse layout and maps") {
  const IntervalMorphism im = build(fx::thue_morse());
  const IntervalLayout& l = im.layout();
  CHECK(same(l.letters[0], fx::q(0), fx::q(1, 2)));
  CHECK(same(l.letters[1], fx::q(1, 2), fx::q(1)));
  CHECK(same(l.of({1, 2}).range, fx::q(0), fx::q(1, 4)));
  CHECK(same(l.of({0, 1}).range, fx::q(1, 4), fx::q(1, 2)));
  CHECK(same(l.of({1, 1}).range, fx::q(1, 2), fx::q(3, 4)));
  CHECK(same(l.of({0, 2}).range, fx::q(3, 4), fx::q(1)));
  CHECK(im.orientation() == Orientation::ClosedRight);
  CHECK(im.start().str() == "1/2");

  const Scalar x = fx::q(3, 10);  // in I_0
  CHECK(equal(im.map(0, 1)(x), x / fx::q(2) + fx::q(1, 4)));
  CHECK(equal(im.map(0, 2)(x), x / fx::q(2) + fx::q(3, 4)));
  const Scalar y = fx::q(7, 10);  // in I_1
  CHECK(equal(im.map(1, 1)(y), y / fx::q(2) + fx::q(1, 4)));
  CHECK(equal(im.map(1, 2)(y), y / fx::q(2) - fx::q(1, 4)));

  CHECK(im.letter_of(fx::q(1, 2)) == 0);
  CHECK(im.letter_of(fx::q(1)) == 1);
  CHECK(im.letter_of(fx::q(3, 5)) == 1);
  CHECK_THROWS(im.letter_of(fx::q(0)));
}

TEST_CASE("Fibonacci square layout") {
  const IntervalMorphism im = build(fx::fibonacci2());
  const IntervalLayout& l = im.layout();
  const Scalar j0 = fx::r5(-2, 1, 1, 1);  // sqrt(5) - 2
  const Scalar j1 = fx::r5(7, 2, -3, 2);  // (7 - 3 sqrt(5)) / 2
  for (std::size_t p = 1; p <= 3; ++p) CHECK(equal(l.of({0, p}).range.length(), j0));
  for (std::size_t p = 1; p <= 2; ++p) CHECK(equal(l.of({1, p}).range.length(), j1));
  CHECK(im.orientation() == Orientation::Interior);
  CHECK(im.start().str() == "(3-sqrt(5))/2");
  // psi_{0,1}: (0, (sqrt 5 - 1)/2) -> (sqrt 5 - 2, 2 (sqrt 5 - 2))
  CHECK(equal(im.map(0, 1)(fx::q(0)), j0));
  CHECK(equal(im.map(0, 1)(fx::r5(-1, 2, 1, 2)), j0 + j0));
}

TEST_CASE("layout preconditions") {
  WordStream ins(fx::inseparable(), 0);
  const TypeTable t = type_order(ins);
  const SpectralData s = perron_data(incidence_matrix(fx::inseparable()));
  CHECK_THROWS_AS(build_layout(s, t, fx::inseparable()), NotSeparable);
  CHECK_THROWS_AS(prepare_construction(fx::inseparable(), 0), NotSeparable);
  CHECK_THROWS_AS(prepare_construction(fx::fibonacci(), 0), NotMonotone);
  CHECK_THROWS_AS(prepare_construction(Morphism(2, {{0}, {1}}), 0), NotPrimitive);
}

TEST_CASE("affine maps") {
  const Interval i{fx::q(1, 3), fx::q(2, 3)};
  const AffineMap id = AffineMap::between(i, i);
  CHECK(equal(id(fx::q(1, 2)), fx::q(1, 2)));
  CHECK(equal(id.slope, fx::q(1)));
  const AffineMap m = AffineMap::between({fx::q(0), fx::q(1)}, {fx::q(1, 4), fx::q(1, 2)});
  CHECK(equal(m(fx::q(1)), fx::q(1, 2)));
  CHECK(equal(m(fx::q(0)), fx::q(1, 4)));
}

TEST_CASE("interval membership") {
  const Interval iv{fx::q(0), fx::q(1, 2)};
  CHECK(contains(iv, fx::q(1, 2), Orientation::ClosedRight));
  CHECK_FALSE(contains(iv, fx::q(0), Orientation::ClosedRight));
  CHECK(contains(iv, fx::q(0), Orientation::ClosedLeft));
  CHECK_FALSE(contains(iv, fx::q(1, 2), Orientation::ClosedLeft));
  CHECK_THROWS_AS(contains(iv, fx::q(0), Orientation::Interior), UnresolvableComparison);
  CHECK(contains(iv, fx::q(1, 4), Orientation::Interior));
}

TEST_CASE("canonical prefixes") {
  const IntervalMorphism tm = build(fx::thue_morse());
  std::vector<std::string> got;
  for (const auto& v : canonical_prefix(tm, 8)) got.push_back(v.str());
  CHECK(got == std::vector<std::string>{"1/2", "1", "3/4", "1/4", "5/8", "1/8", "3/8", "7/8"});
  CHECK(canonical_prefix(tm, 1).front().str() == "1/2");
  const IntervalMorphism f = build(fx::fibonacci2());
  CHECK(canonical_prefix(f, 1).front().str() == "(3-sqrt(5))/2");
  CHECK_THROWS(canonical_prefix(f, 0));
}

TEST_CASE("oracle agreement") {
  for (const Morphism& phi : {fx::thue_morse(), fx::fibonacci2()}) {
    const IntervalMorphism im = build(phi);
    WordStream s(phi, 0);
    CHECK(verify_against_shifts(im, s, 4).agree);
    const VerificationReport r = verify_against_shifts(im, s, 1000);
    CHECK(r.agree);
    CHECK_FALSE(r.first_mismatch.has_value());
  }
}

TEST_CASE("a corrupted type order is caught") {
  ConstructionInputs in = inputs_for(fx::thue_morse());
  std::swap(in.table.order[0], in.table.order[1]);
  const IntervalMorphism bad = build_at_precision(in, kDefaultPrecision);
  WordStream s(fx::thue_morse(), 0);
  const VerificationReport r = verify_against_shifts(bad, s, 16);
  CHECK_FALSE(r.agree);
  REQUIRE(r.first_mismatch.has_value());
  CHECK(r.first_mismatch->first < r.first_mismatch->second);
}

TEST_CASE("structural properties") {
  for (const Morphism& phi : {fx::thue_morse(), fx::fibonacci2()}) {
    const ConstructionInputs in = inputs_for(phi);
    const IntervalMorphism im = build_at_precision(in, kDefaultPrecision);
    const Scalar inv_theta = Scalar(1) / in.spectral.theta;
    for (std::size_t a = 0; a < phi.alphabet_size(); ++a) {
      const Interval& ia = im.layout().letters[a];
      const Scalar x = ia.lo + (ia.hi - ia.lo) / fx::q(3);
      const Scalar y = ia.lo + (ia.hi - ia.lo) / fx::q(2);
      for (std::size_t p = 1; p <= phi.image(static_cast<Letter>(a)).size(); ++p) {
        const AffineMap& m = im.map(static_cast<Letter>(a), p);
        CHECK(equal(m.slope, inv_theta));
        CHECK(equal(m(y) - m(x), (y - x) * inv_theta));
        CHECK(less(m(x), m(y)));
      }
    }

    // Values sit in the interval of their position type, and are distinct.
    const std::size_t n = 4000;
    const auto values = canonical_prefix(im, n);
    WordStream s(phi, 0);
    const auto types = position_types(s, n);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(contains(im.layout().of(types[k]).range, values[k], im.orientation()));
    }
    CHECK_NOTHROW(permutation_from_values(values));

    // Expanding a prefix reproduces a longer prefix.
    std::vector<Scalar> expanded;
    for (std::size_t k = 0; k < 100; ++k) {
      for (auto& v : im.expand(values[k])) expanded.push_back(v);
    }
    for (std::size_t k = 0; k < expanded.size(); ++k) CHECK(equal(expanded[k], values[k]));
  }
}

TEST_CASE("canonicality reports") {
  const IntervalMorphism tm = build(fx::thue_morse());
  const auto values = canonical_prefix(tm, 1024);
  const std::vector<std::pair<Scalar, Scalar>> unit{{fx::q(0), fx::q(1)}};
  const auto r = canonicality_report(values, values.size(), unit);
  CHECK(r[0].count == 1024);
  CHECK(r[0].deviation == 0.0);
  const std::vector<std::pair<Scalar, Scalar>> bad{{fx::q(1, 2), fx::q(1, 4)}};
  CHECK_THROWS(canonicality_report(values, 10, bad));

  // Fibonacci square: frequencies of the five type intervals.
  const IntervalMorphism f = build(fx::fibonacci2());
  const auto fv = canonical_prefix(f, 1 << 16);
  std::vector<std::pair<Scalar, Scalar>> js;
  for (const auto& t : f.layout().types) js.emplace_back(t.range.lo, t.range.hi);
  for (const auto& row : canonicality_report(fv, fv.size(), js)) CHECK(row.deviation < 0.01);
}

TEST_CASE("ball construction for a cubic eigenvalue") {
  const ConstructionInputs in = inputs_for(fx::cubic());
  REQUIRE_FALSE(in.spectral.exact);
  const VerificationReport r = with_precision_escalation(in, [](const IntervalMorphism& im) {
    WordStream s(im.morphism(), im.seed());
    return verify_against_shifts(im, s, 1000);
  });
  CHECK(r.agree);
  const IntervalMorphism im = build_at_precision(in, 512);
  CHECK(im.start().kind() == Scalar::Kind::Ball);
  CHECK(im.orientation() == Orientation::ClosedLeft);
  // Escalation gives up at the cap and rethrows.
  int calls = 0;
  CHECK_THROWS_AS(with_precision_escalation(in,
                                            [&](const IntervalMorphism&) -> int {
                                              ++calls;
                                              throw UnresolvableComparison("forced");
                                            }),
                  UnresolvableComparison);
  CHECK(calls == 5);  // 256, 512, 1024, 2048, 4096
}
