#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "permulex/errors.hpp"

using namespace permulex;

TEST_CASE("fixed point prefixes") {
  WordStream tm(fx::thue_morse(), 0);
  CHECK(to_string(tm.prefix(8)) == "01101001");
  WordStream fib(fx::fibonacci(), 0);
  CHECK(to_string(fib.prefix(8)) == "01001010");
  CHECK(to_string(tm.prefix(16)) == "0110100110010110");
}

TEST_CASE("non-extensible seeds") {
  CHECK_THROWS_AS(WordStream(Morphism(1, {{0}}), 0), NonExtensible);
  CHECK_THROWS_AS(WordStream(Morphism(2, {{1, 0}, {1, 0}}), 0), NonExtensible);
}

TEST_CASE("morphism validation") {
  CHECK_THROWS(Morphism(2, {{0, 1}}));
  CHECK_THROWS(Morphism(2, {{0, 2}, {1}}));
  CHECK_THROWS(Morphism(2, {{0, 1}, {}}));
  CHECK(fx::thue_morse().type_count() == 4);
  CHECK(fx::fibonacci2().max_image_length() == 3);
}

TEST_CASE("powers") {
  const Morphism f2 = power(fx::fibonacci(), 2);
  CHECK(to_string(f2.image(0)) == "010");
  CHECK(to_string(f2.image(1)) == "01");
  CHECK(power(fx::thue_morse(), 1) == fx::thue_morse());
  const Morphism t2 = power(fx::thue_morse(), 2);
  CHECK(to_string(t2.image(0)) == "0110");
  CHECK(to_string(t2.image(1)) == "1001");
  CHECK_THROWS(power(fx::thue_morse(), 0));
}

TEST_CASE("prefix stability and self-similarity") {
  for (const Morphism& phi : {fx::thue_morse(), fx::fibonacci(), fx::g_morphism(), fx::cubic()}) {
    WordStream small(phi, 0);
    const Word a(small.prefix(100).begin(), small.prefix(100).end());
    WordStream big(phi, 0);
    big.ensure(5000);
    const auto b = big.prefix(5000);
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
    CHECK(to_string(b.first(2000)) == fx::fixed_point_string(phi, 0, 2000));
    const Word image = phi.apply(a);
    CHECK(std::equal(image.begin(), image.end(), big.prefix(image.size()).begin()));
  }
}

TEST_CASE("block decomposition") {
  WordStream tm(fx::thue_morse(), 0);
  CHECK(tm.block_of(0) == 0);
  CHECK(tm.block_of(1) == 0);
  CHECK(tm.block_of(2) == 1);
  CHECK(tm.block_start(3) == 6);
}

TEST_CASE("compare_shifts") {
  WordStream tm(fx::thue_morse(), 0);
  const ShiftOrder r = compare_shifts(tm, 0, 1, 4);
  CHECK(r.kind == ShiftOrder::Kind::Less);
  CHECK(r.depth == 0);
  CHECK_THROWS_AS(compare_shifts(tm, 3, 3, 4), std::invalid_argument);

  WordStream ins(fx::inseparable(), 0);
  CHECK(compare_shifts(ins, 2, 5, 16).kind == ShiftOrder::Kind::Less);
  CHECK(compare_shifts(ins, 2, 17, 64).kind == ShiftOrder::Kind::Less);
  CHECK(compare_shifts(ins, 17, 5, 64).kind == ShiftOrder::Kind::Less);

  // Unresolved carries the agreement length.
  const ShiftOrder u = compare_shifts(tm, 0, 12, 3);
  CHECK(u.kind == ShiftOrder::Kind::Unresolved);
  CHECK(u.depth == 3);
}

TEST_CASE("compare_shifts antisymmetry and transitivity") {
  WordStream fib(fx::fibonacci(), 0);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pos(0, 3000);
  for (int t = 0; t < 300; ++t) {
    const std::size_t i = pos(rng), j = pos(rng), k = pos(rng);
    if (i == j || j == k || i == k) continue;
    const ShiftOrder ij = compare_shifts(fib, i, j, 4096);
    const ShiftOrder ji = compare_shifts(fib, j, i, 4096);
    REQUIRE(ij.resolved());
    CHECK(ij.depth == ji.depth);
    CHECK((ij.kind == ShiftOrder::Kind::Less) == (ji.kind == ShiftOrder::Kind::Greater));
    if (ij.kind == ShiftOrder::Kind::Less && shift_less(fib, j, k)) CHECK(shift_less(fib, i, k));
  }
}

TEST_CASE("shift_less escalation") {
  WordStream tm(fx::thue_morse(), 0);
  // T^0 u and T^12 u agree on 8 letters, so depth 1 must escalate.
  CHECK(shift_less(tm, 12, 0, 1));
  CHECK_FALSE(shift_less(tm, 0, 12, 1));
  WordStream periodic(Morphism(2, {{0, 1}, {0, 1}}), 0);
  CHECK_THROWS_AS(shift_less(periodic, 0, 2, 4, 256), ComparisonExhausted);
}

TEST_CASE("periodicity guard") {
  WordStream periodic(Morphism(2, {{0, 1}, {0, 1}}), 0);
  CHECK(detect_periodicity(periodic) == std::optional<std::size_t>(2));
  WordStream tm(fx::thue_morse(), 0);
  CHECK_FALSE(detect_periodicity(tm).has_value());
  WordStream fib(fx::fibonacci(), 0);
  CHECK_FALSE(detect_periodicity(fib).has_value());
}
