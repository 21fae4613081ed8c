#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "permulex/errors.hpp"
#include "permulex/order.hpp"

using namespace permulex;

namespace {

// Lexicographic extremum of the first `len` letters of phi(w) over every
// word w of length len.
Word brute_force_extremum(const Morphism& phi, Direction dir, std::size_t len) {
  const std::size_t q = phi.alphabet_size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= q;
  std::optional<Word> best;
  Word w(len);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = len; i-- > 0; c /= q) w[i] = static_cast<Letter>(c % q);
    Word img = phi.apply(w);
    img.resize(len);
    if (!best || (dir == Direction::Min ? img < *best : img > *best)) best = img;
  }
  return *best;
}

using S = MonotonicityVerdict::Status;

}  // namespace

TEST_CASE("extremal image words against brute force") {
  CHECK(to_string(extremal_image_word(fx::thue_morse(), Direction::Min, 8).prefix) == "01010101");
  CHECK(to_string(extremal_image_word(fx::thue_morse(), Direction::Max, 8).prefix) == "10101010");
  CHECK(extremal_image_word(fx::thue_morse(), Direction::Min, 8).certificate.has_value());
  for (const Morphism& phi : {fx::thue_morse(), fx::fibonacci(), fx::fibonacci2(), fx::g_morphism(), fx::cubic(),
                              fx::inseparable()}) {
    for (Direction d : {Direction::Min, Direction::Max}) {
      CHECK(extremal_image_word(phi, d, 8).prefix == brute_force_extremum(phi, d, 8));
    }
  }
  const ExtremalWord unary = extremal_image_word(Morphism(1, {{0, 0}}), Direction::Min, 5);
  CHECK(to_string(unary.prefix) == "00000");
}

TEST_CASE("monotonicity verdicts") {
  CHECK(monotonicity_verdict(fx::thue_morse()).status == S::Monotone);
  CHECK(monotonicity_verdict(fx::fibonacci2()).status == S::Monotone);
  CHECK(monotonicity_verdict(fx::inseparable()).status == S::Monotone);

  const MonotonicityVerdict f = monotonicity_verdict(fx::fibonacci());
  REQUIRE(f.status == S::NotMonotone);
  REQUIRE(f.witness.has_value());
  CHECK(to_string(f.witness->smaller) == "0");
  CHECK(to_string(f.witness->larger) == "10");
  CHECK(verify_witness(fx::fibonacci(), *f.witness));

  const MonotonicityVerdict g = monotonicity_verdict(fx::g_morphism());
  REQUIRE(g.status == S::NotMonotone);
  CHECK(verify_witness(fx::g_morphism(), *g.witness));
  CHECK_FALSE(verify_witness(fx::thue_morse(), {word_from_string("0"), word_from_string("1"), false}));
}

TEST_CASE("monotone powers") {
  CHECK(monotone_power(fx::fibonacci(), 5).power == std::optional<std::size_t>(2));
  CHECK(monotone_power(fx::thue_morse(), 5).power == std::optional<std::size_t>(1));
  const MonotonePowerSearch g = monotone_power(fx::g_morphism(), 5);
  CHECK_FALSE(g.power.has_value());
  REQUIRE(g.statuses.size() == 5);
  for (auto s : g.statuses) CHECK(s == S::NotMonotone);
}

TEST_CASE("monotone morphisms preserve the order of shifts") {
  WordStream tm(fx::thue_morse(), 0);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pos(0, 5000);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t i = pos(rng), j = pos(rng);
    if (i == j) continue;
    // phi(T^i u) = T^{start of block i} u for a fixed point.
    CHECK(shift_less(tm, i, j) == shift_less(tm, tm.block_start(i), tm.block_start(j)));
  }
}

TEST_CASE("position types") {
  WordStream tm(fx::thue_morse(), 0);
  CHECK(position_type(tm, 0) == PositionType{0, 1});
  CHECK(position_type(tm, 1) == PositionType{0, 2});
  CHECK(position_type(tm, 2) == PositionType{1, 1});
  WordStream ins(fx::inseparable(), 0);
  CHECK(position_type(ins, 17) == PositionType{1, 3});
  CHECK(position_type(ins, 2) == PositionType{0, 3});
  CHECK(position_type(ins, 5) == PositionType{0, 3});

  // Equal types carry equal letters.
  WordStream fib(fx::fibonacci2(), 0);
  const auto types = position_types(fib, 3000);
  const auto u = fib.prefix(3000);
  for (std::size_t n = 0; n < types.size(); ++n) {
    CHECK(u[n] == fib.morphism().image(types[n].letter)[types[n].index - 1]);
  }
}

TEST_CASE("type orders") {
  WordStream tm(fx::thue_morse(), 0);
  const TypeTable t = type_order(tm);
  REQUIRE(t.verdict == TypeTable::Verdict::Separable);
  CHECK(t.order == std::vector<PositionType>{{1, 2}, {0, 1}, {1, 1}, {0, 2}});
  CHECK(t.prefix_len == kDefaultTypePrefix);
  CHECK(t.depth == kDefaultTypeDepth);

  WordStream f2(fx::fibonacci2(), 0);
  const TypeTable f = type_order(f2);
  REQUIRE(f.verdict == TypeTable::Verdict::Separable);
  CHECK(f.order == std::vector<PositionType>{{0, 3}, {0, 1}, {1, 1}, {0, 2}, {1, 2}});
  CHECK(f.rank({1, 1}) == 2);

  WordStream ins(fx::inseparable(), 0);
  const TypeTable i = type_order(ins);
  CHECK(i.verdict == TypeTable::Verdict::Inseparable);
  REQUIRE(i.witness.has_value());
  CHECK(*i.witness == std::array<std::size_t, 3>{2, 17, 5});
  const auto [x, y, z] = *i.witness;
  CHECK(shift_less(ins, x, y));
  CHECK(shift_less(ins, y, z));
  CHECK(position_type(ins, x) == position_type(ins, z));
  CHECK(position_type(ins, x) != position_type(ins, y));
}

TEST_CASE("separable orders embed the sampled shift order") {
  for (const Morphism& phi : {fx::thue_morse(), fx::fibonacci2(), fx::cubic()}) {
    WordStream s(phi, 0);
    const TypeTable t = type_order(s);
    REQUIRE(t.verdict == TypeTable::Verdict::Separable);
    const auto types = position_types(s, 2000);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pos(0, 1999);
    for (int k = 0; k < 2000; ++k) {
      const std::size_t n = pos(rng), m = pos(rng);
      if (types[n] == types[m]) continue;
      CHECK(shift_less(s, n, m) == (t.rank(types[n]) < t.rank(types[m])));
    }
  }
}

TEST_CASE("missing types") {
  WordStream tm(fx::thue_morse(), 0);
  CHECK_THROWS_AS(type_order(tm, 2), TypeMissing);
}
