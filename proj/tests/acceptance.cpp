// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "permulex/errors.hpp"
#include "permulex/ergodicity.hpp"
#include "permulex/interval_morphism.hpp"
#include "permulex/io.hpp"
#include "permulex/permutation.hpp"
#include "permulex/sturmian.hpp"

using namespace permulex;

namespace {

const std::string kSpecs = PERMULEX_SPEC_DIR;

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }
Scalar r5(long an, long ad, long bn, long bd) { return Scalar(Quadratic(mpq_class(an, ad), mpq_class(bn, bd), 5)); }

Analysis analyze_spec(const std::string& name) { return analyze(parse_spec(kSpecs + "/" + name + ".json")); }

/// Collects failed checks with a short note each.
struct Checks {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Checks&)> body;
};

bool same(const Interval& iv, const Scalar& lo, const Scalar& hi) { return equal(iv.lo, lo) && equal(iv.hi, hi); }

void thue_morse_golden(Checks& c) {
  const Analysis a = analyze_spec("thue-morse");
  c(a.ok(), "analysis succeeds");
  if (!a.ok()) return;
  const auto values = with_precision_escalation(*a.inputs, [](const IntervalMorphism& im) {
    return canonical_prefix(im, 8);
  });
  const auto rows = sequence_rows(values);
  const std::vector<std::pair<long, long>> golden{{1, 2}, {1, 1}, {3, 4}, {1, 4}, {5, 8}, {1, 8}, {3, 8}, {7, 8}};
  c(rows.size() == 8, "eight rows");
  for (std::size_t i = 0; i < golden.size() && i < rows.size(); ++i) {
    const Scalar expected = q(golden[i].first, golden[i].second);
    c(equal(values[i], expected), "value " + std::to_string(i) + " is " + expected.str());
    c(equal(parse_scalar(rows[i].value), expected), "row " + std::to_string(i) + " reads back");
  }
}

void thue_morse_layout(Checks& c) {
  const Analysis a = analyze_spec("thue-morse");
  if (!a.ok()) return c(false, "analysis succeeds");
  const ConstructionInputs& in = *a.inputs;
  const IntervalLayout l = build_layout(in.spectral, in.table, in.phi);
  c(same(l.letters[0], q(0), q(1, 2)), "I_0 = [0,1/2]");
  c(same(l.of({1, 2}).range, q(0), q(1, 4)), "J_{1,2} = [0,1/4]");
  c(same(l.of({0, 1}).range, q(1, 4), q(1, 2)), "J_{0,1} = [1/4,1/2]");
  c(same(l.of({1, 1}).range, q(1, 2), q(3, 4)), "J_{1,1} = [1/2,3/4]");
  c(same(l.of({0, 2}).range, q(3, 4), q(1)), "J_{0,2} = [3/4,1]");
  const IntervalMorphism im = build_interval_morphism(l, in.phi, in.seed);
  c(im.orientation() == Orientation::ClosedRight, "orientation (]");
  c(equal(im.start(), q(1, 2)), "start 1/2");
}

void fibonacci_square(Checks& c) {
  const Analysis a = analyze_spec("fibonacci-squared");
  if (!a.ok()) return c(false, "analysis succeeds");
  const SpectralData& s = *a.spectral;
  c(s.exact, "exact arithmetic");
  c(equal(s.theta, r5(3, 2, 1, 2)), "theta = (3+sqrt5)/2");
  c(equal(s.mu[0], r5(-1, 2, 1, 2)), "mu_0 = (sqrt5-1)/2");
  const IntervalMorphism& im = *a.construction;
  for (std::size_t p = 1; p <= 3; ++p) c(equal(im.layout().of({0, p}).range.length(), r5(-2, 1, 1, 1)), "|J_{0,p}|");
  for (std::size_t p = 1; p <= 2; ++p) c(equal(im.layout().of({1, p}).range.length(), r5(7, 2, -3, 2)), "|J_{1,p}|");
  c(equal(im.start(), r5(3, 2, -1, 2)), "start (3-sqrt5)/2");
  c(a.table->order == std::vector<PositionType>{{0, 3}, {0, 1}, {1, 1}, {0, 2}, {1, 2}}, "type order");
}

void oracle_equivalence(Checks& c) {
  for (const char* name : {"thue-morse", "fibonacci-squared"}) {
    const Analysis a = analyze_spec(name);
    if (!a.ok()) return c(false, std::string(name) + " analysis");
    const auto values = canonical_prefix(*a.construction, 1000);
    WordStream stream(a.phi, a.spec.seed);
    const FinitePermutation oracle = valid_permutation_prefix(stream, 1000, 4096);
    c(permutation_from_values(values) == oracle, std::string(name) + " ranks equal the shift order");
  }
}

void canonicality(Checks& c) {
  const Analysis a = analyze_spec("thue-morse");
  if (!a.ok()) return c(false, "analysis succeeds");
  const auto values = canonical_prefix(*a.construction, 1 << 16);
  std::vector<std::pair<Scalar, Scalar>> intervals;
  for (long k = 0; k <= 6; ++k) {
    const long den = 1L << k;
    for (long d = 0; d < den; ++d) intervals.emplace_back(q(d, den), q(d + 1, den));
  }
  double worst = 0;
  for (const auto& row : canonicality_report(values, values.size(), intervals)) worst = std::max(worst, row.deviation);
  std::ostringstream os;
  os << "worst dyadic deviation " << worst << " <= 0.01";
  c(worst <= 0.01, os.str());
}

void verdicts(Checks& c) {
  const Morphism tm(2, {{0, 1}, {1, 0}});
  const Morphism fib(2, {{0, 1}, {0}});
  const Morphism g(3, {{0, 2}, {0, 1}, {2, 1}});
  const Morphism ins(2, {{0, 0, 1}, {0, 1, 1}});
  using S = MonotonicityVerdict::Status;
  c(monotonicity_verdict(tm).status == S::Monotone, "Thue-Morse monotone");
  const MonotonicityVerdict f = monotonicity_verdict(fib);
  c(f.status == S::NotMonotone && f.witness && verify_witness(fib, *f.witness), "Fibonacci witness re-verifies");
  c(monotone_power(fib, 5).power == std::optional<std::size_t>(2), "Fibonacci monotone power 2");
  const MonotonePowerSearch gs = monotone_power(g, 5);
  bool all_not = gs.statuses.size() == 5;
  for (auto s : gs.statuses) all_not = all_not && s == S::NotMonotone;
  c(!gs.power && all_not, "g not monotone for k <= 5");
  WordStream stream(ins, 0);
  const TypeTable t = type_order(stream);
  c(t.verdict == TypeTable::Verdict::Inseparable, "001/011 inseparable");
  c(t.witness == std::optional<std::array<std::size_t, 3>>({2, 17, 5}), "witness (2,17,5)");
  c(shift_less(stream, 2, 17) && shift_less(stream, 17, 5), "T^2 u < T^17 u < T^5 u");
}

void frequencies(Checks& c) {
  WordStream tm(Morphism(2, {{0, 1}, {1, 0}}), 0);
  const FrequencyEnvelope e = factor_frequency_envelope(tm, word_from_string("00"), 1 << 12, 1 << 16);
  c(e.contains(mpq_class(1, 6)), "envelope of 00 contains 1/6");
  c(e.width() < 0.02, "envelope of 00 narrower than 0.02");
  for (const char* letter : {"0", "1"}) {
    c(factor_frequency_envelope(tm, word_from_string(letter), 1 << 12, 1 << 16).contains(mpq_class(1, 2)),
      std::string("envelope of ") + letter + " contains 1/2");
  }
}

void sturmian(Checks& c) {
  const Scalar golden = r5(3, 2, -1, 2);
  const SturmianParams p = make_sturmian_params(golden, golden);
  const auto beta = rotation_sequence(p, 1000);
  WordStream fib2(Morphism(2, {{0, 1, 0}, {0, 1}}), 0);
  c(permutation_from_values(beta) == valid_permutation_prefix(fib2, 1000), "rotation ranks equal the shift order");
  const auto more = rotation_sequence(p, 202);
  bool doubling = true;
  for (std::size_t n = 0; n <= 100; ++n) {
    const auto [l, r] = doubling_step(more[n], p);
    doubling = doubling && equal(l, more[2 * n]) && equal(r, more[2 * n + 1]);
  }
  c(doubling, "doubling sends beta_n to (beta_2n, beta_2n+1) for n <= 100");
}

void complexity(Checks& c) {
  const SturmianParams p = make_sturmian_params(r5(-1, 2, 1, 2), q(1, 3));
  const auto beta = rotation_sequence(p, 10000 + 8);
  for (std::size_t n = 3; n <= 8; ++n) {
    const std::size_t got = permutation_complexity(beta, n, 10000).distinct;
    c(got == n, "complexity(" + std::to_string(n) + ") = " + std::to_string(got));
  }
}

void properties(Checks& c) {
  for (const char* name : {"thue-morse", "fibonacci-squared"}) {
    const Analysis a = analyze_spec(name);
    if (!a.ok()) return c(false, std::string(name) + " analysis");
    const IntervalMorphism& im = *a.construction;
    const Morphism& phi = a.phi;
    const Scalar inv_theta = Scalar(1) / a.spectral->theta;
    for (std::size_t x = 0; x < phi.alphabet_size(); ++x) {
      const Letter l = static_cast<Letter>(x);
      for (std::size_t p = 1; p <= phi.image(l).size(); ++p) c(equal(im.map(l, p).slope, inv_theta), "slope 1/theta");
    }
    // J-intervals with symbol a tile I_a.
    const auto& layout = im.layout();
    for (std::size_t x = 0; x < layout.letters.size(); ++x) {
      Scalar covered(0);
      std::optional<Scalar> lo;
      for (const auto& t : layout.types) {
        if (t.symbol != x) continue;
        if (!lo) lo = t.range.lo;
        covered += t.range.length();
      }
      c(lo && equal(*lo, layout.letters[x].lo) && equal(covered, layout.letters[x].length()), "J tile I");
    }
    const std::size_t n = 10000;
    const auto values = canonical_prefix(im, n);
    WordStream stream(phi, a.spec.seed);
    const auto types = position_types(stream, n);
    bool inside = true;
    for (std::size_t k = 0; k < n; ++k) inside = inside && contains(layout.of(types[k]).range, values[k], im.orientation());
    c(inside, std::string(name) + ": value n lies in J_tau(n) for n < 10^4");

    // Prefix stability of word generation.
    WordStream fresh(phi, a.spec.seed);
    const auto short_prefix = fresh.prefix(777);
    const Word s(short_prefix.begin(), short_prefix.end());
    const auto long_prefix = stream.prefix(n);
    c(std::equal(s.begin(), s.end(), long_prefix.begin()), "prefix stability");
  }

  // Rank patterns ignore increasing distortions.
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  bool sound = true;
  for (int t = 0; t < 100; ++t) {
    std::set<long> seen;
    std::vector<Scalar> v, w;
    while (v.size() < 30) {
      const long k = num(rng);
      if (!seen.insert(k).second) continue;
      const Scalar x = q(k, 1009);
      v.push_back(x);
      w.push_back(x * x * x + x * q(3) - q(11, 7));
    }
    sound = sound && permutation_from_values(v) == permutation_from_values(w);
  }
  c(sound, "equivalence under increasing distortions");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Thue-Morse golden values", 1, thue_morse_golden},
      {2, "Thue-Morse layout", 1, thue_morse_layout},
      {3, "Fibonacci square spectral data and layout", 1, fibonacci_square},
      {4, "oracle equivalence at n = 1000", 10, oracle_equivalence},
      {5, "canonicality statistics", 30, canonicality},
      {6, "verdict fixtures", 5, verdicts},
      {7, "frequency criterion", 10, frequencies},
      {8, "Sturmian cross-check", 5, sturmian},
      {9, "Sturmian permutation complexity", 30, complexity},
      {10, "property suites", 60, properties},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.budget_seconds) {
      std::ostringstream os;
      os << "runtime " << secs << " s over budget " << cr.budget_seconds << " s";
      checks.failures.push_back(os.str());
    }
    const bool ok = checks.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << std::fixed;
    std::cout.precision(3);
    std::cout << secs << " s)\n";
    for (const auto& f : checks.failures) std::cout << "    " << f << "\n";
  }
  return failed ? 1 : 0;
}
