#include "permulex/interval_morphism.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permulex {

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::ClosedLeft: return "[)";
    case Orientation::ClosedRight: return "(]";
    case Orientation::Interior: return "()";
  }
  return "?";
}

bool contains(const Interval& iv, const Scalar& x, Orientation o) {
  const Cmp lo = compare(x, iv.lo);
  const Cmp hi = compare(x, iv.hi);
  if (lo == Cmp::Unknown || hi == Cmp::Unknown) {
    throw UnresolvableComparison("cannot place " + x.str() + " against [" + iv.lo.str() + ", " + iv.hi.str() + "]");
  }
  if (o == Orientation::Interior && (lo == Cmp::Equal || hi == Cmp::Equal)) {
    throw UnresolvableComparison("value " + x.str() + " hits an interval end that should never be attained");
  }
  if (o == Orientation::ClosedRight) return lo == Cmp::Greater && hi != Cmp::Greater;
  return lo != Cmp::Less && hi == Cmp::Less;
}

const TypeInterval& IntervalLayout::of(const PositionType& t) const {
  for (const auto& ti : types)
    if (ti.type == t) return ti;
  throw std::out_of_range("no interval for type " + to_string(t));
}

IntervalLayout build_layout(const SpectralData& spectral, const TypeTable& table, const Morphism& phi) {
  if (table.verdict != TypeTable::Verdict::Separable) {
    throw NotSeparable("type order verdict is " + to_string(table.verdict));
  }
  if (spectral.mu.size() != phi.alphabet_size()) throw std::invalid_argument("spectral data does not match morphism");

  IntervalLayout layout;
  Scalar acc(0);
  for (const auto& m : spectral.mu) {
    Scalar next = acc + m;
    layout.letters.push_back({acc, next});
    acc = std::move(next);
  }

  acc = Scalar(0);
  for (const auto& t : table.order) {
    Scalar next = acc + spectral.mu.at(t.letter) / spectral.theta;
    layout.types.push_back({t, phi.image(t.letter).at(t.index - 1), {acc, next}});
    acc = std::move(next);
  }

  if (spectral.exact) {
    // J-intervals with symbol a must tile I_a; this holds whenever the type
    // order is consistent with the letter order.
    if (!equal(layout.letters.back().hi, Scalar(1)) || !equal(layout.types.back().range.hi, Scalar(1))) {
      throw std::logic_error("interval layout does not end at 1");
    }
    std::size_t i = 0;
    for (std::size_t a = 0; a < layout.letters.size(); ++a) {
      if (i >= layout.types.size() || layout.types[i].symbol != a ||
          !equal(layout.types[i].range.lo, layout.letters[a].lo)) {
        throw std::logic_error("type intervals do not tile letter interval " + std::to_string(a));
      }
      while (i < layout.types.size() && layout.types[i].symbol == a) ++i;
      if (!equal(layout.types[i - 1].range.hi, layout.letters[a].hi)) {
        throw std::logic_error("type intervals do not tile letter interval " + std::to_string(a));
      }
    }
  }
  return layout;
}

AffineMap AffineMap::between(const Interval& from, const Interval& to) {
  return {(to.hi - to.lo) / (from.hi - from.lo), from.lo, to.lo};
}

IntervalMorphism::IntervalMorphism(IntervalLayout layout, Morphism phi, std::vector<std::vector<AffineMap>> maps,
                                   Scalar start, Letter seed)
    : layout_(std::move(layout)), phi_(std::move(phi)), maps_(std::move(maps)), start_(std::move(start)), seed_(seed) {}

Letter IntervalMorphism::letter_of(const Scalar& x) const {
  // Binary search on the letter intervals, then confirm with the orientation.
  std::size_t lo = 0;
  std::size_t hi = layout_.letters.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    const Cmp c = compare(x, layout_.letters[mid].lo);
    if (c == Cmp::Unknown) {
      throw UnresolvableComparison("cannot place " + x.str() + " against " + layout_.letters[mid].lo.str());
    }
    const bool right = layout_.orientation == Orientation::ClosedRight ? c == Cmp::Greater : c != Cmp::Less;
    (right ? lo : hi) = mid;
  }
  if (!contains(layout_.letters[lo], x, layout_.orientation)) {
    throw std::domain_error("value " + x.str() + " lies outside every letter interval");
  }
  return static_cast<Letter>(lo);
}

std::vector<Scalar> IntervalMorphism::expand(const Scalar& x) const { return expand(x, letter_of(x)); }

std::vector<Scalar> IntervalMorphism::expand(const Scalar& x, Letter a) const {
  std::vector<Scalar> out;
  out.reserve(maps_[a].size());
  for (const auto& m : maps_[a]) out.push_back(m(x));
  return out;
}

IntervalMorphism build_interval_morphism(const IntervalLayout& layout, const Morphism& phi, Letter seed) {
  if (phi.image(seed).front() != seed) throw NonExtensible("image of seed does not start with it");

  std::vector<std::vector<AffineMap>> maps(phi.alphabet_size());
  // psi_{a,p} is defined on I_a, the interval of the preimage letter.
  for (std::size_t a = 0; a < phi.alphabet_size(); ++a) {
    const Letter la = static_cast<Letter>(a);
    for (std::size_t p = 1; p <= phi.image(la).size(); ++p) {
      maps[a].push_back(AffineMap::between(layout.letters[a], layout.of({la, p}).range));
    }
  }

  // Fixed point of psi_{seed,1}: x = (y1 - s x1) / (1 - s).
  const AffineMap& m = maps[seed][0];
  Scalar start = (m.y1 - m.slope * m.x1) / (Scalar(1) - m.slope);

  // The start sits on the upper (lower) end of J_{seed,1} exactly when
  // (seed,1) is the greatest (least) type written with letter `seed`.
  std::vector<PositionType> same_symbol;
  for (const auto& ti : layout.types)
    if (ti.symbol == seed) same_symbol.push_back(ti.type);
  const PositionType first{seed, 1};
  Orientation o = Orientation::Interior;
  if (same_symbol.back() == first) o = Orientation::ClosedRight;
  if (same_symbol.front() == first) o = Orientation::ClosedLeft;

  if (start.is_exact()) {
    const TypeInterval& j = layout.of(first);
    Orientation exact_o = Orientation::Interior;
    if (equal(start, j.range.hi)) exact_o = Orientation::ClosedRight;
    if (equal(start, j.range.lo)) exact_o = Orientation::ClosedLeft;
    if (exact_o != o) throw std::logic_error("orientation rule disagrees with the exact fixed point");
  }

  IntervalLayout oriented = layout;
  oriented.orientation = o;
  return IntervalMorphism(std::move(oriented), phi, std::move(maps), std::move(start), seed);
}

std::vector<Scalar> canonical_prefix(const IntervalMorphism& im, std::size_t n) {
  if (n == 0) throw std::invalid_argument("canonical_prefix: n must be >= 1");
  // The letter of value m is u[m], tracked alongside so that ball values
  // never have to be located against interval ends.
  const Morphism& phi = im.morphism();
  std::vector<Scalar> values = im.expand(im.start(), im.seed());
  Word letters = phi.image(im.seed());
  if (values.front().is_exact() && !equal(values.front(), im.start())) {
    throw std::logic_error("start value is not fixed by its first map");
  }
  values.reserve(std::max(n, values.size()));
  for (std::size_t m = 1; values.size() < n; ++m) {
    std::vector<Scalar> block = im.expand(values[m], letters[m]);
    const Word& image = phi.image(letters[m]);
    letters.insert(letters.end(), image.begin(), image.end());
    for (auto& v : block) values.push_back(std::move(v));
  }
  values.resize(n);
  return values;
}

namespace {

std::pair<std::size_t, std::size_t> first_disagreement(const FinitePermutation& a, const FinitePermutation& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((a[i] < a[j]) != (b[i] < b[j])) return {i, j};
  throw std::logic_error("permutations differ but no pair disagrees");
}

}  // namespace

VerificationReport verify_against_shifts(const IntervalMorphism& im, WordStream& stream, std::size_t n,
                                         std::size_t depth) {
  if (!(im.morphism() == stream.morphism()) || im.seed() != stream.seed()) {
    throw std::invalid_argument("verify_against_shifts: morphism or seed differ");
  }
  VerificationReport report;
  report.n = n;
  const FinitePermutation oracle = valid_permutation_prefix(stream, n, depth);
  const std::vector<Scalar> values = canonical_prefix(im, n);

  // Sort once; equal neighbours are a mismatch (the oracle never ties).
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return less(values[a], values[b]); });
  std::vector<std::size_t> ranks(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && !less(values[idx[r - 1]], values[idx[r]])) {
      report.first_mismatch = std::minmax(idx[r - 1], idx[r]);
      return report;
    }
    ranks[idx[r]] = r + 1;
  }
  const FinitePermutation built(std::move(ranks));
  if (built == oracle) {
    report.agree = true;
  } else {
    report.first_mismatch = first_disagreement(built, oracle);
  }
  return report;
}

std::vector<IntervalFrequency> canonicality_report(std::span<const Scalar> seq, std::size_t n_elements,
                                                   std::span<const std::pair<Scalar, Scalar>> intervals) {
  if (n_elements == 0 || n_elements > seq.size()) throw std::invalid_argument("canonicality_report: bad n_elements");
  // Sort once; each (t1, t2] count is then two binary searches.
  std::vector<const Scalar*> sorted(n_elements);
  for (std::size_t i = 0; i < n_elements; ++i) sorted[i] = &seq[i];
  std::sort(sorted.begin(), sorted.end(), [](const Scalar* a, const Scalar* b) { return less(*a, *b); });
  auto at_most = [&](const Scalar& t) {
    return static_cast<std::size_t>(
        std::upper_bound(sorted.begin(), sorted.end(), t, [](const Scalar& x, const Scalar* v) { return less(x, *v); }) -
        sorted.begin());
  };

  std::vector<IntervalFrequency> out;
  for (const auto& [t1, t2] : intervals) {
    if (!less(t1, t2) || less(t1, Scalar(0)) || less(Scalar(1), t2)) {
      throw std::invalid_argument("canonicality_report: need 0 <= t1 < t2 <= 1");
    }
    IntervalFrequency f{t1, t2};
    f.total = n_elements;
    f.count = at_most(t2) - at_most(t1);
    const Scalar freq(mpq_class(static_cast<long>(f.count), static_cast<long>(n_elements)));
    f.frequency = freq.to_double();
    f.deviation = std::abs((freq - (t2 - t1)).to_double());
    out.push_back(std::move(f));
  }
  return out;
}

IntervalMorphism build_at_precision(const ConstructionInputs& in, mpfr_prec_t precision) {
  const SpectralData spectral = in.spectral.exact ? in.spectral : at_precision(in.spectral, precision);
  const IntervalLayout layout = build_layout(spectral, in.table, in.phi);
  return build_interval_morphism(layout, in.phi, in.seed);
}

ConstructionInputs prepare_construction(const Morphism& phi, Letter seed, std::size_t prefix, std::size_t depth,
                                        const SpectralOptions& opts) {
  const IncidenceMatrix a = incidence_matrix(phi);
  SpectralData spectral = perron_data(a, opts);

  const MonotonicityVerdict mono = monotonicity_verdict(phi, depth);
  if (mono.status != MonotonicityVerdict::Status::Monotone) {
    std::string msg = "monotonicity verdict is " + to_string(mono.status);
    if (mono.witness) msg += ": " + to_string(mono.witness->smaller) + " < " + to_string(mono.witness->larger);
    throw NotMonotone(msg);
  }

  WordStream stream(phi, seed);
  TypeTable table = type_order(stream, prefix, depth);
  if (table.verdict != TypeTable::Verdict::Separable) {
    std::ostringstream os;
    os << "type order verdict is " << to_string(table.verdict);
    if (table.witness) os << ", witness " << (*table.witness)[0] << " " << (*table.witness)[1] << " " << (*table.witness)[2];
    throw NotSeparable(os.str());
  }
  return {phi, seed, std::move(spectral), std::move(table)};
}

}  // namespace permulex
