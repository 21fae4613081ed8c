#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permulex/errors.hpp"
#include "permulex/order.hpp"
#include "permulex/permutation.hpp"
#include "permulex/scalar.hpp"
#include "permulex/spectral.hpp"
#include "permulex/word.hpp"

namespace permulex {

/// Which interval ends are attained by the canonical sequence.
enum class Orientation {
  ClosedLeft,   ///< [lo, hi)
  ClosedRight,  ///< (lo, hi]
  Interior,     ///< (lo, hi); ends never attained, stored as [lo, hi)
};

std::string to_string(Orientation o);

struct Interval {
  Scalar lo;
  Scalar hi;
  Scalar length() const { return hi - lo; }
};

/// Membership under an orientation. Interior treats a hit on an end as an
/// error (UnresolvableComparison) instead of guessing.
bool contains(const Interval& iv, const Scalar& x, Orientation o);

struct TypeInterval {
  PositionType type;
  /// phi(a)[p]: the letter interval this type interval sits in.
  Letter symbol = 0;
  Interval range;
};

/// I_0..I_{q-1} from partial sums of mu, and the type intervals J in
/// increasing type order, each of length mu_a / theta.
struct IntervalLayout {
  std::vector<Interval> letters;
  std::vector<TypeInterval> types;
  Orientation orientation = Orientation::Interior;

  const TypeInterval& of(const PositionType& t) const;
};

/// Throws NotSeparable unless the table verdict is Separable.
IntervalLayout build_layout(const SpectralData& spectral, const TypeTable& table, const Morphism& phi);

/// x -> slope * (x - x1) + y1, mapping [x1, x2] onto [y1, y2].
struct AffineMap {
  Scalar slope;
  Scalar x1;
  Scalar y1;

  static AffineMap between(const Interval& from, const Interval& to);
  Scalar operator()(const Scalar& x) const { return slope * (x - x1) + y1; }
};

/// The morphism on sequences of numbers: a value in I_a expands to the
/// block psi_{a,1}(x), ..., psi_{a,|phi(a)|}(x).
class IntervalMorphism {
 public:
  IntervalMorphism(IntervalLayout layout, Morphism phi, std::vector<std::vector<AffineMap>> maps, Scalar start,
                   Letter seed);

  const IntervalLayout& layout() const noexcept { return layout_; }
  const Morphism& morphism() const noexcept { return phi_; }
  const AffineMap& map(Letter a, std::size_t p) const { return maps_.at(a).at(p - 1); }
  const Scalar& start() const noexcept { return start_; }
  Letter seed() const noexcept { return seed_; }
  Orientation orientation() const noexcept { return layout_.orientation; }

  /// The letter a with x in I_a.
  Letter letter_of(const Scalar& x) const;
  std::vector<Scalar> expand(const Scalar& x) const;
  /// Expansion of a value already known to lie in I_a.
  std::vector<Scalar> expand(const Scalar& x, Letter a) const;

 private:
  IntervalLayout layout_;
  Morphism phi_;
  std::vector<std::vector<AffineMap>> maps_;
  Scalar start_;
  Letter seed_;
};

/// Assembles psi and its starting point, the fixed point of psi_{seed,1}.
IntervalMorphism build_interval_morphism(const IntervalLayout& layout, const Morphism& phi, Letter seed);

/// First n values of the fixed point of psi, generated by block substitution
/// of the already generated values.
std::vector<Scalar> canonical_prefix(const IntervalMorphism& im, std::size_t n);

struct VerificationReport {
  bool agree = false;
  std::size_t n = 0;
  /// Least (i, j), i < j, ordered differently by the two routes.
  std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;
};

/// Rank pattern of canonical_prefix(n) against the lexicographic order of
/// the first n shifts.
VerificationReport verify_against_shifts(const IntervalMorphism& im, WordStream& stream, std::size_t n,
                                         std::size_t depth = 4096);

struct IntervalFrequency {
  Scalar t1;
  Scalar t2;
  std::size_t count = 0;
  std::size_t total = 0;
  double frequency = 0.0;
  /// |frequency - (t2 - t1)|
  double deviation = 0.0;
};

/// Share of the first n_elements values in each (t1, t2].
std::vector<IntervalFrequency> canonicality_report(std::span<const Scalar> seq, std::size_t n_elements,
                                                   std::span<const std::pair<Scalar, Scalar>> intervals);

/// Everything needed to rebuild the construction at another precision.
struct ConstructionInputs {
  Morphism phi;
  Letter seed;
  SpectralData spectral;
  TypeTable table;
};

IntervalMorphism build_at_precision(const ConstructionInputs& in, mpfr_prec_t precision);

/// Runs the checks in order (primitive, monotone, separable) and collects
/// the inputs. Throws NotPrimitive, NotMonotone, NotSeparable or
/// TypeMissing from the stages.
ConstructionInputs prepare_construction(const Morphism& phi, Letter seed, std::size_t prefix = kDefaultTypePrefix,
                                        std::size_t depth = kDefaultTypeDepth, const SpectralOptions& opts = {});

/// Runs f(im) and, for ball data, retries with doubled precision on
/// UnresolvableComparison up to max_precision.
template <typename F>
auto with_precision_escalation(const ConstructionInputs& in, F&& f, mpfr_prec_t initial = kDefaultPrecision,
                               mpfr_prec_t max_precision = kMaxPrecision) {
  mpfr_prec_t prec = in.spectral.exact ? 0 : std::max(initial, in.spectral.precision);
  for (;;) {
    const IntervalMorphism im = build_at_precision(in, prec);
    try {
      return f(im);
    } catch (const UnresolvableComparison&) {
      if (in.spectral.exact || prec >= max_precision) throw;
      prec *= 2;
    }
  }
}

}  // namespace permulex
