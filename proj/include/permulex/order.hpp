#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "permulex/word.hpp"

namespace permulex {

/// Position type (a, p): the letter sits at 1-based index p of phi(a) in
/// the fixed point's decomposition into images of its own letters.
struct PositionType {
  Letter letter = 0;
  std::size_t index = 1;

  friend auto operator<=>(const PositionType&, const PositionType&) = default;
};

std::string to_string(const PositionType& t);

/// Dense numbering of the types of a morphism: (0,1), (0,2), ..., (q-1, |phi(q-1)|).
class TypeIndex {
 public:
  explicit TypeIndex(const Morphism& phi);
  std::size_t size() const noexcept { return types_.size(); }
  std::size_t id(const PositionType& t) const { return offsets_.at(t.letter) + t.index - 1; }
  const PositionType& type(std::size_t id) const { return types_.at(id); }
  const std::vector<PositionType>& types() const noexcept { return types_; }
  /// The letter written at this type, phi(a)[p].
  Letter symbol(std::size_t id) const { return symbols_.at(id); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<PositionType> types_;
  std::vector<Letter> symbols_;
};

enum class Direction { Min, Max };

/// The greedy state sequence repeats: letters from `preperiod` on have period `period`.
struct PeriodCertificate {
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

struct ExtremalWord {
  Word prefix;
  std::optional<PeriodCertificate> certificate;
};

/// Prefix (length <= depth) of the lexicographic minimum or maximum of
/// { phi(w) : w infinite }, optionally restricted to w starting with
/// `first`. Built greedily over sets of pending image positions, which are
/// finitely many, so a repeated set certifies eventual periodicity.
ExtremalWord extremal_image_word(const Morphism& phi, Direction dir, std::size_t depth,
                                 std::optional<Letter> first = std::nullopt);

/// Finite words u < v whose images are out of order.
struct MonotonicityWitness {
  Word smaller;
  Word larger;
  /// The extremal images coincide instead of crossing; phi(smaller) and
  /// phi(larger) then agree on every compared letter.
  bool images_equal = false;
};

struct MonotonicityVerdict {
  enum class Status { Monotone, NotMonotone, UnknownAtDepth };
  Status status = Status::UnknownAtDepth;
  std::optional<MonotonicityWitness> witness;
  std::size_t depth = 0;
};

std::string to_string(MonotonicityVerdict::Status s);

/// Monotone iff max phi(a w) < min phi(b w') for every pair of letters a < b.
MonotonicityVerdict monotonicity_verdict(const Morphism& phi, std::size_t depth = 1 << 12);

/// Re-checks a NotMonotone witness by direct comparison of finite words.
bool verify_witness(const Morphism& phi, const MonotonicityWitness& w);

struct MonotonePowerSearch {
  std::optional<std::size_t> power;
  /// statuses[k-1] is the verdict for phi^k.
  std::vector<MonotonicityVerdict::Status> statuses;
};

MonotonePowerSearch monotone_power(const Morphism& phi, std::size_t max_k, std::size_t depth = 1 << 12);

PositionType position_type(WordStream& stream, std::size_t n);
std::vector<PositionType> position_types(WordStream& stream, std::size_t n);

/// Evidence-bounded separability verdict and the induced order on types.
struct TypeTable {
  enum class Verdict { Separable, Inseparable, UnknownAtDepth };

  std::vector<PositionType> types;
  /// Ascending in the order of shifts; filled when Separable.
  std::vector<PositionType> order;
  Verdict verdict = Verdict::UnknownAtDepth;
  /// Shift indices (x, y, z) with T^x u < T^y u < T^z u and tau(x) == tau(z) != tau(y).
  std::optional<std::array<std::size_t, 3>> witness;
  std::size_t prefix_len = 0;
  std::size_t depth = 0;

  /// 0-based position of t in `order`.
  std::size_t rank(const PositionType& t) const;
};

std::string to_string(TypeTable::Verdict v);

inline constexpr std::size_t kDefaultTypePrefix = std::size_t{1} << 14;
inline constexpr std::size_t kDefaultTypeDepth = std::size_t{1} << 12;
/// Occurrences sampled per type; pairs per type pair is its square (64).
inline constexpr std::size_t kOccurrencesPerType = 8;

/// Throws TypeMissing when a type does not occur in u[0..prefix_len).
TypeTable type_order(WordStream& stream, std::size_t prefix_len = kDefaultTypePrefix,
                     std::size_t depth = kDefaultTypeDepth);

}  // namespace permulex
