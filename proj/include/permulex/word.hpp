#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permulex {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Renders a word as a string of decimal digit characters (letters < 10)
/// or as dot-separated numbers otherwise.
std::string to_string(std::span<const Letter> w);

/// Parses a string of digit characters ("0110") into a word.
Word word_from_string(const std::string& s);

/// A substitution on the alphabet {0, ..., q-1}.
class Morphism {
 public:
  Morphism(std::size_t alphabet_size, std::vector<Word> images, std::string name = {});

  std::size_t alphabet_size() const noexcept { return images_.size(); }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }
  const std::string& name() const noexcept { return name_; }

  /// Total number of position types, i.e. the sum of image lengths.
  std::size_t type_count() const noexcept;
  std::size_t max_image_length() const noexcept;

  Word apply(std::span<const Letter> w) const;

  friend bool operator==(const Morphism& a, const Morphism& b) { return a.images_ == b.images_; }

 private:
  std::vector<Word> images_;
  std::string name_;
};

/// Morphism whose images are phi^k(a). k must be at least 1.
Morphism power(const Morphism& phi, std::size_t k);

/// Lazily grown prefix of the fixed point of a morphism starting with `seed`.
///
/// The cache always equals phi(u[0..blocks)) for the current block count, so
/// growth appends phi(u[blocks]) and each letter is produced once. The block
/// boundaries double as the self-decomposition used for position types.
/// Growth mutates the cache; materialize with ensure() before sharing a
/// stream between reader threads.
class WordStream {
 public:
  /// Throws NonExtensible when phi(seed) does not start with seed or the
  /// fixed point is finite (|phi(seed)| == 1).
  WordStream(Morphism phi, Letter seed);

  const Morphism& morphism() const noexcept { return phi_; }
  Letter seed() const noexcept { return seed_; }

  void ensure(std::size_t n);
  std::size_t materialized() const noexcept { return cache_.size(); }

  /// u[0..n), growing the cache as needed.
  std::span<const Letter> prefix(std::size_t n);
  Letter at(std::size_t i) {
    ensure(i + 1);
    return cache_[i];
  }

  /// Index m of the block phi(u[m]) that contains position n.
  std::size_t block_of(std::size_t n);
  std::size_t block_start(std::size_t m);

 private:
  void grow_one_block();

  Morphism phi_;
  Letter seed_;
  Word cache_;
  std::vector<std::size_t> block_starts_;  // start of phi(u[m]) in cache_
};

/// Outcome of a bounded lexicographic comparison of two shifts.
struct ShiftOrder {
  enum class Kind { Less, Greater, Unresolved };
  Kind kind;
  /// Offset of the first difference, or the agreement length when unresolved.
  std::size_t depth;

  bool resolved() const noexcept { return kind != Kind::Unresolved; }
};

/// Compares T^i u and T^j u over at most max_depth letters. Requires i != j.
ShiftOrder compare_shifts(WordStream& stream, std::size_t i, std::size_t j, std::size_t max_depth);

inline constexpr std::size_t kDefaultDepthCap = std::size_t{1} << 20;

/// Same as compare_shifts but doubles the depth on Unresolved up to `cap`,
/// then throws ComparisonExhausted. Returns true iff T^i u < T^j u.
bool shift_less(WordStream& stream, std::size_t i, std::size_t j, std::size_t initial_depth = 64,
                std::size_t cap = kDefaultDepthCap);

/// Heuristic test for ultimate periodicity: returns the least p <= max_period
/// such that the tail window u[window, 2*window) has period p.
std::optional<std::size_t> detect_periodicity(WordStream& stream, std::size_t window = 1 << 13,
                                              std::size_t max_period = 512);

}  // namespace permulex
