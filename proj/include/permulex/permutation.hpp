#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "permulex/scalar.hpp"
#include "permulex/word.hpp"

namespace permulex {

/// Rank pattern of a finite window: ranks[i] is 1 + the number of elements
/// below element i.
class FinitePermutation {
 public:
  FinitePermutation() = default;
  /// Throws std::invalid_argument unless ranks is a permutation of 1..n.
  explicit FinitePermutation(std::vector<std::size_t> ranks);

  std::size_t size() const noexcept { return ranks_.size(); }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  std::size_t operator[](std::size_t i) const { return ranks_[i]; }

  /// Pattern of the first m elements.
  FinitePermutation prefix(std::size_t m) const;
  /// "(3241)" for small n, comma separated otherwise.
  std::string str() const;

  friend bool operator==(const FinitePermutation&, const FinitePermutation&) = default;
  friend auto operator<=>(const FinitePermutation&, const FinitePermutation&) = default;

 private:
  std::vector<std::size_t> ranks_;
};

/// Ranks of n items under a strict weak order given by less(i, j).
/// Throws DuplicateValue when two items are incomparable both ways.
FinitePermutation permutation_from_order(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less);

/// Throws DuplicateValue or UnresolvableComparison.
FinitePermutation permutation_from_values(std::span<const Scalar> values);

/// Ranks of T^0 u, ..., T^{n-1} u in lexicographic order. Throws
/// ComparisonExhausted when a pair agrees on `depth` letters.
FinitePermutation valid_permutation_prefix(WordStream& stream, std::size_t n, std::size_t depth = 4096);

/// Number of distinct rank patterns among the first `sample` windows of
/// length n. Only a lower bound on the true factor complexity.
struct ComplexityCount {
  std::size_t distinct = 0;
  std::size_t window = 0;
  std::size_t sample = 0;
};

ComplexityCount permutation_complexity(std::span<const Scalar> values, std::size_t n, std::size_t sample);
/// Window source given as an order on positions; positions up to
/// sample + n - 2 are compared.
ComplexityCount permutation_complexity(const std::function<bool(std::size_t, std::size_t)>& less, std::size_t n,
                                       std::size_t sample);

}  // namespace permulex
