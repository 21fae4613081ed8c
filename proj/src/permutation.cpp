#include "permulex/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permulex/errors.hpp"

namespace permulex {

FinitePermutation::FinitePermutation(std::vector<std::size_t> ranks) : ranks_(std::move(ranks)) {
  std::vector<bool> seen(ranks_.size() + 1, false);
  for (std::size_t r : ranks_) {
    if (r == 0 || r > ranks_.size() || seen[r]) throw std::invalid_argument("ranks must be a permutation of 1..n");
    seen[r] = true;
  }
}

FinitePermutation FinitePermutation::prefix(std::size_t m) const {
  if (m > ranks_.size()) throw std::out_of_range("FinitePermutation::prefix");
  return permutation_from_order(m, [this](std::size_t i, std::size_t j) { return ranks_[i] < ranks_[j]; });
}

std::string FinitePermutation::str() const {
  std::ostringstream os;
  const bool compact = ranks_.size() < 10;
  os << "(";
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (!compact && i) os << ",";
    os << ranks_[i];
  }
  os << ")";
  return os.str();
}

FinitePermutation permutation_from_order(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return less(a, b); });
  std::vector<std::size_t> ranks(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && !less(idx[r - 1], idx[r])) {
      std::ostringstream os;
      os << "elements " << idx[r - 1] << " and " << idx[r] << " are equal";
      throw DuplicateValue(os.str());
    }
    ranks[idx[r]] = r + 1;
  }
  return FinitePermutation(std::move(ranks));
}

FinitePermutation permutation_from_values(std::span<const Scalar> values) {
  return permutation_from_order(values.size(), [&](std::size_t i, std::size_t j) { return less(values[i], values[j]); });
}

FinitePermutation valid_permutation_prefix(WordStream& stream, std::size_t n, std::size_t depth) {
  stream.ensure(n + depth);
  return permutation_from_order(n, [&](std::size_t i, std::size_t j) {
    if (i == j) return false;
    const ShiftOrder r = compare_shifts(stream, i, j, depth);
    if (!r.resolved()) {
      std::ostringstream os;
      os << "shifts " << i << " and " << j << " agree on " << depth << " letters";
      throw ComparisonExhausted(os.str());
    }
    return r.kind == ShiftOrder::Kind::Less;
  });
}

ComplexityCount permutation_complexity(const std::function<bool(std::size_t, std::size_t)>& less, std::size_t n,
                                       std::size_t sample) {
  if (n == 0) throw std::invalid_argument("permutation_complexity: window length must be >= 1");
  std::set<std::vector<std::size_t>> patterns;
  for (std::size_t start = 0; start < sample; ++start) {
    const FinitePermutation p =
        permutation_from_order(n, [&](std::size_t i, std::size_t j) { return less(start + i, start + j); });
    patterns.insert(p.ranks());
  }
  return {patterns.size(), n, sample};
}

ComplexityCount permutation_complexity(std::span<const Scalar> values, std::size_t n, std::size_t sample) {
  if (sample + n - 1 > values.size()) throw std::invalid_argument("permutation_complexity: not enough values");
  return permutation_complexity([&](std::size_t i, std::size_t j) { return less(values[i], values[j]); }, n, sample);
}

}  // namespace permulex
