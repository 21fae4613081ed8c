#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "permulex/scalar.hpp"
#include "permulex/word.hpp"

namespace permulex {

/// Sliding-window occurrence ratios of one factor over a prefix. A window
/// u[i..i+n) counts the occurrences starting inside it; the ratio is
/// count / n.
struct FrequencyEnvelope {
  Word factor;
  std::size_t window = 0;
  std::size_t prefix = 0;
  std::size_t min_count = 0;
  std::size_t max_count = 0;
  double min_freq = 0.0;
  double max_freq = 0.0;

  double width() const noexcept { return max_freq - min_freq; }
  /// Exact rational containment min_count/n <= x <= max_count/n.
  bool contains(const mpq_class& x) const;
};

/// Requires 1 <= window and window + |factor| - 1 <= prefix.
FrequencyEnvelope factor_frequency_envelope(std::span<const Letter> text, const Word& factor, std::size_t window);
FrequencyEnvelope factor_frequency_envelope(WordStream& stream, const Word& factor, std::size_t window,
                                            std::size_t prefix);

struct ErgodicVerdict {
  enum class Status { LikelyErgodic, Suspect, ZeroFrequency };
  Status status = Status::LikelyErgodic;
  /// Shortest, then least, offending factor with its envelope.
  std::optional<FrequencyEnvelope> witness;
  std::size_t max_factor_len = 0;
  std::size_t window = 0;
  std::size_t prefix = 0;
  double tol = 0.0;
};

std::string to_string(ErgodicVerdict::Status s);

/// Suspect when some factor of length <= max_factor_len has an envelope
/// wider than tol; otherwise ZeroFrequency when some occurring factor is
/// missing from a window; otherwise LikelyErgodic. Evidence only.
ErgodicVerdict ergodic_word_verdict(std::span<const Letter> text, std::size_t max_factor_len, std::size_t window,
                                    double tol);
ErgodicVerdict ergodic_word_verdict(WordStream& stream, std::size_t max_factor_len, std::size_t window,
                                    std::size_t prefix, double tol);

/// Empirical frequencies over the N - n + 1 length-n windows of u[0..N):
/// lower sums the factors strictly below u[k..k+n), upper adds u[k..k+n)
/// itself. The estimate of the canonical value a[k] is upper.
struct ValueBracket {
  Scalar lower;
  Scalar upper;
};

ValueBracket canonical_value_bracket(WordStream& stream, std::size_t k, std::size_t n, std::size_t prefix);
Scalar canonical_value_estimate(WordStream& stream, std::size_t k, std::size_t n, std::size_t prefix);

struct MaxMinScan {
  std::optional<std::size_t> max_candidate;
  std::optional<std::size_t> min_candidate;
  /// The candidate found in the first half of the prefix survived the second.
  bool max_stable = false;
  bool min_stable = false;
};

/// Largest shift starting with w and least shift starting with v among
/// T^0 u .. T^{prefix-1} u. An empty w or v skips that side. Throws
/// FactorAbsent when a non-empty factor does not start any scanned shift,
/// and ComparisonExhausted when two candidates agree on `depth` letters.
MaxMinScan maxmin_scan(WordStream& stream, const Word& w, const Word& v, std::size_t prefix,
                       std::size_t depth = 4096);

}  // namespace permulex
