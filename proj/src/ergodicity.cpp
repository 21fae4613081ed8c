#include "permulex/ergodicity.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "permulex/errors.hpp"

namespace permulex {

namespace {

constexpr std::uint64_t kBase = 1000003;

// Start positions of `factor` in `text`, found by rolling hash and confirmed
// letter by letter.
std::vector<std::uint8_t> occurrences(std::span<const Letter> text, std::span<const Letter> factor) {
  const std::size_t m = factor.size();
  std::vector<std::uint8_t> hit(text.size(), 0);
  if (m == 0 || m > text.size()) return hit;

  std::uint64_t target = 0;
  std::uint64_t h = 0;
  std::uint64_t top = 1;
  for (std::size_t i = 0; i < m; ++i) {
    target = target * kBase + factor[i] + 1;
    h = h * kBase + text[i] + 1;
    if (i) top *= kBase;
  }
  for (std::size_t i = 0;; ++i) {
    if (h == target && std::equal(factor.begin(), factor.end(), text.begin() + i)) hit[i] = 1;
    if (i + m >= text.size()) break;
    h = (h - (text[i] + 1) * top) * kBase + text[i + m] + 1;
  }
  return hit;
}

FrequencyEnvelope envelope_from_hits(const std::vector<std::uint8_t>& hit, const Word& factor, std::size_t n,
                                     std::size_t text_len) {
  const std::size_t m = factor.size();
  if (m == 0) throw std::invalid_argument("factor must be non-empty");
  if (n == 0 || n + m - 1 > text_len) throw std::invalid_argument("window too long for the prefix");

  FrequencyEnvelope env;
  env.factor = factor;
  env.window = n;
  env.prefix = text_len;
  std::size_t count = 0;
  for (std::size_t j = 0; j < n; ++j) count += hit[j];
  env.min_count = env.max_count = count;
  const std::size_t last = text_len - n - m + 1;
  for (std::size_t i = 1; i <= last; ++i) {
    count = count - hit[i - 1] + hit[i + n - 1];
    env.min_count = std::min(env.min_count, count);
    env.max_count = std::max(env.max_count, count);
  }
  env.min_freq = static_cast<double>(env.min_count) / static_cast<double>(n);
  env.max_freq = static_cast<double>(env.max_count) / static_cast<double>(n);
  return env;
}

}  // namespace

bool FrequencyEnvelope::contains(const mpq_class& x) const {
  const mpq_class n(static_cast<unsigned long>(window));
  return mpq_class(static_cast<unsigned long>(min_count)) / n <= x &&
         x <= mpq_class(static_cast<unsigned long>(max_count)) / n;
}

FrequencyEnvelope factor_frequency_envelope(std::span<const Letter> text, const Word& factor, std::size_t window) {
  if (factor.empty()) throw std::invalid_argument("factor must be non-empty");
  return envelope_from_hits(occurrences(text, factor), factor, window, text.size());
}

FrequencyEnvelope factor_frequency_envelope(WordStream& stream, const Word& factor, std::size_t window,
                                            std::size_t prefix) {
  if (window > prefix) throw std::invalid_argument("window must not exceed prefix");
  return factor_frequency_envelope(stream.prefix(prefix), factor, window);
}

std::string to_string(ErgodicVerdict::Status s) {
  switch (s) {
    case ErgodicVerdict::Status::LikelyErgodic: return "likely-ergodic";
    case ErgodicVerdict::Status::Suspect: return "suspect";
    case ErgodicVerdict::Status::ZeroFrequency: return "zero-frequency";
  }
  return "?";
}

ErgodicVerdict ergodic_word_verdict(std::span<const Letter> text, std::size_t max_factor_len, std::size_t window,
                                    double tol) {
  if (max_factor_len == 0 || window == 0 || !(tol > 0)) throw std::invalid_argument("parameters must be positive");
  if (window + max_factor_len - 1 > text.size()) throw std::invalid_argument("window too long for the prefix");

  ErgodicVerdict verdict;
  verdict.max_factor_len = max_factor_len;
  verdict.window = window;
  verdict.prefix = text.size();
  verdict.tol = tol;

  std::optional<FrequencyEnvelope> zero;
  for (std::size_t len = 1; len <= max_factor_len; ++len) {
    // Distinct factors of this length, in lexicographic order.
    std::map<Word, std::size_t> factors;
    for (std::size_t i = 0; i + len <= text.size(); ++i) {
      factors.try_emplace(Word(text.begin() + i, text.begin() + i + len), i);
    }
    for (const auto& [factor, pos] : factors) {
      FrequencyEnvelope env = factor_frequency_envelope(text, factor, window);
      if (env.width() > tol) {
        verdict.status = ErgodicVerdict::Status::Suspect;
        verdict.witness = std::move(env);
        return verdict;
      }
      if (!zero && env.min_count == 0) zero = std::move(env);
    }
  }
  if (zero) {
    verdict.status = ErgodicVerdict::Status::ZeroFrequency;
    verdict.witness = std::move(zero);
  }
  return verdict;
}

ErgodicVerdict ergodic_word_verdict(WordStream& stream, std::size_t max_factor_len, std::size_t window,
                                    std::size_t prefix, double tol) {
  return ergodic_word_verdict(stream.prefix(prefix), max_factor_len, window, tol);
}

ValueBracket canonical_value_bracket(WordStream& stream, std::size_t k, std::size_t n, std::size_t prefix) {
  if (n == 0 || k + n > prefix) throw std::invalid_argument("canonical_value_bracket: need 1 <= n and k + n <= prefix");
  const std::span<const Letter> text = stream.prefix(prefix);
  const auto target = text.subspan(k, n);
  const std::size_t windows = prefix - n + 1;
  std::size_t below = 0;
  std::size_t same = 0;
  for (std::size_t i = 0; i < windows; ++i) {
    const auto f = text.subspan(i, n);
    if (std::equal(f.begin(), f.end(), target.begin())) {
      ++same;
    } else if (std::lexicographical_compare(f.begin(), f.end(), target.begin(), target.end())) {
      ++below;
    }
  }
  const mpq_class total(static_cast<unsigned long>(windows));
  return {Scalar(mpq_class(mpq_class(static_cast<unsigned long>(below)) / total)),
          Scalar(mpq_class(mpq_class(static_cast<unsigned long>(below + same)) / total))};
}

Scalar canonical_value_estimate(WordStream& stream, std::size_t k, std::size_t n, std::size_t prefix) {
  return canonical_value_bracket(stream, k, n, prefix).upper;
}

namespace {

bool starts_with(std::span<const Letter> text, std::size_t i, const Word& w) {
  return i + w.size() <= text.size() && std::equal(w.begin(), w.end(), text.begin() + i);
}

// Returns true when T^i u is "better" than T^best u in the requested direction.
bool improves(WordStream& stream, std::size_t i, std::size_t best, bool want_max, std::size_t depth) {
  const ShiftOrder r = compare_shifts(stream, i, best, depth);
  if (!r.resolved()) {
    std::ostringstream os;
    os << "shifts " << i << " and " << best << " agree on " << depth << " letters";
    throw ComparisonExhausted(os.str());
  }
  return want_max ? r.kind == ShiftOrder::Kind::Greater : r.kind == ShiftOrder::Kind::Less;
}

std::pair<std::optional<std::size_t>, bool> scan_side(WordStream& stream, const Word& w, std::size_t prefix,
                                                      std::size_t depth, bool want_max) {
  if (w.empty()) return {std::nullopt, false};
  const std::span<const Letter> text = stream.prefix(prefix + depth);
  std::optional<std::size_t> best;
  std::optional<std::size_t> at_half;
  for (std::size_t i = 0; i < prefix; ++i) {
    if (i == prefix / 2) at_half = best;
    if (!starts_with(text, i, w)) continue;
    if (!best || improves(stream, i, *best, want_max, depth)) best = i;
  }
  if (!best) throw FactorAbsent("factor " + to_string(w) + " does not occur in the scanned prefix");
  return {best, at_half == best};
}

}  // namespace

MaxMinScan maxmin_scan(WordStream& stream, const Word& w, const Word& v, std::size_t prefix, std::size_t depth) {
  if (prefix == 0) throw std::invalid_argument("maxmin_scan: prefix must be positive");
  MaxMinScan out;
  std::tie(out.max_candidate, out.max_stable) = scan_side(stream, w, prefix, depth, true);
  std::tie(out.min_candidate, out.min_stable) = scan_side(stream, v, prefix, depth, false);
  return out;
}

}  // namespace permulex
