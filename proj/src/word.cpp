#include "permulex/word.hpp"

#include <algorithm>
#include <sstream>

#include "permulex/errors.hpp"

namespace permulex {

std::string to_string(std::span<const Letter> w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](Letter c) { return c < 10; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i) out.push_back('.');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

Word word_from_string(const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("invalid letter '" + std::string(1, c) + "' in word \"" + s + "\"");
    w.push_back(static_cast<Letter>(c - '0'));
  }
  return w;
}

Morphism::Morphism(std::size_t alphabet_size, std::vector<Word> images, std::string name)
    : images_(std::move(images)), name_(std::move(name)) {
  if (alphabet_size == 0 || alphabet_size > 256) throw ValidationError("alphabet size must be in 1..256");
  if (images_.size() != alphabet_size) {
    std::ostringstream os;
    os << "expected " << alphabet_size << " images, got " << images_.size();
    throw ValidationError(os.str());
  }
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty()) throw ValidationError("image of letter " + std::to_string(a) + " is empty");
    for (Letter c : images_[a]) {
      if (c >= alphabet_size) {
        std::ostringstream os;
        os << "image of letter " << a << " contains letter " << int(c) << " >= alphabet size " << alphabet_size;
        throw ValidationError(os.str());
      }
    }
  }
}

std::size_t Morphism::type_count() const noexcept {
  std::size_t n = 0;
  for (const auto& w : images_) n += w.size();
  return n;
}

std::size_t Morphism::max_image_length() const noexcept {
  std::size_t n = 0;
  for (const auto& w : images_) n = std::max(n, w.size());
  return n;
}

Word Morphism::apply(std::span<const Letter> w) const {
  Word out;
  for (Letter c : w) {
    const Word& img = images_.at(c);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Morphism power(const Morphism& phi, std::size_t k) {
  if (k == 0) throw ValidationError("morphism power must be >= 1");
  std::vector<Word> images = phi.images();
  for (std::size_t i = 1; i < k; ++i) {
    for (auto& w : images) w = phi.apply(w);
  }
  std::string name = phi.name();
  if (k > 1 && !name.empty()) name += "^" + std::to_string(k);
  return Morphism(phi.alphabet_size(), std::move(images), std::move(name));
}

WordStream::WordStream(Morphism phi, Letter seed) : phi_(std::move(phi)), seed_(seed) {
  if (seed_ >= phi_.alphabet_size()) throw NonExtensible("seed letter out of range");
  const Word& first = phi_.image(seed_);
  if (first.front() != seed_) {
    throw NonExtensible("image of seed " + std::to_string(seed_) + " does not start with it");
  }
  if (first.size() < 2) {
    throw NonExtensible("fixed point from seed " + std::to_string(seed_) + " is finite");
  }
  cache_ = first;
  block_starts_.push_back(0);
}

void WordStream::grow_one_block() {
  // cache_ == phi(u[0..m)) with m = block_starts_.size(); |phi(seed)| >= 2
  // keeps m strictly behind the cache end.
  const std::size_t m = block_starts_.size();
  block_starts_.push_back(cache_.size());
  const Word& img = phi_.image(cache_[m]);
  cache_.insert(cache_.end(), img.begin(), img.end());
}

void WordStream::ensure(std::size_t n) {
  if (cache_.size() >= n) return;
  cache_.reserve(std::max(n, 2 * cache_.size()));
  while (cache_.size() < n) grow_one_block();
}

std::span<const Letter> WordStream::prefix(std::size_t n) {
  ensure(n);
  return {cache_.data(), n};
}

std::size_t WordStream::block_of(std::size_t n) {
  ensure(n + 1);
  auto it = std::upper_bound(block_starts_.begin(), block_starts_.end(), n);
  return static_cast<std::size_t>(it - block_starts_.begin()) - 1;
}

std::size_t WordStream::block_start(std::size_t m) {
  while (block_starts_.size() <= m) grow_one_block();
  return block_starts_[m];
}

ShiftOrder compare_shifts(WordStream& stream, std::size_t i, std::size_t j, std::size_t max_depth) {
  if (i == j) throw std::invalid_argument("compare_shifts: identical shifts are incomparable");
  if (max_depth == 0) throw std::invalid_argument("compare_shifts: max_depth must be >= 1");
  const auto u = stream.prefix(std::max(i, j) + max_depth);
  for (std::size_t k = 0; k < max_depth; ++k) {
    const Letter a = u[i + k];
    const Letter b = u[j + k];
    if (a != b) return {a < b ? ShiftOrder::Kind::Less : ShiftOrder::Kind::Greater, k};
  }
  return {ShiftOrder::Kind::Unresolved, max_depth};
}

bool shift_less(WordStream& stream, std::size_t i, std::size_t j, std::size_t initial_depth, std::size_t cap) {
  std::size_t depth = std::max<std::size_t>(initial_depth, 1);
  for (;;) {
    const ShiftOrder r = compare_shifts(stream, i, j, std::min(depth, cap));
    if (r.resolved()) return r.kind == ShiftOrder::Kind::Less;
    if (depth >= cap) {
      std::ostringstream os;
      os << "shifts " << i << " and " << j << " agree on " << cap << " letters (periodic input?)";
      throw ComparisonExhausted(os.str());
    }
    depth *= 2;
  }
}

std::optional<std::size_t> detect_periodicity(WordStream& stream, std::size_t window, std::size_t max_period) {
  const auto u = stream.prefix(2 * window + max_period);
  for (std::size_t p = 1; p <= max_period; ++p) {
    bool periodic = true;
    for (std::size_t k = window; k < 2 * window; ++k) {
      if (u[k] != u[k + p]) {
        periodic = false;
        break;
      }
    }
    if (periodic) return p;
  }
  return std::nullopt;
}

}  // namespace permulex
