#include "permulex/order.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permulex/errors.hpp"

namespace permulex {

std::string to_string(const PositionType& t) {
  std::ostringstream os;
  os << "(" << int(t.letter) << "," << t.index << ")";
  return os.str();
}

TypeIndex::TypeIndex(const Morphism& phi) {
  for (std::size_t a = 0; a < phi.alphabet_size(); ++a) {
    offsets_.push_back(types_.size());
    const Word& img = phi.image(static_cast<Letter>(a));
    for (std::size_t p = 1; p <= img.size(); ++p) {
      types_.push_back({static_cast<Letter>(a), p});
      symbols_.push_back(img[p - 1]);
    }
  }
}

namespace {

using StateSet = std::vector<bool>;

// Greedy construction of the extremal image word. States are type ids: the
// pending letter is phi(a)[p]. After the last letter of an image every
// image may start.
class Greedy {
 public:
  Greedy(const Morphism& phi, Direction dir, std::optional<Letter> first)
      : phi_(phi), index_(phi), dir_(dir), state_(index_.size(), false) {
    if (first) {
      state_[index_.id({*first, 1})] = true;
    } else {
      add_all_starts(state_);
    }
  }

  // Emits one letter; records the filtered set when tracking.
  Letter step(std::vector<StateSet>* track) {
    std::optional<Letter> best;
    for (std::size_t s = 0; s < state_.size(); ++s) {
      if (!state_[s]) continue;
      const Letter c = index_.symbol(s);
      if (!best || (dir_ == Direction::Min ? c < *best : c > *best)) best = c;
    }
    StateSet kept(state_.size(), false);
    for (std::size_t s = 0; s < state_.size(); ++s) kept[s] = state_[s] && index_.symbol(s) == *best;
    if (track) track->push_back(kept);
    StateSet next(state_.size(), false);
    for (std::size_t s = 0; s < kept.size(); ++s) {
      if (!kept[s]) continue;
      const PositionType t = index_.type(s);
      if (t.index < phi_.image(t.letter).size()) {
        next[s + 1] = true;
      } else {
        add_all_starts(next);
      }
    }
    state_ = std::move(next);
    return *best;
  }

  const StateSet& state() const { return state_; }
  const TypeIndex& index() const { return index_; }

 private:
  void add_all_starts(StateSet& s) const {
    for (std::size_t a = 0; a < phi_.alphabet_size(); ++a) s[index_.id({static_cast<Letter>(a), 1})] = true;
  }

  const Morphism& phi_;
  TypeIndex index_;
  Direction dir_;
  StateSet state_;
};

// Infinite word pre * per^omega, or a plain finite prefix when per is empty.
struct UltimateWord {
  Word letters;
  std::optional<PeriodCertificate> cert;

  Letter at(std::size_t i) const {
    if (i < letters.size()) return letters[i];
    const std::size_t k = cert->preperiod + (i - cert->preperiod) % cert->period;
    return letters[k];
  }
  bool infinite() const { return cert.has_value(); }
};

UltimateWord run_greedy(const Morphism& phi, Direction dir, std::optional<Letter> first, std::size_t max_steps) {
  Greedy g(phi, dir, first);
  std::map<StateSet, std::size_t> seen;
  UltimateWord out;
  for (std::size_t step = 0; step < max_steps; ++step) {
    auto [it, inserted] = seen.emplace(g.state(), step);
    if (!inserted) {
      out.cert = PeriodCertificate{it->second, step - it->second};
      return out;
    }
    out.letters.push_back(g.step(nullptr));
  }
  return out;
}

// Preimage word whose image agrees with the extremal word on `len` letters.
Word greedy_preimage(const Morphism& phi, Direction dir, Letter first, std::size_t len) {
  Greedy g(phi, dir, first);
  std::vector<StateSet> track;
  for (std::size_t i = 0; i < len; ++i) g.step(&track);
  const TypeIndex& idx = g.index();

  auto first_set = [](const StateSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) return i;
    throw std::logic_error("empty greedy state");
  };
  std::size_t cur = first_set(track.back());
  Word reversed;
  for (std::size_t t = len; t-- > 0;) {
    const PositionType ty = idx.type(cur);
    if (ty.index == 1) reversed.push_back(ty.letter);
    if (t == 0) break;
    const StateSet& prev = track[t - 1];
    if (ty.index > 1) {
      cur = cur - 1;
    } else {
      // Any image that ended at step t-1.
      std::optional<std::size_t> found;
      for (std::size_t a = 0; a < phi.alphabet_size() && !found; ++a) {
        const std::size_t id = idx.id({static_cast<Letter>(a), phi.image(static_cast<Letter>(a)).size()});
        if (prev[id]) found = id;
      }
      if (!found) throw std::logic_error("greedy backtrack failed");
      cur = *found;
    }
  }
  return Word(reversed.rbegin(), reversed.rend());
}

struct WordComparison {
  std::optional<int> sign;  // -1, 0, +1 when decided
  std::size_t offset = 0;   // first difference, or compared length
};

WordComparison compare_ultimate(const UltimateWord& x, const UltimateWord& y) {
  std::size_t len = 0;
  bool exact = x.infinite() && y.infinite();
  if (exact) {
    const std::size_t pre = std::max(x.cert->preperiod, y.cert->preperiod);
    len = pre + std::lcm(x.cert->period, y.cert->period);
  } else {
    auto avail = [](const UltimateWord& w) {
      return w.infinite() ? std::numeric_limits<std::size_t>::max() : w.letters.size();
    };
    len = std::min(avail(x), avail(y));
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (x.at(i) != y.at(i)) return {x.at(i) < y.at(i) ? -1 : 1, i};
  }
  if (exact) return {0, len};
  return {std::nullopt, len};
}

int compare_finite(const Word& x, const Word& y, std::size_t* offset) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != y[i]) {
      if (offset) *offset = i;
      return x[i] < y[i] ? -1 : 1;
    }
  }
  if (offset) *offset = n;
  return 0;
}

}  // namespace

ExtremalWord extremal_image_word(const Morphism& phi, Direction dir, std::size_t depth, std::optional<Letter> first) {
  if (depth == 0) throw std::invalid_argument("extremal_image_word: depth must be >= 1");
  const UltimateWord w = run_greedy(phi, dir, first, depth);
  ExtremalWord out;
  out.certificate = w.cert;
  for (std::size_t i = 0; i < depth; ++i) out.prefix.push_back(w.at(i));
  return out;
}

std::string to_string(MonotonicityVerdict::Status s) {
  switch (s) {
    case MonotonicityVerdict::Status::Monotone: return "monotone";
    case MonotonicityVerdict::Status::NotMonotone: return "not-monotone";
    case MonotonicityVerdict::Status::UnknownAtDepth: return "unknown-at-depth";
  }
  return "?";
}

MonotonicityVerdict monotonicity_verdict(const Morphism& phi, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("monotonicity_verdict: depth must be >= 1");
  MonotonicityVerdict out;
  out.depth = depth;
  bool unknown = false;
  const std::size_t q = phi.alphabet_size();
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      const UltimateWord hi = run_greedy(phi, Direction::Max, static_cast<Letter>(a), depth);
      const UltimateWord lo = run_greedy(phi, Direction::Min, static_cast<Letter>(b), depth);
      const WordComparison c = compare_ultimate(hi, lo);
      if (!c.sign) {
        unknown = true;
        continue;
      }
      if (*c.sign < 0) continue;
      // max phi(a...) >= min phi(b...): build finite preimages covering the
      // first difference (or the whole compared stretch when equal).
      const std::size_t len = *c.sign > 0 ? c.offset + 1 : c.offset;
      MonotonicityWitness w;
      w.smaller = greedy_preimage(phi, Direction::Max, static_cast<Letter>(a), std::max<std::size_t>(len, 1));
      w.larger = greedy_preimage(phi, Direction::Min, static_cast<Letter>(b), std::max<std::size_t>(len, 1));
      w.images_equal = *c.sign == 0;
      out.status = MonotonicityVerdict::Status::NotMonotone;
      out.witness = std::move(w);
      return out;
    }
  }
  out.status = unknown ? MonotonicityVerdict::Status::UnknownAtDepth : MonotonicityVerdict::Status::Monotone;
  return out;
}

bool verify_witness(const Morphism& phi, const MonotonicityWitness& w) {
  if (w.smaller.empty() || w.larger.empty()) return false;
  std::size_t off = 0;
  // u < v must be decided within the words themselves.
  if (compare_finite(w.smaller, w.larger, &off) >= 0 || off >= std::min(w.smaller.size(), w.larger.size())) return false;
  const Word iu = phi.apply(w.smaller);
  const Word iv = phi.apply(w.larger);
  const int c = compare_finite(iu, iv, &off);
  if (w.images_equal) return c == 0;
  return c > 0;
}

MonotonePowerSearch monotone_power(const Morphism& phi, std::size_t max_k, std::size_t depth) {
  if (max_k == 0) throw std::invalid_argument("monotone_power: max_k must be >= 1");
  MonotonePowerSearch out;
  Morphism pk = phi;
  for (std::size_t k = 1; k <= max_k; ++k) {
    if (k > 1) {
      std::vector<Word> images;
      for (const auto& w : pk.images()) images.push_back(phi.apply(w));
      pk = Morphism(phi.alphabet_size(), std::move(images), phi.name());
    }
    const auto v = monotonicity_verdict(pk, depth);
    out.statuses.push_back(v.status);
    if (v.status == MonotonicityVerdict::Status::Monotone) {
      out.power = k;
      break;
    }
  }
  return out;
}

PositionType position_type(WordStream& stream, std::size_t n) {
  const std::size_t m = stream.block_of(n);
  return {stream.at(m), n - stream.block_start(m) + 1};
}

std::vector<PositionType> position_types(WordStream& stream, std::size_t n) {
  std::vector<PositionType> out;
  out.reserve(n);
  stream.ensure(n);
  std::size_t m = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    while (stream.block_start(m + 1) <= pos) ++m;
    out.push_back({stream.at(m), pos - stream.block_start(m) + 1});
  }
  return out;
}

std::size_t TypeTable::rank(const PositionType& t) const {
  auto it = std::find(order.begin(), order.end(), t);
  if (it == order.end()) throw std::out_of_range("type " + to_string(t) + " not in order");
  return static_cast<std::size_t>(it - order.begin());
}

std::string to_string(TypeTable::Verdict v) {
  switch (v) {
    case TypeTable::Verdict::Separable: return "separable";
    case TypeTable::Verdict::Inseparable: return "inseparable";
    case TypeTable::Verdict::UnknownAtDepth: return "unknown-at-depth";
  }
  return "?";
}

namespace {

// Some y of one type strictly between two shifts x < y < z of the other.
std::optional<std::array<std::size_t, 3>> sandwich(WordStream& stream, const std::vector<std::size_t>& outer,
                                                   const std::vector<std::size_t>& inner, std::size_t depth) {
  for (std::size_t y : inner) {
    std::optional<std::size_t> below;
    std::optional<std::size_t> above;
    for (std::size_t x : outer) {
      const ShiftOrder r = compare_shifts(stream, x, y, depth);
      if (r.kind == ShiftOrder::Kind::Less && !below) below = x;
      if (r.kind == ShiftOrder::Kind::Greater && !above) above = x;
    }
    if (below && above) return std::array<std::size_t, 3>{*below, y, *above};
  }
  return std::nullopt;
}

}  // namespace

TypeTable type_order(WordStream& stream, std::size_t prefix_len, std::size_t depth) {
  const TypeIndex index(stream.morphism());
  const std::size_t k = index.size();
  TypeTable table;
  table.types = index.types();
  table.prefix_len = prefix_len;
  table.depth = depth;

  std::vector<std::vector<std::size_t>> occ(k);
  const auto types = position_types(stream, prefix_len);
  for (std::size_t pos = 0; pos < types.size(); ++pos) {
    auto& list = occ[index.id(types[pos])];
    if (list.size() < kOccurrencesPerType) list.push_back(pos);
  }
  for (std::size_t t = 0; t < k; ++t) {
    if (occ[t].empty()) throw TypeMissing("type " + to_string(index.type(t)) + " does not occur in the prefix");
  }

  // rel[s][t] = -1 when every sampled shift of s is below every one of t.
  std::vector<std::vector<int>> rel(k, std::vector<int>(k, 0));
  bool unresolved = false;
  std::optional<std::array<std::size_t, 3>> best;
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = s + 1; t < k; ++t) {
      bool less = false;
      bool greater = false;
      for (std::size_t x : occ[s]) {
        for (std::size_t y : occ[t]) {
          const ShiftOrder r = compare_shifts(stream, x, y, depth);
          if (r.kind == ShiftOrder::Kind::Less) less = true;
          if (r.kind == ShiftOrder::Kind::Greater) greater = true;
          if (!r.resolved()) unresolved = true;
        }
      }
      if (less && greater) {
        auto w = sandwich(stream, occ[s], occ[t], depth);
        if (!w) w = sandwich(stream, occ[t], occ[s], depth);
        if (!w) throw std::logic_error("interleaved types without a sandwich witness");
        // Prefer the witness reaching least far into the word.
        auto key = [](const std::array<std::size_t, 3>& a) {
          return std::make_pair(std::max({a[0], a[1], a[2]}), a);
        };
        if (!best || key(*w) < key(*best)) best = w;
      }
      rel[s][t] = less ? -1 : (greater ? 1 : 0);
      rel[t][s] = -rel[s][t];
    }
  }

  if (best) {
    table.verdict = TypeTable::Verdict::Inseparable;
    table.witness = best;
    return table;
  }
  if (unresolved) {
    table.verdict = TypeTable::Verdict::UnknownAtDepth;
    return table;
  }

  std::vector<std::size_t> ids(k);
  std::iota(ids.begin(), ids.end(), 0);
  // Rank by the number of types each one lies above.
  std::vector<std::size_t> above(k, 0);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) above[s] += rel[s][t] > 0;
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return above[a] < above[b]; });
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (rel[ids[i]][ids[j]] >= 0) throw std::logic_error("pairwise type relations are not a total order");
  for (std::size_t id : ids) table.order.push_back(index.type(id));
  table.verdict = TypeTable::Verdict::Separable;
  return table;
}

}  // namespace permulex
