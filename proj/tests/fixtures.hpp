#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "permulex/permutation.hpp"
#include "permulex/quadratic.hpp"
#include "permulex/scalar.hpp"
#include "permulex/word.hpp"

namespace fx {

using namespace permulex;

inline Morphism thue_morse() { return Morphism(2, {{0, 1}, {1, 0}}, "thue-morse"); }
inline Morphism fibonacci() { return Morphism(2, {{0, 1}, {0}}, "fibonacci"); }
inline Morphism fibonacci2() { return Morphism(2, {{0, 1, 0}, {0, 1}}, "fibonacci-squared"); }
inline Morphism g_morphism() { return Morphism(3, {{0, 2}, {0, 1}, {2, 1}}, "g"); }
inline Morphism inseparable() { return Morphism(2, {{0, 0, 1}, {0, 1, 1}}, "inseparable-001-011"); }
/// Dominant eigenvalue of degree 3, so the spectral data are balls.
inline Morphism cubic() { return Morphism(3, {{0, 0, 1}, {0, 0, 2}, {0, 1}}, "cubic"); }

inline Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }
/// a + b sqrt(5) with rational a, b given as num/den pairs.
inline Scalar r5(long an, long ad, long bn, long bd) {
  return Scalar(Quadratic(mpq_class(an, ad), mpq_class(bn, bd), 5));
}

/// Independent shift order: plain lexicographic comparison of long string
/// suffixes of a prefix generated by iterating the morphism from scratch.
inline std::string fixed_point_string(const Morphism& phi, Letter seed, std::size_t len) {
  Word w{seed};
  while (w.size() < len) w = phi.apply(w);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<char>('0' + w[i]));
  return s;
}

inline std::vector<std::size_t> shift_ranks_by_string_sort(const Morphism& phi, Letter seed, std::size_t n,
                                                           std::size_t depth) {
  const std::string u = fixed_point_string(phi, seed, n + depth);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return u.compare(a, depth, u, b, depth) < 0; });
  std::vector<std::size_t> ranks(n);
  for (std::size_t r = 0; r < n; ++r) ranks[idx[r]] = r + 1;
  return ranks;
}

}  // namespace fx
