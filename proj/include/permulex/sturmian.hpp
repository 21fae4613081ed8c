#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "permulex/scalar.hpp"
#include "permulex/word.hpp"

namespace permulex {

/// Rotation by an irrational sigma in (0, 1) started at rho in [0, 1).
struct SturmianParams {
  Scalar sigma;
  Scalar rho;
};

/// Validates the parameters. A rational sigma is rejected with
/// ValidationError since its rotation sequence repeats; a ball sigma is
/// accepted as given.
SturmianParams make_sturmian_params(Scalar sigma, Scalar rho);

/// Fractional part. Throws UnresolvableComparison when a ball straddles an
/// integer.
Scalar frac(const Scalar& x);

/// beta_k = {rho + k sigma} for k = 0..n-1.
std::vector<Scalar> rotation_sequence(const SturmianParams& params, std::size_t n);

/// x -> ({2x - rho}, {2x - rho + sigma}); sends beta_n to (beta_2n, beta_2n+1).
std::pair<Scalar, Scalar> doubling_step(const Scalar& x, const SturmianParams& params);

/// First n values of the fixed point of the doubling morphism started at
/// beta_0, by block substitution.
std::vector<Scalar> doubling_sequence(const SturmianParams& params, std::size_t n);

struct SturmianCrossCheck {
  std::size_t n = 0;
  bool matches_shift_order = false;
  bool matches_canonical = false;
  /// Least j such that the first j+1 rank patterns differ.
  std::optional<std::size_t> first_mismatch;

  bool agree() const noexcept { return matches_shift_order && matches_canonical; }
};

/// Compares the rotation with sigma = rho = (3 - sqrt 5)/2 against the
/// square of the Fibonacci morphism: its shift order and its canonical
/// sequence.
SturmianCrossCheck sturmian_cross_check(std::size_t n);
/// Same comparison for other parameters and another fixed point.
SturmianCrossCheck sturmian_cross_check(const SturmianParams& params, const Morphism& phi, Letter seed,
                                        std::size_t n);

}  // namespace permulex
