#pragma once

#include <cstddef>
#include <vector>

#include "permulex/polynomial.hpp"
#include "permulex/scalar.hpp"
#include "permulex/word.hpp"

namespace permulex {

/// a(i, j) = number of occurrences of letter i in phi(j).
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(std::size_t q) : q_(q), a_(q * q, 0) {}

  std::size_t size() const noexcept { return q_; }
  long operator()(std::size_t i, std::size_t j) const { return a_[i * q_ + j]; }
  long& operator()(std::size_t i, std::size_t j) { return a_[i * q_ + j]; }
  IntMatrix to_int_matrix() const;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  std::size_t q_;
  std::vector<long> a_;
};

IncidenceMatrix incidence_matrix(const Morphism& phi);

struct Primitivity {
  bool primitive = false;
  /// Least n with A^n > 0; 0 when not primitive.
  std::size_t power = 0;
};

/// Searches n up to the Wielandt bound (q-1)^2 + 1.
Primitivity is_primitive(const IncidenceMatrix& a);

struct SpectralOptions {
  mpfr_prec_t precision = 256;
  /// Use balls even when an exact quadratic form exists.
  bool force_ball = false;
};

/// Perron-Frobenius eigenvalue theta and the letter-frequency vector mu
/// (A mu = theta mu, sum mu = 1), plus the algebraic data needed to
/// re-evaluate them at a higher precision.
struct SpectralData {
  Scalar theta;
  std::vector<Scalar> mu;
  bool exact = true;
  /// Degree of theta over Q when exact (1 or 2), otherwise 0.
  int degree = 0;
  mpfr_prec_t precision = 0;

  Polynomial charpoly;
  /// Polynomials P_i with mu_i proportional to P_i(theta): a column of
  /// adj(xI - A), which lies in the kernel of (A - theta I) at x = theta.
  std::vector<Polynomial> kernel_column;
  RootInterval theta_interval;
};

/// Throws NotPrimitive.
SpectralData perron_data(const IncidenceMatrix& a, const SpectralOptions& opts = {});

/// Ball re-evaluation of a spectral result at a new precision. Exact data
/// is returned unchanged.
SpectralData at_precision(const SpectralData& s, mpfr_prec_t precision);

inline constexpr mpfr_prec_t kDefaultPrecision = 256;
inline constexpr mpfr_prec_t kMaxPrecision = 4096;

}  // namespace permulex
