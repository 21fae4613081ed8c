#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include "permulex/quadratic.hpp"

namespace permulex {

/// Three-way comparison that may fail to decide.
enum class Cmp { Less, Equal, Greater, Unknown };

/// Certified real enclosure [lo, hi] with MPFR endpoints at a fixed working
/// precision. Every operation rounds outward, so the true value stays inside.
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = 256);
  Ball(const mpq_class& q, mpfr_prec_t prec);
  Ball(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);
  static Ball from_quadratic(const Quadratic& x, mpfr_prec_t prec);

  Ball(const Ball& o);
  Ball(Ball&& o) noexcept;
  Ball& operator=(const Ball& o);
  Ball& operator=(Ball&& o) noexcept;
  ~Ball();

  mpfr_prec_t precision() const noexcept { return prec_; }
  mpfr_srcptr lower() const noexcept { return lo_; }
  mpfr_srcptr upper() const noexcept { return hi_; }
  mpq_class lower_q() const;
  mpq_class upper_q() const;
  /// Upper bound on hi - lo.
  double width() const;
  double mid_double() const;
  bool contains(const mpq_class& q) const;
  bool contains_zero() const;

  Ball operator-() const;
  friend Ball operator+(const Ball& x, const Ball& y);
  friend Ball operator-(const Ball& x, const Ball& y);
  friend Ball operator*(const Ball& x, const Ball& y);
  /// Throws UnresolvableComparison when y contains zero.
  friend Ball operator/(const Ball& x, const Ball& y);

  /// Less/Greater when the enclosures are disjoint, Equal only for two
  /// identical point balls, Unknown otherwise.
  friend Cmp compare(const Ball& x, const Ball& y);

  /// "mid+/-rad" where mid reads back to the same MPFR value at this precision.
  std::string str() const;
  /// Inverse of str(); the result encloses the written ball.
  static Ball parse(const std::string& s, mpfr_prec_t prec);
  /// Decimal midpoint with `digits` significant digits.
  std::string decimal(int digits = 17) const;

 private:
  void init(mpfr_prec_t prec);
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace permulex
