#pragma once

#include <compare>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <utility>

namespace permulex {

/// Splits n > 0 into (k, s) with n = k^2 * s and s squarefree.
std::pair<mpz_class, mpz_class> squarefree_decomposition(const mpz_class& n);

/// Exact element a + b*sqrt(d) of Q(sqrt(d)), d a squarefree integer >= 2.
///
/// Rationals are the b == 0 case; their radicand is 0 until arithmetic with
/// an irrational value fixes it. Mixing two different radicands throws
/// std::domain_error.
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  Quadratic(mpq_class r) : a_(std::move(r)) { a_.canonicalize(); }  // NOLINT
  /// a + b*sqrt(d) for any d >= 0; square factors of d are folded into b.
  Quadratic(mpq_class a, mpq_class b, const mpz_class& d);

  static Quadratic rational(long num, long den = 1) { return Quadratic(mpq_class(num, den)); }
  static Quadratic sqrt(long n) { return Quadratic(0, 1, n); }

  const mpq_class& rational_part() const noexcept { return a_; }
  const mpq_class& irrational_part() const noexcept { return b_; }
  const mpz_class& radicand() const noexcept { return d_; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }

  int sign() const;
  Quadratic conjugate() const { return Quadratic(a_, -b_, d_, Raw{}); }
  /// Field norm a^2 - d*b^2.
  mpq_class norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }

  mpz_class floor() const;
  /// Fractional part x - floor(x), in [0, 1).
  Quadratic frac() const;

  Quadratic operator-() const { return Quadratic(-a_, -b_, d_, Raw{}); }
  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator-=(const Quadratic& o);
  Quadratic& operator*=(const Quadratic& o);
  Quadratic& operator/=(const Quadratic& o);

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }

  friend bool operator==(const Quadratic& x, const Quadratic& y);
  friend std::strong_ordering operator<=>(const Quadratic& x, const Quadratic& y);

  /// Canonical string: "p/q", "(A+B*sqrt(d))/C", "A-sqrt(d)", ...
  std::string str() const;
  /// Approximation good to about 30 significant digits.
  double to_double() const;

 private:
  struct Raw {};
  Quadratic(mpq_class a, mpq_class b, mpz_class d, Raw) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
  void adopt_radicand(const Quadratic& o);

  mpq_class a_{0};
  mpq_class b_{0};
  mpz_class d_{0};
};

std::ostream& operator<<(std::ostream& os, const Quadratic& x);

}  // namespace permulex
