#pragma once

#include <string>
#include <variant>

#include "permulex/ball.hpp"
#include "permulex/quadratic.hpp"

namespace permulex {

/// A real number used for frequencies, interval endpoints and sequence
/// values: exact in Q or Q(sqrt(d)), or a certified ball.
///
/// Arithmetic between an exact value and a ball promotes the exact operand
/// to a ball at the ball's precision.
class Scalar {
 public:
  enum class Kind { Rational, Quadratic, Ball };

  Scalar() : v_(permulex::Quadratic()) {}
  Scalar(long n) : v_(permulex::Quadratic(n)) {}                    // NOLINT
  Scalar(permulex::Quadratic q) : v_(std::move(q)) {}               // NOLINT
  Scalar(mpq_class q) : v_(permulex::Quadratic(std::move(q))) {}    // NOLINT
  Scalar(permulex::Ball b) : v_(std::move(b)) {}                    // NOLINT

  static Scalar rational(long num, long den = 1) { return Scalar(mpq_class(num, den)); }

  Kind kind() const;
  bool is_exact() const noexcept { return std::holds_alternative<permulex::Quadratic>(v_); }
  const permulex::Quadratic& exact() const { return std::get<permulex::Quadratic>(v_); }
  const permulex::Ball& ball() const { return std::get<permulex::Ball>(v_); }
  /// Ball enclosure at the given precision (exact values are converted).
  permulex::Ball to_ball(mpfr_prec_t prec) const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }

  friend Cmp compare(const Scalar& x, const Scalar& y);

  /// Exact string ("p/q", "(a+b*sqrt(d))/c") or "mid+/-rad" for balls.
  std::string str() const;
  /// Decimal approximation with the given number of significant digits.
  std::string decimal(int digits = 17) const;
  double to_double() const;

 private:
  std::variant<permulex::Quadratic, permulex::Ball> v_;
};

/// Strict comparison that throws UnresolvableComparison on Unknown.
bool less(const Scalar& x, const Scalar& y);
/// Exact equality; throws UnresolvableComparison when undecidable.
bool equal(const Scalar& x, const Scalar& y);

/// Parses the output of Scalar::str(). Exact forms accept the grammar
///   expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)*
///   factor := '-' factor | integer | 'sqrt(' integer ')' | '(' expr ')'
/// Strings containing "+/-" are read as balls at `prec` bits.
Scalar parse_scalar(const std::string& s, mpfr_prec_t prec = 256);

}  // namespace permulex
