#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace permulex {

/// Dense univariate polynomial with rational coefficients; coeffs[k] is the
/// coefficient of x^k. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);

  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const mpq_class& leading() const { return c_.back(); }

  mpq_class operator()(const mpq_class& x) const;
  /// Horner evaluation in any ring that accepts mpq_class coefficients via
  /// the supplied conversion.
  template <typename T, typename FromQ>
  T evaluate(const T& x, FromQ from_q) const {
    if (c_.empty()) return from_q(mpq_class(0));
    T acc = from_q(c_.back());
    for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * x + from_q(c_[k]);
    return acc;
  }

  Polynomial derivative() const;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Quotient and remainder of a / b (b nonzero).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd.
Polynomial gcd(Polynomial a, Polynomial b);
/// p / gcd(p, p'), made monic.
Polynomial squarefree_part(const Polynomial& p);

/// Square integer matrix, row-major.
using IntMatrix = std::vector<std::vector<mpz_class>>;

/// det(xI - A) together with adj(xI - A), the latter as a matrix of
/// polynomials, via Faddeev-LeVerrier (exact integer arithmetic).
struct CharacteristicData {
  Polynomial charpoly;
  std::vector<std::vector<Polynomial>> adjugate;
};
CharacteristicData characteristic_data(const IntMatrix& a);

/// Number of distinct real roots of a squarefree p in (lo, hi], by Sturm.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);
  std::size_t count(const mpq_class& lo, const mpq_class& hi) const;
  const Polynomial& base() const { return seq_.front(); }

 private:
  std::size_t sign_changes(const mpq_class& x) const;
  std::vector<Polynomial> seq_;
};

/// Half-open rational interval (lo, hi] holding exactly one real root.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
};

/// Isolating intervals of every real root of p, in increasing order.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);
/// Shrinks an isolating interval until hi - lo <= width.
RootInterval refine_root(const SturmSequence& s, RootInterval r, const mpq_class& width);

}  // namespace permulex
