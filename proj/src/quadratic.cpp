#include "permulex/quadratic.hpp"

#include <ostream>
#include <stdexcept>

namespace permulex {

std::pair<mpz_class, mpz_class> squarefree_decomposition(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("squarefree_decomposition needs n > 0");
  mpz_class rest = n;
  mpz_class k = 1;
  mpz_class s = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) s *= p;
  }
  s *= rest;
  return {k, s};
}

Quadratic::Quadratic(mpq_class a, mpq_class b, const mpz_class& d) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (d < 0) throw std::domain_error("negative radicand");
  if (d == 0 || sgn(b_) == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  auto [k, s] = squarefree_decomposition(d);
  if (s == 1) {
    a_ += b_ * mpq_class(k);
    b_ = 0;
    d_ = 0;
    return;
  }
  b_ *= mpq_class(k);
  d_ = s;
}

void Quadratic::adopt_radicand(const Quadratic& o) {
  if (o.is_rational()) return;
  if (is_rational()) {
    d_ = o.d_;
    return;
  }
  if (d_ != o.d_) {
    throw std::domain_error("mixed quadratic fields sqrt(" + d_.get_str() + ") and sqrt(" + o.d_.get_str() + ")");
  }
}

int Quadratic::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d.
  const int c = cmp(a_ * a_, b_ * b_ * mpq_class(d_));
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  adopt_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
  adopt_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
  adopt_radicand(o);
  const mpq_class a = a_ * o.a_ + b_ * o.b_ * mpq_class(d_);
  const mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

Quadratic& Quadratic::operator/=(const Quadratic& o) {
  adopt_radicand(o);
  const mpq_class n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  // x / y = x * conj(y) / N(y)
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

bool operator==(const Quadratic& x, const Quadratic& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return sgn(x.b_) == 0 || x.d_ == y.d_;
}

std::strong_ordering operator<=>(const Quadratic& x, const Quadratic& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

mpz_class Quadratic::floor() const {
  mpz_class n;
  if (is_rational()) {
    mpz_fdiv_q(n.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return n;
  }
  mpf_class s(0, 512);
  mpf_class df(d_, 512);
  mpf_sqrt(s.get_mpf_t(), df.get_mpf_t());
  mpf_class v = mpf_class(a_, 512) + mpf_class(b_, 512) * s;
  mpf_floor(v.get_mpf_t(), v.get_mpf_t());
  n = mpz_class(v);
  // Correct the approximation exactly.
  while (Quadratic(mpq_class(n)) > *this) --n;
  while (Quadratic(mpq_class(n + 1)) <= *this) ++n;
  return n;
}

Quadratic Quadratic::frac() const { return *this - Quadratic(mpq_class(floor())); }

double Quadratic::to_double() const {
  if (is_rational()) return a_.get_d();
  mpf_class s(0, 256);
  mpf_class df(d_, 256);
  mpf_sqrt(s.get_mpf_t(), df.get_mpf_t());
  mpf_class v = mpf_class(a_, 256) + mpf_class(b_, 256) * s;
  return v.get_d();
}

std::string Quadratic::str() const {
  if (is_rational()) return a_.get_str();
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  const mpz_class A = mpz_class(a_ * mpq_class(den));
  const mpz_class B = mpz_class(b_ * mpq_class(den));
  std::string out;
  if (A != 0) out = A.get_str();
  const mpz_class absB = abs(B);
  if (B < 0) {
    out += "-";
  } else if (A != 0) {
    out += "+";
  }
  if (absB != 1) out += absB.get_str() + "*";
  out += "sqrt(" + d_.get_str() + ")";
  if (den != 1) {
    if (A != 0) out = "(" + out + ")";
    out += "/" + den.get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Quadratic& x) { return os << x.str(); }

}  // namespace permulex
