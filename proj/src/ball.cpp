#include "permulex/ball.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <stdexcept>

#include "permulex/errors.hpp"

namespace permulex {
namespace {

struct MpfrFree {
  void operator()(char* s) const { mpfr_free_str(s); }
};

std::string mpfr_to_string(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t exp = 0;
  std::unique_ptr<char, MpfrFree> raw(mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), x, rnd));
  std::string m(raw.get());
  std::string sign;
  if (m.front() == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  // Value is 0.m * 10^exp.
  return sign + "0." + m + "e" + std::to_string(exp);
}

// Temporary MPFR value with RAII cleanup.
struct Tmp {
  explicit Tmp(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  mpfr_t v;
};

}  // namespace

void Ball::init(mpfr_prec_t prec) {
  prec_ = prec;
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Ball::Ball(mpfr_prec_t prec) {
  init(prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Ball::Ball(const mpq_class& q, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Ball::Ball(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
  if (lo > hi) throw std::invalid_argument("Ball: lo > hi");
  init(prec);
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Ball Ball::from_quadratic(const Quadratic& x, mpfr_prec_t prec) {
  Ball r(x.rational_part(), prec);
  if (x.is_rational()) return r;
  Ball s(prec);
  Tmp d(prec + 64);
  mpfr_set_z(d.v, x.radicand().get_mpz_t(), MPFR_RNDN);  // radicands are small integers
  mpfr_sqrt(s.lo_, d.v, MPFR_RNDD);
  mpfr_sqrt(s.hi_, d.v, MPFR_RNDU);
  return r + Ball(x.irrational_part(), prec) * s;
}

Ball::Ball(const Ball& o) {
  init(o.prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDN);
  mpfr_set(hi_, o.hi_, MPFR_RNDN);
}

Ball::Ball(Ball&& o) noexcept {
  init(o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Ball& Ball::operator=(const Ball& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDN);
    mpfr_set(hi_, o.hi_, MPFR_RNDN);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Ball::~Ball() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

mpq_class Ball::lower_q() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

mpq_class Ball::upper_q() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

double Ball::width() const {
  Tmp w(prec_);
  mpfr_sub(w.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.v, MPFR_RNDU);
}

double Ball::mid_double() const {
  Tmp m(prec_ + 1);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

bool Ball::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Ball::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

Ball Ball::operator-() const {
  Ball r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Ball operator+(const Ball& x, const Ball& y) {
  Ball r(std::max(x.prec_, y.prec_));
  mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
  return r;
}

Ball operator-(const Ball& x, const Ball& y) {
  Ball r(std::max(x.prec_, y.prec_));
  mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
  return r;
}

Ball operator*(const Ball& x, const Ball& y) {
  const mpfr_prec_t p = std::max(x.prec_, y.prec_);
  Ball r(p);
  Tmp t(p);
  mpfr_srcptr xs[2] = {x.lo_, x.hi_};
  mpfr_srcptr ys[2] = {y.lo_, y.hi_};
  bool first = true;
  for (auto* a : xs) {
    for (auto* b : ys) {
      mpfr_mul(t.v, a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t.v, r.lo_)) mpfr_set(r.lo_, t.v, MPFR_RNDD);
      mpfr_mul(t.v, a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t.v, r.hi_)) mpfr_set(r.hi_, t.v, MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Ball operator/(const Ball& x, const Ball& y) {
  if (y.contains_zero()) throw UnresolvableComparison("ball division by an enclosure of zero");
  const mpfr_prec_t p = std::max(x.prec_, y.prec_);
  Ball inv(p);
  Tmp one(p);
  mpfr_set_ui(one.v, 1, MPFR_RNDN);
  mpfr_div(inv.lo_, one.v, y.hi_, MPFR_RNDD);
  mpfr_div(inv.hi_, one.v, y.lo_, MPFR_RNDU);
  return x * inv;
}

Cmp compare(const Ball& x, const Ball& y) {
  if (mpfr_less_p(x.hi_, y.lo_)) return Cmp::Less;
  if (mpfr_greater_p(x.lo_, y.hi_)) return Cmp::Greater;
  if (mpfr_equal_p(x.lo_, x.hi_) && mpfr_equal_p(y.lo_, y.hi_) && mpfr_equal_p(x.lo_, y.lo_)) return Cmp::Equal;
  return Cmp::Unknown;
}

std::string Ball::str() const {
  Tmp mid(prec_);
  Tmp rad(64);
  Tmp t(prec_ + 1);
  mpfr_add(t.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(t.v, t.v, 1, MPFR_RNDN);
  mpfr_set(mid.v, t.v, MPFR_RNDN);
  // rad = max(mid - lo, hi - mid), rounded up
  Tmp a(64);
  mpfr_sub(a.v, mid.v, lo_, MPFR_RNDU);
  mpfr_sub(rad.v, hi_, mid.v, MPFR_RNDU);
  mpfr_max(rad.v, rad.v, a.v, MPFR_RNDU);
  return mpfr_to_string(mid.v, 0, MPFR_RNDN) + "+/-" + mpfr_to_string(rad.v, 6, MPFR_RNDU);
}

Ball Ball::parse(const std::string& s, mpfr_prec_t prec) {
  const auto pos = s.find("+/-");
  const std::string mid_s = s.substr(0, pos);
  const std::string rad_s = pos == std::string::npos ? "0" : s.substr(pos + 3);
  Ball r(prec);
  Tmp rad(64);
  if (mpfr_set_str(r.lo_, mid_s.c_str(), 10, MPFR_RNDD) != 0) {
    throw ParseError("invalid ball midpoint: " + mid_s);
  }
  mpfr_set_str(r.hi_, mid_s.c_str(), 10, MPFR_RNDU);
  if (mpfr_set_str(rad.v, rad_s.c_str(), 10, MPFR_RNDU) != 0) {
    throw ParseError("invalid ball radius: " + rad_s);
  }
  mpfr_sub(r.lo_, r.lo_, rad.v, MPFR_RNDD);
  mpfr_add(r.hi_, r.hi_, rad.v, MPFR_RNDU);
  return r;
}

std::string Ball::decimal(int digits) const {
  Tmp m(prec_ + 1);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, m.v);
  return buf;
}

}  // namespace permulex
