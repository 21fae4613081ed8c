#include "permulex/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "permulex/errors.hpp"

namespace permulex {

Scalar::Kind Scalar::kind() const {
  if (!is_exact()) return Kind::Ball;
  return exact().is_rational() ? Kind::Rational : Kind::Quadratic;
}

Ball Scalar::to_ball(mpfr_prec_t prec) const {
  if (is_exact()) return Ball::from_quadratic(exact(), prec);
  return ball();
}

namespace {

template <typename ExactOp, typename BallOp>
Scalar combine(const Scalar& x, const Scalar& y, ExactOp exact_op, BallOp ball_op) {
  if (x.is_exact() && y.is_exact()) return Scalar(exact_op(x.exact(), y.exact()));
  const mpfr_prec_t prec = std::max(x.is_exact() ? 0 : x.ball().precision(), y.is_exact() ? 0 : y.ball().precision());
  return Scalar(ball_op(x.to_ball(prec), y.to_ball(prec)));
}

}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a + b; }, [](const auto& a, const auto& b) { return a + b; });
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a - b; }, [](const auto& a, const auto& b) { return a - b; });
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a * b; }, [](const auto& a, const auto& b) { return a * b; });
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a / b; }, [](const auto& a, const auto& b) { return a / b; });
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(-exact());
  return Scalar(-ball());
}

Cmp compare(const Scalar& x, const Scalar& y) {
  if (x.is_exact() && y.is_exact()) {
    const auto c = x.exact() <=> y.exact();
    return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
  }
  const mpfr_prec_t prec = std::max(x.is_exact() ? 0 : x.ball().precision(), y.is_exact() ? 0 : y.ball().precision());
  return compare(x.to_ball(prec), y.to_ball(prec));
}

bool less(const Scalar& x, const Scalar& y) {
  const Cmp c = compare(x, y);
  if (c == Cmp::Unknown) throw UnresolvableComparison("cannot order " + x.str() + " and " + y.str());
  return c == Cmp::Less;
}

bool equal(const Scalar& x, const Scalar& y) {
  const Cmp c = compare(x, y);
  if (c == Cmp::Unknown) throw UnresolvableComparison("cannot decide equality of " + x.str() + " and " + y.str());
  return c == Cmp::Equal;
}

std::string Scalar::str() const { return is_exact() ? exact().str() : ball().str(); }

std::string Scalar::decimal(int digits) const {
  if (is_exact()) return Ball::from_quadratic(exact(), 256).decimal(digits);
  return ball().decimal(digits);
}

double Scalar::to_double() const { return is_exact() ? exact().to_double() : ball().mid_double(); }

namespace {

class ExactParser {
 public:
  explicit ExactParser(const std::string& s) : s_(s) {}

  Quadratic parse() {
    Quadratic v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream os;
    os << why << " at offset " << pos_ << " in \"" << s_ << "\"";
    throw ParseError(os.str());
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Quadratic expr() {
    Quadratic v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Quadratic term() {
    Quadratic v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        const Quadratic d = factor();
        if (d.sign() == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Quadratic factor() {
    if (accept('-')) return -factor();
    if (accept('(')) {
      Quadratic v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    skip_ws();
    if (s_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      const mpz_class n = integer();
      if (!accept(')')) fail("expected ')'");
      try {
        return Quadratic(0, 1, n);
      } catch (const std::domain_error& e) {
        fail(e.what());
      }
    }
    return Quadratic(mpq_class(integer()));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& s, mpfr_prec_t prec) {
  if (s.find("+/-") != std::string::npos) return Scalar(Ball::parse(s, prec));
  try {
    return Scalar(ExactParser(s).parse());
  } catch (const std::domain_error& e) {
    throw ParseError(std::string(e.what()) + " in \"" + s + "\"");
  }
}

}  // namespace permulex
