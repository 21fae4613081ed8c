#include "permulex/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace permulex {

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class Polynomial::operator()(const mpq_class& x) const {
  return evaluate(x, [](const mpq_class& q) { return q; });
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<mpq_class> quo(static_cast<std::size_t>(a.degree() - db + 1), mpq_class(0));
  for (int k = a.degree(); k >= db; --k) {
    const mpq_class f = rem[static_cast<std::size_t>(k)] / b.leading();
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= f * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

namespace {
Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  std::vector<mpq_class> c = p.coeffs();
  const mpq_class lead = p.leading();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}
}  // namespace

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Polynomial squarefree_part(const Polynomial& p) {
  const Polynomial g = gcd(p, p.derivative());
  return monic(divmod(p, g).first);
}

CharacteristicData characteristic_data(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("characteristic_data: matrix must be square");

  auto identity = [n] {
    IntMatrix id(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  };
  auto mul = [n](const IntMatrix& x, const IntMatrix& y) {
    IntMatrix z(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };

  // M_1 = I; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I.
  // adj(xI - A) = sum_k M_k x^{n-k}.
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  std::vector<IntMatrix> ms;
  IntMatrix m = identity();
  for (std::size_t k = 1; k <= n; ++k) {
    ms.push_back(m);
    const IntMatrix am = mul(a, m);
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / static_cast<long>(k);
    m = am;
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k];
  }

  CharacteristicData out;
  std::vector<mpq_class> cq(c.begin(), c.end());
  out.charpoly = Polynomial(std::move(cq));
  out.adjugate.assign(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<mpq_class> coeffs(n, mpq_class(0));
      for (std::size_t k = 1; k <= n; ++k) coeffs[n - k] = mpq_class(ms[k - 1][i][j]);
      out.adjugate[i][j] = Polynomial(std::move(coeffs));
    }
  }
  return out;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  seq_.push_back(p);
  seq_.push_back(p.derivative());
  while (!seq_.back().is_zero() && seq_.back().degree() > 0) {
    Polynomial r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
    if (r.is_zero()) break;
    seq_.push_back(Polynomial() - r);
  }
  if (seq_.back().is_zero()) seq_.pop_back();
}

std::size_t SturmSequence::sign_changes(const mpq_class& x) const {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& p : seq_) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::size_t SturmSequence::count(const mpq_class& lo, const mpq_class& hi) const {
  return sign_changes(lo) - sign_changes(hi);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  if (p.degree() < 1) return {};
  const Polynomial sf = squarefree_part(p);
  const SturmSequence s(sf);
  // Cauchy bound on root magnitudes.
  mpq_class bound = 0;
  for (int k = 0; k < sf.degree(); ++k) bound = std::max(bound, mpq_class(abs(sf.coeffs()[static_cast<std::size_t>(k)] / sf.leading())));
  bound += 1;

  std::vector<RootInterval> out;
  std::vector<RootInterval> work{{-bound, bound}};
  while (!work.empty()) {
    RootInterval r = work.back();
    work.pop_back();
    const std::size_t n = s.count(r.lo, r.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(r);
      continue;
    }
    const mpq_class mid = (r.lo + r.hi) / 2;
    work.push_back({r.lo, mid});
    work.push_back({mid, r.hi});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

RootInterval refine_root(const SturmSequence& s, RootInterval r, const mpq_class& width) {
  while (r.hi - r.lo > width) {
    const mpq_class mid = (r.lo + r.hi) / 2;
    if (s.count(r.lo, mid) == 1) {
      r.hi = mid;
    } else {
      r.lo = mid;
    }
  }
  return r;
}

}  // namespace permulex
