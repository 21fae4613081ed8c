#include "permulex/spectral.hpp"

#include <optional>
#include <sstream>

#include "permulex/errors.hpp"

namespace permulex {

IntMatrix IncidenceMatrix::to_int_matrix() const {
  IntMatrix m(q_, std::vector<mpz_class>(q_, 0));
  for (std::size_t i = 0; i < q_; ++i)
    for (std::size_t j = 0; j < q_; ++j) m[i][j] = (*this)(i, j);
  return m;
}

IncidenceMatrix incidence_matrix(const Morphism& phi) {
  IncidenceMatrix a(phi.alphabet_size());
  for (std::size_t j = 0; j < phi.alphabet_size(); ++j)
    for (Letter i : phi.image(static_cast<Letter>(j))) ++a(i, j);
  return a;
}

Primitivity is_primitive(const IncidenceMatrix& a) {
  const std::size_t q = a.size();
  using Pattern = std::vector<std::vector<bool>>;
  Pattern base(q, std::vector<bool>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) base[i][j] = a(i, j) > 0;

  Pattern p = base;
  const std::size_t bound = (q - 1) * (q - 1) + 1;
  for (std::size_t n = 1; n <= bound; ++n) {
    bool positive = true;
    for (const auto& row : p)
      for (bool b : row) positive = positive && b;
    if (positive) return {true, n};
    Pattern next(q, std::vector<bool>(q, false));
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t k = 0; k < q; ++k)
        if (p[i][k])
          for (std::size_t j = 0; j < q; ++j)
            if (base[k][j]) next[i][j] = true;
    p = std::move(next);
  }
  return {false, 0};
}

namespace {

mpz_class round_q(const mpq_class& x) {
  mpq_class shifted = x + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return r;
}

mpq_class pow2_neg(unsigned long bits) {
  mpz_class den = 1;
  den <<= bits;
  return mpq_class(mpz_class(1), den);
}

// Tries to express the root of p in `root` exactly with degree <= 2.
std::optional<Quadratic> exact_root(const Polynomial& p, const SturmSequence& sturm, const RootInterval& root,
                                    const std::vector<RootInterval>& all_roots) {
  // Integer root (p is monic with integer coefficients).
  RootInterval narrow = refine_root(sturm, root, mpq_class(1, 4));
  for (mpz_class m : {round_q(narrow.lo), round_q(narrow.hi)}) {
    if (sgn(p(mpq_class(m))) == 0 && mpq_class(m) > root.lo && mpq_class(m) <= root.hi) return Quadratic(mpq_class(m));
  }

  // Quadratic factor x^2 - s x + t shared with another real root.
  mpq_class bound = 1;
  for (const auto& c : p.coeffs()) bound = std::max(bound, mpq_class(abs(c)));
  const unsigned long bits = mpz_sizeinbase(mpz_class(bound + 1).get_mpz_t(), 2) + 64;
  const RootInterval theta = refine_root(sturm, root, pow2_neg(bits));
  const mpq_class th = (theta.lo + theta.hi) / 2;
  for (const auto& other : all_roots) {
    if (other.lo == root.lo && other.hi == root.hi) continue;
    const RootInterval r = refine_root(sturm, other, pow2_neg(bits));
    const mpq_class rr = (r.lo + r.hi) / 2;
    const mpz_class s = round_q(th + rr);
    const mpz_class t = round_q(th * rr);
    const Polynomial quad({mpq_class(t), mpq_class(-s), mpq_class(1)});
    if (!divmod(p, quad).second.is_zero()) continue;
    const mpz_class disc = s * s - 4 * t;
    if (disc <= 0) continue;
    // The larger root of quad is where it changes sign from - to +.
    if (sgn(quad(theta.lo)) >= 0 || sgn(quad(theta.hi)) <= 0) continue;
    return Quadratic(mpq_class(s, 2), mpq_class(1, 2), disc);
  }
  return std::nullopt;
}

Scalar ball_root(const SturmSequence& sturm, const RootInterval& root, mpfr_prec_t prec) {
  const RootInterval r = refine_root(sturm, root, pow2_neg(static_cast<unsigned long>(prec) + 8));
  return Scalar(Ball(r.lo, r.hi, prec));
}

void fill_mu(SpectralData& s) {
  std::vector<Scalar> raw;
  Scalar total(0);
  for (const auto& poly : s.kernel_column) {
    raw.push_back(poly.evaluate(s.theta, [](const mpq_class& q) { return Scalar(q); }));
    total += raw.back();
  }
  s.mu.clear();
  for (const auto& v : raw) s.mu.push_back(v / total);
}

}  // namespace

SpectralData perron_data(const IncidenceMatrix& a, const SpectralOptions& opts) {
  const Primitivity prim = is_primitive(a);
  if (!prim.primitive) throw NotPrimitive("incidence matrix is not primitive");

  SpectralData out;
  const CharacteristicData cd = characteristic_data(a.to_int_matrix());
  out.charpoly = cd.charpoly;
  for (std::size_t i = 0; i < a.size(); ++i) out.kernel_column.push_back(cd.adjugate[i][0]);

  const Polynomial sf = squarefree_part(cd.charpoly);
  const SturmSequence sturm(sf);
  const std::vector<RootInterval> roots = isolate_real_roots(sf);
  // The Perron root is the largest real root and is simple.
  out.theta_interval = roots.back();

  std::optional<Quadratic> exact;
  if (!opts.force_ball) exact = exact_root(sf, sturm, out.theta_interval, roots);
  if (exact) {
    out.exact = true;
    out.degree = exact->is_rational() ? 1 : 2;
    out.theta = Scalar(*exact);
  } else {
    out.exact = false;
    out.degree = 0;
    out.precision = opts.precision;
    out.theta = ball_root(sturm, out.theta_interval, opts.precision);
  }
  fill_mu(out);
  return out;
}

SpectralData at_precision(const SpectralData& s, mpfr_prec_t precision) {
  if (s.exact) return s;
  SpectralData out = s;
  const SturmSequence sturm(squarefree_part(s.charpoly));
  out.precision = precision;
  out.theta = ball_root(sturm, s.theta_interval, precision);
  fill_mu(out);
  return out;
}

}  // namespace permulex
