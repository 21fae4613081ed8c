#include "permulex/sturmian.hpp"

#include <stdexcept>

#include "permulex/errors.hpp"
#include "permulex/interval_morphism.hpp"
#include "permulex/permutation.hpp"

namespace permulex {

SturmianParams make_sturmian_params(Scalar sigma, Scalar rho) {
  if (sigma.is_exact() && sigma.exact().is_rational()) {
    throw ValidationError("sigma " + sigma.str() + " is rational; the rotation sequence would repeat");
  }
  if (!less(Scalar(0), sigma) || !less(sigma, Scalar(1))) throw ValidationError("sigma must lie in (0, 1)");
  if (less(rho, Scalar(0)) || !less(rho, Scalar(1))) throw ValidationError("rho must lie in [0, 1)");
  return {std::move(sigma), std::move(rho)};
}

Scalar frac(const Scalar& x) {
  if (x.is_exact()) return Scalar(x.exact().frac());
  const Ball& b = x.ball();
  mpz_class lo;
  mpz_class hi;
  mpz_fdiv_q(lo.get_mpz_t(), b.lower_q().get_num_mpz_t(), b.lower_q().get_den_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), b.upper_q().get_num_mpz_t(), b.upper_q().get_den_mpz_t());
  if (lo != hi) throw UnresolvableComparison("value " + x.str() + " straddles an integer");
  return x - Scalar(mpq_class(lo));
}

std::vector<Scalar> rotation_sequence(const SturmianParams& params, std::size_t n) {
  std::vector<Scalar> out;
  out.reserve(n);
  if (n == 0) return out;
  out.push_back(frac(params.rho));
  const Scalar one(1);
  for (std::size_t k = 1; k < n; ++k) {
    Scalar next = out.back() + params.sigma;
    if (!less(next, one)) next -= one;
    out.push_back(std::move(next));
  }
  return out;
}

std::pair<Scalar, Scalar> doubling_step(const Scalar& x, const SturmianParams& params) {
  const Scalar y = x + x - params.rho;
  return {frac(y), frac(y + params.sigma)};
}

std::vector<Scalar> doubling_sequence(const SturmianParams& params, std::size_t n) {
  std::vector<Scalar> out;
  out.reserve(n + 1);
  if (n == 0) return out;
  // beta_0 is fixed by the first branch; start from its image pair.
  auto [b0, b1] = doubling_step(frac(params.rho), params);
  out.push_back(std::move(b0));
  out.push_back(std::move(b1));
  for (std::size_t m = 1; out.size() < n; ++m) {
    auto [l, r] = doubling_step(out[m], params);
    out.push_back(std::move(l));
    out.push_back(std::move(r));
  }
  out.resize(n);
  return out;
}

namespace {

// Least j such that the first j+1 elements are ordered differently.
std::optional<std::size_t> first_mismatch(const FinitePermutation& a, const FinitePermutation& b) {
  for (std::size_t j = 1; j < a.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((a[i] < a[j]) != (b[i] < b[j])) return j;
  return std::nullopt;
}

Morphism fibonacci_squared() { return Morphism(2, {{0, 1, 0}, {0, 1}}, "fibonacci-squared"); }

}  // namespace

SturmianCrossCheck sturmian_cross_check(const SturmianParams& params, const Morphism& phi, Letter seed,
                                        std::size_t n) {
  SturmianCrossCheck report;
  report.n = n;
  if (n == 0) {
    report.matches_shift_order = report.matches_canonical = true;
    return report;
  }
  const FinitePermutation rotation = permutation_from_values(rotation_sequence(params, n));

  WordStream stream(phi, seed);
  const FinitePermutation oracle = valid_permutation_prefix(stream, n);
  const ConstructionInputs inputs = prepare_construction(phi, seed);
  const FinitePermutation canonical = with_precision_escalation(
      inputs, [n](const IntervalMorphism& im) { return permutation_from_values(canonical_prefix(im, n)); });

  const auto shift_gap = first_mismatch(rotation, oracle);
  const auto canon_gap = first_mismatch(rotation, canonical);
  report.matches_shift_order = !shift_gap;
  report.matches_canonical = !canon_gap;
  if (shift_gap || canon_gap) report.first_mismatch = std::min(shift_gap.value_or(n), canon_gap.value_or(n));
  return report;
}

SturmianCrossCheck sturmian_cross_check(std::size_t n) {
  const Scalar golden = Scalar(Quadratic(mpq_class(3, 2), mpq_class(-1, 2), 5));
  return sturmian_cross_check(make_sturmian_params(golden, golden), fibonacci_squared(), 0, n);
}

}  // namespace permulex
