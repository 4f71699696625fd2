#ifndef RIGIDITYLAB_THETA_SERIES_HPP
#define RIGIDITYLAB_THETA_SERIES_HPP

#include "rigiditylab/qseries.hpp"
#include "rigiditylab/theta.hpp"

namespace rigiditylab {

// Identifies one local factor of the fixed-point formula: a tangent factor
// F_mu(n) (mu = 1..3, n != 0) or a bundle factor G_lambda(m).
struct LocalFactorKey {
    enum class Role { Tangent, Bundle };
    int index;   // mu or lambda, in {1,2,3}
    int weight;  // n or m
    Role role;

    friend auto operator<=>(const LocalFactorKey&, const LocalFactorKey&) = default;
};

// q^{1/8} exponent carried by each theta kind in the product formulas.
int theta_prefactor_eighths(ThetaKind kind);

// Exact q-expansion of theta_kind(weight * t, tau) with coefficients Laurent
// in z = e^{pi i t}. The series retains q^{k/2} for k = 0..order; the
// residual q^{1/8} lives in the prefactor field. Results are memoized.
QSeries<LaurentPoly> theta_qseries(ThetaKind kind, int weight, int order);

// Tangent-weight factor
//   F_mu(n) = (2/pi) theta'(0,tau) theta_mu(n t,tau) / (theta(n t,tau) theta_mu(0,tau)),
// exact, with all q^{1/8} prefactors cancelled and pi absorbed symbolically.
// Throws std::domain_error for n = 0 (theta(0,tau) vanishes identically).
QSeries<RatFun> local_factor(int mu, int weight, int order);

// Bundle-weight factor G_lambda(m) = theta_lambda(m t,tau)/theta_lambda(0,tau).
// G_lambda(0) = 1; every coefficient is a Laurent polynomial.
QSeries<RatFun> bundle_factor(int lambda, int weight, int order);

namespace detail {

// c = prod_{r>=1} (1 - q^r) as a truncated series.
QSeries<LaurentPoly> euler_product_series(int order);

// prod_r (1 + sign q^{r-e} z^{2 weight})(1 + sign q^{r-e} z^{-2 weight}),
// e = 1/2 when half_step, else 0.
QSeries<LaurentPoly> pair_product_series(int sign, bool half_step, int weight, int order);

// F_mu(n) split as prefactor * bulk with the only z-denominator kept in the
// prefactor: F = [local_prefactor_num / tangent_denominator] * local_bulk.
QSeries<LaurentPoly> local_bulk(int mu, int weight, int order);
LaurentPoly local_prefactor_num(int mu, int weight);
LaurentPoly tangent_denominator(int weight);

// G_lambda(m) with plain Laurent coefficients.
QSeries<LaurentPoly> bundle_series(int lambda, int weight, int order);

}  // namespace detail

}  // namespace rigiditylab

#endif
