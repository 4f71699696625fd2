#ifndef RIGIDITYLAB_CHAR_SERIES_HPP
#define RIGIDITYLAB_CHAR_SERIES_HPP

#include <complex>
#include <vector>

#include "rigiditylab/qseries.hpp"
#include "rigiditylab/theta.hpp"

namespace rigiditylab {

// Chern-root data of a real rank-2l bundle: the complexification has formal
// roots +-2 pi i c_j, with integer rotation weights m_j on the 2-plane
// summands.
struct RootData {
    std::vector<std::complex<double>> roots;
    std::vector<long> weights;

    size_t rank_half() const { return roots.size(); }
    static RootData make(std::vector<std::complex<double>> roots,
                         std::vector<long> weights);
};

// The six infinite tensor products: symmetric/exterior powers over integer
// or half-integer q-powers, with either sign of the half-integer parameter.
enum class FamilyKind {
    SymInt,        // (x) S_{q^r}
    ExtInt,        // (x) Lambda_{q^r}
    SymHalfPlus,   // (x) S_{q^{r-1/2}}
    SymHalfMinus,  // (x) S_{-q^{r-1/2}}
    ExtHalfPlus,   // (x) Lambda_{q^{r-1/2}}
    ExtHalfMinus,  // (x) Lambda_{-q^{r-1/2}}
};

enum class ChKind { Sym, Ext };
enum class BundleArg { PlusW, MinusW, TrivialN };

// Chern character of S_t / Lambda_t applied to W, -W or the trivial bundle:
//   ch(S_t W)      = prod 1/((1 - t e^{xi})(1 - t e^{-xi}))
//   ch(Lambda_t W) = prod (1 + t e^{xi})(1 + t e^{-xi})
//   ch(S_t(-W)), ch(Lambda_t(-W)) are the reciprocals, and
//   ch(S_t eps_N) = (1-t)^{-N}, ch(Lambda_t eps_N) = (1+t)^N.
// Throws std::domain_error at poles of the S-type formulas.
std::complex<double> ch_op(ChKind kind, BundleArg arg, std::complex<double> t,
                           const RootData& roots, int trivial_rank = 0);

// ch of the family applied to the reduced bundle W~ = W - dim W of a real
// rank-2 bundle with roots +-2 pi i c, computed by direct truncated
// expansion of the ch factors (the brute-force route). Coefficients retain
// q^{k/2} for k = 0..order.
QSeries<std::complex<double>> witten_product_series(FamilyKind family,
                                                    std::complex<double> c, int order);

// Same quantity from the closed theta-function forms, with every theta
// expanded by its lattice sum (the independent route):
//   SymInt  -> sin(pi c)/pi * theta'(0)/theta(c)     ExtInt  -> theta_1(c)/(cos(pi c) theta_1(0))
//   SymHalf+ -> theta_2(0)/theta_2(c)                ExtHalf- -> theta_2(c)/theta_2(0)
//   SymHalf- -> theta_3(0)/theta_3(c)                ExtHalf+ -> theta_3(c)/theta_3(0)
QSeries<std::complex<double>> theta_ratio_series(FamilyKind family,
                                                 std::complex<double> c, int order);

// ch of the spinor bundle: prod (e^{pi i c_j} + e^{-pi i c_j}).
std::complex<double> spinor_ch(const RootData& roots);

// ch(Phi_lambda) as a numeric q-series; lambda = 0 gives the base class
//   ch(Phi_0) = (2/pi)^d prod sin(pi c_i) sum_mu prod_i theta' theta_mu(c_i) / (theta(c_i) theta_mu(0)),
// and lambda = 1,2,3 multiply by 2^l prod theta_1(b_j)/theta_1(0), resp.
// the theta_2 and theta_3 ratios. Tangent roots must avoid the integers.
QSeries<std::complex<double>> phi_ch_series(int lambda, const RootData& tangent,
                                            const RootData& bundle, int order);

enum class ClassKind { AhatClass, ChernCharacter, EulerClass, PontryaginTotal };

// Equivariant characteristic classes evaluated at xi_j = 2 pi i c_j and the
// given value of the universal degree-2 element w:
//   Ahat = prod g(xi_j + m_j w) with g(x) = (x/2)/sinh(x/2), g(0) = 1,
//   ch = sum 2 cosh(xi_j + m_j w), Euler = prod (xi_j + m_j w),
//   p = prod (1 + (xi_j + m_j w)^2).
std::complex<double> class_eval(ClassKind kind, const RootData& roots,
                                std::complex<double> w);

// Coefficients of w and w^2 in i*p_1(V)_{S^1}/(2 pi i)^2 beyond the base
// term: (sum m_j b_j, sum m_j^2).
struct P1Coefficients {
    std::complex<double> sum_mb;
    long sum_m2;
};
P1Coefficients p1_coefficients(const RootData& bundle);

namespace detail {

// Lattice-sum q-expansions (prefactor q^{1/8} tracked in eighths):
//   Theta:  -i sum (-1)^n q^{n(n+1)/2} e^{(2n+1) pi i v}
//   Theta1:    sum        q^{n(n+1)/2} e^{(2n+1) pi i v}
//   Theta2:    sum (-1)^n q^{n^2/2}    e^{2 pi i n v}
//   Theta3:    sum        q^{n^2/2}    e^{2 pi i n v}
QSeries<std::complex<double>> theta_lattice_qseries(ThetaKind kind,
                                                    std::complex<double> v, int order);
// theta'(0,tau) = pi q^{1/8} sum (-1)^n (2n+1) q^{n(n+1)/2}.
QSeries<std::complex<double>> theta_prime_lattice_qseries(int order);

}  // namespace detail

}  // namespace rigiditylab

#endif
