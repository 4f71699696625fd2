#ifndef RIGIDITYLAB_THETA_HPP
#define RIGIDITYLAB_THETA_HPP

#include <complex>

namespace rigiditylab {

// The four Jacobi theta functions in the convention used throughout this
// project (q = e^{2*pi*i*tau}, c = prod(1-q^r), see DLMF 20.5 for the
// classical counterparts theta_1..theta_4):
//
//   Theta  (v,tau) = c q^{1/8} 2 sin(pi v) prod (1 - q^r e^{2pi i v})(1 - q^r e^{-2pi i v})
//   Theta1 (v,tau) = c q^{1/8} 2 cos(pi v) prod (1 + q^r e^{2pi i v})(1 + q^r e^{-2pi i v})
//   Theta2 (v,tau) = c           prod (1 - q^{r-1/2} e^{2pi i v})(1 - q^{r-1/2} e^{-2pi i v})
//   Theta3 (v,tau) = c           prod (1 + q^{r-1/2} e^{2pi i v})(1 + q^{r-1/2} e^{-2pi i v})
enum class ThetaKind { Theta, Theta1, Theta2, Theta3 };

// Point of C x H; operations require Im(tau) > 0.
struct ModuliPoint {
    std::complex<double> v;
    std::complex<double> tau;
};

// Truncated-product evaluation with tail multiplier within eps of 1.
// Throws std::domain_error if Im(tau) <= 0.
std::complex<double> theta_eval(ThetaKind kind, const ModuliPoint& p, double eps = 1e-12);

// theta'(0,tau) = 2 pi q^{1/8} prod (1-q^r)^3.
std::complex<double> theta_prime0(std::complex<double> tau, double eps = 1e-12);

namespace detail {

// Truncation index chosen by the geometric tail rule:
// |q|^R max(|w|,1/|w|) < eps/8 and (|w|+1/|w|) |q|^{R+1}/(1-|q|) < eps/4,
// with w = e^{2 pi i v}.
int theta_truncation(std::complex<double> v, std::complex<double> tau, double eps);

// Product formula truncated at a fixed index, for self-consistency tests.
std::complex<double> theta_product(ThetaKind kind, std::complex<double> v,
                                   std::complex<double> tau, int terms);

}  // namespace detail

}  // namespace rigiditylab

#endif
