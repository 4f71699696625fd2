#include "rigiditylab/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rigiditylab {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

void require_upper_half(std::complex<double> tau) {
    if (!(tau.imag() > 0.0))
        throw std::domain_error("theta: tau not in upper half-plane");
}

}  // namespace

namespace detail {

int theta_truncation(cplx v, cplx tau, double eps) {
    double aq = std::exp(-2.0 * kPi * tau.imag());
    double aw = std::exp(2.0 * kPi * std::abs(v.imag()));
    double wsum = aw + 1.0 / aw;
    int R = 1;
    double qR = aq;
    // Both the per-factor size and the summed geometric tail must be small.
    while (qR * aw >= eps / 8.0 || wsum * qR * aq / (1.0 - aq) >= eps / 4.0) {
        ++R;
        qR *= aq;
        if (R > 20000)
            throw std::runtime_error("theta: product truncation did not converge");
    }
    return R;
}

cplx theta_product(ThetaKind kind, cplx v, cplx tau, int terms) {
    const cplx q = std::exp(cplx(0.0, 2.0 * kPi) * tau);
    const cplx w = std::exp(cplx(0.0, 2.0 * kPi) * v);
    const cplx winv = 1.0 / w;
    const bool half_step = kind == ThetaKind::Theta2 || kind == ThetaKind::Theta3;
    const double sign =
        (kind == ThetaKind::Theta || kind == ThetaKind::Theta2) ? -1.0 : 1.0;

    cplx c{1.0, 0.0};   // prod (1 - q^r)
    cplx P{1.0, 0.0};   // the w-dependent double product
    cplx qr{1.0, 0.0};  // q^r
    const cplx qhalf = std::exp(cplx(0.0, kPi) * tau);
    for (int r = 1; r <= terms; ++r) {
        qr *= q;
        c *= 1.0 - qr;
        cplx x = half_step ? qr / qhalf : qr;  // q^{r-1/2} or q^r
        P *= (1.0 + sign * x * w) * (1.0 + sign * x * winv);
    }

    switch (kind) {
        case ThetaKind::Theta:
            return c * std::exp(cplx(0.0, kPi / 4.0) * tau) * 2.0 * std::sin(kPi * v) * P;
        case ThetaKind::Theta1:
            return c * std::exp(cplx(0.0, kPi / 4.0) * tau) * 2.0 * std::cos(kPi * v) * P;
        case ThetaKind::Theta2:
        case ThetaKind::Theta3:
            return c * P;
    }
    throw std::logic_error("theta: bad kind");
}

}  // namespace detail

cplx theta_eval(ThetaKind kind, const ModuliPoint& p, double eps) {
    require_upper_half(p.tau);
    if (!(eps > 0.0)) throw std::domain_error("theta: eps must be positive");
    return detail::theta_product(kind, p.v, p.tau, detail::theta_truncation(p.v, p.tau, eps));
}

cplx theta_prime0(cplx tau, double eps) {
    require_upper_half(tau);
    if (!(eps > 0.0)) throw std::domain_error("theta: eps must be positive");
    const cplx q = std::exp(cplx(0.0, 2.0 * kPi) * tau);
    int R = detail::theta_truncation({0.0, 0.0}, tau, eps);
    cplx c{1.0, 0.0};
    cplx qr{1.0, 0.0};
    for (int r = 1; r <= R; ++r) {
        qr *= q;
        c *= 1.0 - qr;
    }
    return 2.0 * kPi * std::exp(cplx(0.0, kPi / 4.0) * tau) * c * c * c;
}

}  // namespace rigiditylab
