#include "rigiditylab/transforms.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace rigiditylab {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

const cplx kI{0.0, 1.0};

cplx sqrt_tau_over_i(cplx tau) { return std::sqrt(tau / kI); }

double translation_sign(ThetaKind kind, ShiftKind shift) {
    switch (shift) {
        case ShiftKind::ByOne:
            return (kind == ThetaKind::Theta || kind == ThetaKind::Theta1) ? -1.0 : 1.0;
        case ShiftKind::ByTau:
            return (kind == ThetaKind::Theta || kind == ThetaKind::Theta2) ? -1.0 : 1.0;
    }
    throw std::logic_error("translation_sign: bad shift");
}

// gcd(a,b) = a*x + b*y
long egcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::labs(a);
    }
    long x1, y1;
    long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

ModuliPoint modular_act(const SL2Z& g, const ModuliPoint& p) {
    if (g.det() != 1) throw std::domain_error("modular_act: matrix determinant is not 1");
    if (!(p.tau.imag() > 0.0))
        throw std::domain_error("modular_act: tau not in upper half-plane");
    cplx den = static_cast<double>(g.c) * p.tau + static_cast<double>(g.d);
    return {p.v / den, (static_cast<double>(g.a) * p.tau + static_cast<double>(g.b)) / den};
}

double scaled_residual(cplx lhs, cplx rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs));
}

double translation_residual(ThetaKind kind, const ModuliPoint& p, ShiftKind shift,
                            double eps) {
    cplx shifted_v = shift == ShiftKind::ByOne ? p.v + 1.0 : p.v + p.tau;
    cplx lhs = theta_eval(kind, {shifted_v, p.tau}, eps);
    cplx mult(translation_sign(kind, shift), 0.0);
    if (shift == ShiftKind::ByTau)
        mult *= std::exp(-kI * kPi * p.tau) * std::exp(-2.0 * kPi * kI * p.v);
    cplx rhs = mult * theta_eval(kind, p, eps);
    return scaled_residual(lhs, rhs);
}

cplx lattice_shift_factor(ThetaKind kind, long k, const ModuliPoint& p) {
    double s = (kind == ThetaKind::Theta || kind == ThetaKind::Theta2) ? -1.0 : 1.0;
    double sign = (k % 2 == 0) ? 1.0 : s;
    cplx kk(static_cast<double>(k), 0.0);
    return sign * std::exp(-2.0 * kPi * kI * kk * (p.v + kk * p.tau / 2.0));
}

double modular_residual(ModularRow row, const ModuliPoint& p, Generator g, double eps) {
    if (!(p.tau.imag() > 0.0))
        throw std::domain_error("modular_residual: tau not in upper half-plane");

    if (row == ModularRow::ThetaPrime) {
        if (g == Generator::T) {
            cplx lhs = theta_prime0(p.tau + 1.0, eps);
            cplx rhs = std::exp(kI * kPi / 4.0) * theta_prime0(p.tau, eps);
            return scaled_residual(lhs, rhs);
        }
        cplx r = sqrt_tau_over_i(p.tau);
        cplx lhs = theta_prime0(-1.0 / p.tau, eps);
        cplx rhs = (p.tau / kI) * r * theta_prime0(p.tau, eps);
        return scaled_residual(lhs, rhs);
    }

    ThetaKind kind = row == ModularRow::Theta    ? ThetaKind::Theta
                     : row == ModularRow::Theta1 ? ThetaKind::Theta1
                     : row == ModularRow::Theta2 ? ThetaKind::Theta2
                                                 : ThetaKind::Theta3;
    if (g == Generator::T) {
        cplx lhs = theta_eval(kind, {p.v, p.tau + 1.0}, eps);
        cplx rhs;
        switch (kind) {
            case ThetaKind::Theta:
            case ThetaKind::Theta1:
                rhs = std::exp(kI * kPi / 4.0) * theta_eval(kind, p, eps);
                break;
            case ThetaKind::Theta2:
                rhs = theta_eval(ThetaKind::Theta3, p, eps);
                break;
            case ThetaKind::Theta3:
                rhs = theta_eval(ThetaKind::Theta2, p, eps);
                break;
        }
        return scaled_residual(lhs, rhs);
    }

    // S: theta_kind(v/tau, -1/tau) = c_kind sqrt(tau/i) e^{i pi v^2 / tau} theta_kind'(v,tau)
    cplx lhs = theta_eval(kind, {p.v / p.tau, -1.0 / p.tau}, eps);
    cplx factor = sqrt_tau_over_i(p.tau) * std::exp(kI * kPi * p.v * p.v / p.tau);
    cplx rhs;
    switch (kind) {
        case ThetaKind::Theta:
            rhs = factor / kI * theta_eval(ThetaKind::Theta, p, eps);
            break;
        case ThetaKind::Theta1:
            rhs = factor * theta_eval(ThetaKind::Theta2, p, eps);
            break;
        case ThetaKind::Theta2:
            rhs = factor * theta_eval(ThetaKind::Theta1, p, eps);
            break;
        case ThetaKind::Theta3:
            rhs = factor * theta_eval(ThetaKind::Theta3, p, eps);
            break;
    }
    return scaled_residual(lhs, rhs);
}

double modular_residual(ThetaKind kind, const ModuliPoint& p, Generator g, double eps) {
    ModularRow row = kind == ThetaKind::Theta    ? ModularRow::Theta
                     : kind == ThetaKind::Theta1 ? ModularRow::Theta1
                     : kind == ThetaKind::Theta2 ? ModularRow::Theta2
                                                 : ModularRow::Theta3;
    return modular_residual(row, p, g, eps);
}

SL2Z bezout_complete(long c, long d) {
    long x, y;
    long g = egcd(d, c, x, y);
    if (g != 1) throw std::domain_error("bezout_complete: gcd(c,d) != 1");
    // a*d - b*c = 1 with a = x + t*c, b = -y + t*d.
    long a0 = x, b0 = -y;
    if (c == 0) return {d, 0, 0, d};  // a = d = +-1 forced; |b| minimized at 0

    auto candidate = [&](long t) { return std::pair<long, long>{a0 + t * c, b0 + t * d}; };
    long t0 = -a0 / c;  // truncation; examine a small neighborhood
    std::pair<long, long> best{0, 0};
    bool have = false;
    for (long t = t0 - 2; t <= t0 + 2; ++t) {
        auto [a, b] = candidate(t);
        if (!have) {
            best = {a, b};
            have = true;
            continue;
        }
        auto [ba, bb] = best;
        if (std::labs(a) < std::labs(ba) ||
            (std::labs(a) == std::labs(ba) && std::labs(b) < std::labs(bb)) ||
            (std::labs(a) == std::labs(ba) && std::labs(b) == std::labs(bb) && a > ba)) {
            best = {a, b};
        }
    }
    return {best.first, best.second, c, d};
}

PoleLattice pole_lattice(const std::vector<long>& weights) {
    PoleLattice lattice;
    for (long n : weights) {
        if (n == 0) throw std::domain_error("pole_lattice: zero weight");
        lattice.denominators.insert(std::labs(n));
    }
    return lattice;
}

}  // namespace rigiditylab
