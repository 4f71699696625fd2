#include "rigiditylab/char_series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rigiditylab {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;
using CSeries = QSeries<cplx>;

const cplx kI{0.0, 1.0};

bool family_is_sym(FamilyKind f) {
    return f == FamilyKind::SymInt || f == FamilyKind::SymHalfPlus ||
           f == FamilyKind::SymHalfMinus;
}
bool family_is_half(FamilyKind f) { return f != FamilyKind::SymInt && f != FamilyKind::ExtInt; }
// Sign of the series parameter t = sign * q^{r} or sign * q^{r-1/2}.
int family_sign(FamilyKind f) {
    return (f == FamilyKind::SymHalfMinus || f == FamilyKind::ExtHalfMinus) ? -1 : +1;
}

// 1 + s*u*x as a series in x (placed on the half grid at index `step`).
CSeries linear_factor(cplx u, int s, int step, int order) {
    CSeries f = CSeries::one(order);
    if (step <= order) f.set_coeff(step, static_cast<double>(s) * u);
    return f;
}
// (1 - s*u*x)^{-1} = sum (s*u)^m x^m.
CSeries geometric_factor(cplx u, int s, int step, int order) {
    CSeries f = CSeries::one(order);
    cplx p{1.0, 0.0};
    for (int k = step; k <= order; k += step) {
        p *= static_cast<double>(s) * u;
        f.set_coeff(k, p);
    }
    return f;
}

}  // namespace

RootData RootData::make(std::vector<cplx> roots, std::vector<long> weights) {
    if (roots.size() != weights.size())
        throw std::invalid_argument("RootData: roots/weights length mismatch");
    return {std::move(roots), std::move(weights)};
}

cplx ch_op(ChKind kind, BundleArg arg, cplx t, const RootData& roots, int trivial_rank) {
    if (arg == BundleArg::TrivialN) {
        cplx base = kind == ChKind::Sym ? 1.0 - t : 1.0 + t;
        cplx p{1.0, 0.0};
        for (int k = 0; k < trivial_rank; ++k) p *= base;
        if (kind == ChKind::Sym) {
            if (std::abs(p) == 0.0) throw std::domain_error("ch_op: pole of S_t at t = 1");
            return 1.0 / p;
        }
        return p;
    }

    cplx prod{1.0, 0.0};
    for (cplx c : roots.roots) {
        cplx e = std::exp(2.0 * kPi * kI * c);
        for (cplx ex : {e, 1.0 / e}) {
            cplx factor = kind == ChKind::Sym ? 1.0 - t * ex : 1.0 + t * ex;
            prod *= factor;
        }
    }
    bool reciprocal = (kind == ChKind::Sym) == (arg == BundleArg::PlusW);
    if (reciprocal) {
        if (std::abs(prod) == 0.0)
            throw std::domain_error("ch_op: pole of the S_t/Lambda_t formula");
        return 1.0 / prod;
    }
    return prod;
}

CSeries witten_product_series(FamilyKind family, cplx c, int order) {
    const cplx e = std::exp(2.0 * kPi * kI * c);
    const int sign = family_sign(family);
    const bool half = family_is_half(family);
    const bool sym = family_is_sym(family);

    CSeries acc = CSeries::one(order);
    for (int r = 1;; ++r) {
        int step = half ? 2 * r - 1 : 2 * r;
        if (step > order) break;
        if (sym) {
            // ch(S_t W~) = (1-t)^2 / ((1 - t e^xi)(1 - t e^-xi)), t = sign q^{...}
            acc *= geometric_factor(e, sign, step, order);
            acc *= geometric_factor(1.0 / e, sign, step, order);
            acc *= linear_factor(1.0, -sign, step, order);
            acc *= linear_factor(1.0, -sign, step, order);
        } else {
            // ch(Lambda_t W~) = (1 + t e^xi)(1 + t e^-xi) / (1+t)^2
            acc *= linear_factor(e, sign, step, order);
            acc *= linear_factor(1.0 / e, sign, step, order);
            acc *= geometric_factor(1.0, -sign, step, order);
            acc *= geometric_factor(1.0, -sign, step, order);
        }
    }
    return acc;
}

namespace detail {

CSeries theta_lattice_qseries(ThetaKind kind, cplx v, int order) {
    const bool integer_row =
        kind == ThetaKind::Theta2 || kind == ThetaKind::Theta3;
    CSeries s(order, integer_row ? 0 : 1);
    for (int n = -order - 2; n <= order + 2; ++n) {
        int k = integer_row ? n * n : n * (n + 1);
        if (k > order) continue;
        double sgn = (kind == ThetaKind::Theta || kind == ThetaKind::Theta2)
                         ? (n % 2 == 0 ? 1.0 : -1.0)
                         : 1.0;
        cplx term;
        if (integer_row) {
            term = sgn * std::exp(2.0 * kPi * kI * static_cast<double>(n) * v);
        } else {
            term = sgn * std::exp(kPi * kI * static_cast<double>(2 * n + 1) * v);
            if (kind == ThetaKind::Theta) term *= -kI;
        }
        s.set_coeff(k, s.coeff(k) + term);
    }
    return s;
}

CSeries theta_prime_lattice_qseries(int order) {
    CSeries s(order, 1);
    for (int n = -order - 2; n <= order + 2; ++n) {
        int k = n * (n + 1);
        if (k > order) continue;
        double sgn = n % 2 == 0 ? 1.0 : -1.0;
        s.set_coeff(k, s.coeff(k) + kPi * sgn * static_cast<double>(2 * n + 1));
    }
    return s;
}

}  // namespace detail

CSeries theta_ratio_series(FamilyKind family, cplx c, int order) {
    using detail::theta_lattice_qseries;
    CSeries out(order);
    switch (family) {
        case FamilyKind::SymInt: {
            CSeries num = detail::theta_prime_lattice_qseries(order).scaled(
                std::sin(kPi * c) / kPi);
            out = num * theta_lattice_qseries(ThetaKind::Theta, c, order).inverse();
            break;
        }
        case FamilyKind::ExtInt: {
            CSeries num = theta_lattice_qseries(ThetaKind::Theta1, c, order)
                              .scaled(1.0 / std::cos(kPi * c));
            out = num * theta_lattice_qseries(ThetaKind::Theta1, 0.0, order).inverse();
            break;
        }
        case FamilyKind::SymHalfPlus:
            out = theta_lattice_qseries(ThetaKind::Theta2, 0.0, order) *
                  theta_lattice_qseries(ThetaKind::Theta2, c, order).inverse();
            break;
        case FamilyKind::ExtHalfMinus:
            out = theta_lattice_qseries(ThetaKind::Theta2, c, order) *
                  theta_lattice_qseries(ThetaKind::Theta2, 0.0, order).inverse();
            break;
        case FamilyKind::SymHalfMinus:
            out = theta_lattice_qseries(ThetaKind::Theta3, 0.0, order) *
                  theta_lattice_qseries(ThetaKind::Theta3, c, order).inverse();
            break;
        case FamilyKind::ExtHalfPlus:
            out = theta_lattice_qseries(ThetaKind::Theta3, c, order) *
                  theta_lattice_qseries(ThetaKind::Theta3, 0.0, order).inverse();
            break;
    }
    if (out.prefactor_eighths() != 0)
        throw std::logic_error("theta_ratio_series: q^{1/8} prefactors did not cancel");
    return out;
}

cplx spinor_ch(const RootData& roots) {
    cplx p{1.0, 0.0};
    for (cplx c : roots.roots)
        p *= std::exp(kPi * kI * c) + std::exp(-kPi * kI * c);
    return p;
}

CSeries phi_ch_series(int lambda, const RootData& tangent, const RootData& bundle,
                      int order) {
    if (lambda < 0 || lambda > 3)
        throw std::domain_error("phi_ch_series: lambda must be 0..3");
    using detail::theta_lattice_qseries;

    CSeries sum(order);
    const ThetaKind mu_kinds[3] = {ThetaKind::Theta1, ThetaKind::Theta2,
                                   ThetaKind::Theta3};
    for (ThetaKind mu : mu_kinds) {
        CSeries term = CSeries::one(order);
        for (cplx c : tangent.roots) {
            // (2/pi) sin(pi c) theta'(0) theta_mu(c) / (theta(c) theta_mu(0))
            CSeries factor = detail::theta_prime_lattice_qseries(order).scaled(
                2.0 / kPi * std::sin(kPi * c));
            factor *= theta_lattice_qseries(mu, c, order);
            factor *= theta_lattice_qseries(ThetaKind::Theta, c, order).inverse();
            factor *= theta_lattice_qseries(mu, 0.0, order).inverse();
            if (factor.prefactor_eighths() != 0)
                throw std::logic_error("phi_ch_series: q^{1/8} prefactors did not cancel");
            term *= factor;
        }
        sum += term;
    }
    if (lambda == 0) return sum;

    ThetaKind lam_kind = lambda == 1   ? ThetaKind::Theta1
                         : lambda == 2 ? ThetaKind::Theta2
                                       : ThetaKind::Theta3;
    for (cplx b : bundle.roots) {
        sum *= theta_lattice_qseries(lam_kind, b, order);
        sum *= theta_lattice_qseries(lam_kind, 0.0, order).inverse();
    }
    if (lambda == 1)
        sum = sum.scaled(std::pow(2.0, static_cast<double>(bundle.rank_half())));
    return sum;
}

cplx class_eval(ClassKind kind, const RootData& roots, cplx w) {
    auto equivariant_root = [&](size_t j) {
        return 2.0 * kPi * kI * roots.roots[j] + static_cast<double>(roots.weights[j]) * w;
    };
    size_t n = roots.rank_half();
    switch (kind) {
        case ClassKind::AhatClass: {
            cplx p{1.0, 0.0};
            for (size_t j = 0; j < n; ++j) {
                cplx x = equivariant_root(j);
                p *= std::abs(x) < 1e-14 ? cplx{1.0, 0.0} : x / 2.0 / std::sinh(x / 2.0);
            }
            return p;
        }
        case ClassKind::ChernCharacter: {
            cplx s{0.0, 0.0};
            for (size_t j = 0; j < n; ++j) s += 2.0 * std::cosh(equivariant_root(j));
            return s;
        }
        case ClassKind::EulerClass: {
            cplx p{1.0, 0.0};
            for (size_t j = 0; j < n; ++j) p *= equivariant_root(j);
            return p;
        }
        case ClassKind::PontryaginTotal: {
            cplx p{1.0, 0.0};
            for (size_t j = 0; j < n; ++j) {
                cplx x = equivariant_root(j);
                p *= 1.0 + x * x;
            }
            return p;
        }
    }
    throw std::logic_error("class_eval: bad kind");
}

P1Coefficients p1_coefficients(const RootData& bundle) {
    P1Coefficients out{cplx{0.0, 0.0}, 0};
    for (size_t j = 0; j < bundle.rank_half(); ++j) {
        out.sum_mb += static_cast<double>(bundle.weights[j]) * bundle.roots[j];
        out.sum_m2 += bundle.weights[j] * bundle.weights[j];
    }
    return out;
}

}  // namespace rigiditylab
