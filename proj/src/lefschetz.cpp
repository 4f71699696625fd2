#include "rigiditylab/lefschetz.hpp"

#include <cmath>
#include <numbers>

namespace rigiditylab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleThreshold = 1e-13;
using cplx = std::complex<double>;

const cplx kI{0.0, 1.0};

void check_lambda(int lambda) {
    if (lambda < 1 || lambda > 3)
        throw std::domain_error("lefschetz: lambda must be 1, 2 or 3");
}

ThetaKind index_kind(int i) {
    return i == 1 ? ThetaKind::Theta1 : i == 2 ? ThetaKind::Theta2 : ThetaKind::Theta3;
}

// F_mu(n t) with a refusal window around the lattice zeros of theta(n t).
cplx local_factor_num(int mu, long n, cplx t, cplx tau, double eps) {
    cplx den = theta_eval(ThetaKind::Theta, {static_cast<double>(n) * t, tau}, eps);
    if (std::abs(den) < kPoleThreshold)
        throw PoleProximityError("lefschetz: theta(" + std::to_string(n) +
                                 " t, tau) within 1e-13 of a lattice zero");
    ThetaKind mk = index_kind(mu);
    cplx num = theta_prime0(tau, eps) *
               theta_eval(mk, {static_cast<double>(n) * t, tau}, eps);
    return 2.0 / kPi * num / (den * theta_eval(mk, {0.0, tau}, eps));
}

cplx bundle_factor_num(int lambda, long m, cplx t, cplx tau, double eps) {
    ThetaKind lk = index_kind(lambda);
    return theta_eval(lk, {static_cast<double>(m) * t, tau}, eps) /
           theta_eval(lk, {0.0, tau}, eps);
}

// sign * (sum_mu prod_i F_mu) * prod_j G_{lambda}; kappa not included.
cplx component_term(int lambda, const FixedPointComponent& comp, cplx t, cplx tau,
                    double eps) {
    cplx sum{0.0, 0.0};
    for (int mu = 1; mu <= 3; ++mu) {
        cplx prod{1.0, 0.0};
        for (long n : comp.tangent_weights) prod *= local_factor_num(mu, n, t, tau, eps);
        sum += prod;
    }
    for (long m : comp.bundle_weights) sum *= bundle_factor_num(lambda, m, t, tau, eps);
    return static_cast<double>(comp.sign) * sum;
}

long component_sum_m2(const FixedPointComponent& comp) {
    long s = 0;
    for (long m : comp.bundle_weights) s += m * m;
    return s;
}

}  // namespace

ManifoldFixture validate_fixture(const ManifoldFixture& f) {
    if (f.name.empty()) throw FixtureError("fixture: empty name");
    if (f.d < 1) throw FixtureError("fixture '" + f.name + "': d must be positive");
    if (f.l < 0) throw FixtureError("fixture '" + f.name + "': l must be nonnegative");
    for (const auto& comp : f.components) {
        if (comp.sign != 1 && comp.sign != -1)
            throw FixtureError("fixture '" + f.name + "': sign must be +1 or -1");
        if (comp.tangent_weights.size() != static_cast<size_t>(f.d) ||
            comp.bundle_weights.size() != static_cast<size_t>(f.l))
            throw FixtureError("fixture '" + f.name + "': length mismatch");
        for (long n : comp.tangent_weights)
            if (n == 0) throw FixtureError("fixture '" + f.name + "': zero tangent weight");
    }
    return f;
}

PoleLattice fixture_pole_lattice(const ManifoldFixture& f) {
    std::vector<long> weights;
    for (const auto& comp : f.components)
        weights.insert(weights.end(), comp.tangent_weights.begin(),
                       comp.tangent_weights.end());
    return pole_lattice(weights);
}

GaussRat kappa_factor(int lambda, int l) {
    check_lambda(lambda);
    if (lambda != 1) return GaussRat(1);
    mpz_class two_l = 1;
    two_l <<= l;
    return GaussRat(mpq_class(two_l));
}

cplx lefschetz_eval(int lambda, const ManifoldFixture& f, cplx t, cplx tau, double eps) {
    check_lambda(lambda);
    if (!(tau.imag() > 0.0))
        throw std::domain_error("lefschetz_eval: tau not in upper half-plane");
    cplx total{0.0, 0.0};
    for (const auto& comp : f.components) total += component_term(lambda, comp, t, tau, eps);
    return kappa_factor(lambda, f.l).to_complex() * total;
}

QSeries<RatFun> lefschetz_qexpansion(int lambda, const ManifoldFixture& f, int order) {
    check_lambda(lambda);
    QSeries<RatFun> total(order, 0);

    for (const auto& comp : f.components) {
        // All z-denominators of the component sit in one product; the series
        // arithmetic itself stays in Laurent-polynomial coefficients.
        LaurentPoly den(1);
        LaurentPoly pref1(GaussRat(1));
        GaussRat pref23(1);
        const GaussRat four_i = GaussRat(4) * GaussRat::i();
        for (long n : comp.tangent_weights) {
            den *= detail::tangent_denominator(static_cast<int>(n));
            pref1 *= detail::local_prefactor_num(1, static_cast<int>(n));
            pref23 *= four_i;
        }

        QSeries<LaurentPoly> num(order, 0);
        for (int mu = 1; mu <= 3; ++mu) {
            QSeries<LaurentPoly> prod = QSeries<LaurentPoly>::one(order);
            for (long n : comp.tangent_weights)
                prod *= detail::local_bulk(mu, static_cast<int>(n), order);
            num += mu == 1 ? prod.scaled(pref1) : prod.scaled(LaurentPoly(pref23));
        }
        for (long m : comp.bundle_weights)
            num *= detail::bundle_series(lambda, static_cast<int>(m), order);

        GaussRat sign(comp.sign);
        for (int k = 0; k <= order; ++k)
            total.set_coeff(k, total.coeff(k) +
                                   RatFun::quotient(num.coeff(k).scaled(sign), den));
    }

    RatFun kappa{kappa_factor(lambda, f.l)};
    for (int k = 0; k <= order; ++k) total.set_coeff(k, total.coeff(k) * kappa);
    return total;
}

RigidityReport rigidity_check(const QSeries<RatFun>& series) {
    RigidityReport report;
    report.orders.reserve(static_cast<size_t>(series.order()) + 1);
    for (int k = 0; k <= series.order(); ++k) {
        OrderVerdict v;
        v.k = k;
        v.coefficient = series.coeff(k);
        v.is_laurent = v.coefficient.is_laurent();
        v.is_constant = v.coefficient.is_constant();
        if (v.is_constant) {
            v.constant_value = v.coefficient.constant_value();
            v.constant_is_integer = v.constant_value.is_integer();
        }
        report.all_laurent = report.all_laurent && v.is_laurent;
        report.all_constant = report.all_constant && v.is_constant;
        report.all_zero = report.all_zero && v.coefficient.is_zero();
        report.orders.push_back(std::move(v));
    }
    return report;
}

AnomalyReport anomaly_report(const ManifoldFixture& f) {
    AnomalyReport report;
    for (const auto& comp : f.components)
        report.components.push_back({component_sum_m2(comp), 0});
    for (const auto& c : report.components) {
        if (c.sum_m2 != 0) report.rigid_condition_met = false;
        if (c.sum_m2 != report.components.front().sum_m2) report.uniform_anomaly = false;
    }
    return report;
}

PeriodicityResidual periodicity_residual(int lambda, const ManifoldFixture& f, cplx t,
                                         cplx tau, long a, double eps) {
    check_lambda(lambda);
    if (a % 2 != 0) throw std::invalid_argument("periodicity_residual: a must be even");

    PeriodicityResidual out;
    cplx base = lefschetz_eval(lambda, f, t, tau, eps);
    cplx shifted_real = lefschetz_eval(lambda, f, t + static_cast<double>(a), tau, eps);
    cplx shifted_tau = lefschetz_eval(lambda, f, t + static_cast<double>(a) * tau, tau, eps);
    out.r1 = scaled_residual(shifted_real, base);
    out.r2 = scaled_residual(shifted_tau, base);

    // Predicted per-component lattice factors along the tau direction.
    cplx corrected{0.0, 0.0};
    for (const auto& comp : f.components) {
        long sm2 = component_sum_m2(comp);
        if (sm2 != 0) out.anomalous = true;
        cplx factor = std::exp(-2.0 * kPi * kI * static_cast<double>(a) *
                               static_cast<double>(sm2) *
                               (t + static_cast<double>(a) * tau / 2.0));
        corrected += factor * component_term(lambda, comp, t, tau, eps);
    }
    corrected *= kappa_factor(lambda, f.l).to_complex();
    out.r2_anomaly_corrected = scaled_residual(shifted_tau, corrected);
    return out;
}

double modular_image_residual(int lambda, const ManifoldFixture& f, cplx t, cplx tau,
                              Generator g, double eps) {
    check_lambda(lambda);
    if (g == Generator::T) {
        static constexpr int pair_of[4] = {0, 1, 3, 2};
        cplx lhs = lefschetz_eval(lambda, f, t, tau + 1.0, eps);
        cplx rhs = lefschetz_eval(pair_of[lambda], f, t, tau, eps);
        return scaled_residual(lhs, rhs);
    }

    static constexpr int pair_of[4] = {0, 2, 1, 3};
    int lambda_prime = pair_of[lambda];
    cplx lhs = lefschetz_eval(lambda, f, t / tau, -1.0 / tau, eps);

    cplx tau_d{1.0, 0.0};
    for (int k = 0; k < f.d; ++k) tau_d *= tau;
    cplx sum{0.0, 0.0};
    for (const auto& comp : f.components) {
        cplx anomaly = std::exp(kI * kPi * t * t *
                                static_cast<double>(component_sum_m2(comp)) / tau);
        sum += anomaly * component_term(lambda_prime, comp, t, tau, eps);
    }
    cplx rhs = kappa_factor(lambda, f.l).to_complex() * tau_d * sum;
    return scaled_residual(lhs, rhs);
}

}  // namespace rigiditylab
