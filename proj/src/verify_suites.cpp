#include "rigiditylab/verify_suites.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "rigiditylab/char_series.hpp"
#include "rigiditylab/theta.hpp"
#include "rigiditylab/transforms.hpp"

namespace rigiditylab {

namespace {

using cplx = std::complex<double>;

constexpr ThetaKind kKinds[4] = {ThetaKind::Theta, ThetaKind::Theta1, ThetaKind::Theta2,
                                 ThetaKind::Theta3};
constexpr const char* kKindNames[4] = {"theta", "theta1", "theta2", "theta3"};

void record(SuiteResult& result, double residual, const std::string& what) {
    if (residual > result.max_residual) {
        result.max_residual = residual;
        result.worst_case = what;
    }
}

// Random point with the documented sampling box: |Re v|, |Im v| <= 1 and
// Im tau in [0.5, 2].
ModuliPoint sample_point(SampleRng& rng) {
    return {{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)},
            {rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0)}};
}

}  // namespace

std::uint64_t SampleRng::next_u64() {
    // splitmix64; fixed algorithm keeps seeded output identical across
    // platforms and standard libraries.
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SampleRng::uniform(double lo, double hi) {
    double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

long SampleRng::uniform_int(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

SuiteResult run_translation_suite(std::uint64_t seed, int samples) {
    SuiteResult result;
    result.name = "translations";
    SampleRng rng(seed);
    for (int s = 0; s < samples; ++s) {
        ModuliPoint p = sample_point(rng);
        ThetaKind kind = kKinds[rng.uniform_int(0, 3)];
        const char* kind_name = kKindNames[static_cast<int>(kind)];

        record(result, translation_residual(kind, p, ShiftKind::ByOne),
               std::string(kind_name) + " v+1");
        record(result, translation_residual(kind, p, ShiftKind::ByTau),
               std::string(kind_name) + " v+tau");

        long k = rng.uniform_int(-3, 3);
        cplx lhs = theta_eval(kind, {p.v + static_cast<double>(k) * p.tau, p.tau}, 1e-13);
        cplx rhs = lattice_shift_factor(kind, k, p) * theta_eval(kind, p, 1e-13);
        record(result, scaled_residual(lhs, rhs),
               std::string(kind_name) + " v+" + std::to_string(k) + "tau");
        result.samples += 3;
    }
    return result;
}

SuiteResult run_modular_suite(std::uint64_t seed, int samples) {
    SuiteResult result;
    result.name = "modular";
    SampleRng rng(seed);
    constexpr ModularRow rows[5] = {ModularRow::Theta, ModularRow::Theta1,
                                    ModularRow::Theta2, ModularRow::Theta3,
                                    ModularRow::ThetaPrime};
    constexpr const char* row_names[5] = {"theta", "theta1", "theta2", "theta3",
                                          "theta'"};
    for (int s = 0; s < samples; ++s) {
        ModuliPoint p = sample_point(rng);
        int r = static_cast<int>(rng.uniform_int(0, 4));
        record(result, modular_residual(rows[r], p, Generator::S),
               std::string(row_names[r]) + " under S");
        record(result, modular_residual(rows[r], p, Generator::T),
               std::string(row_names[r]) + " under T");
        result.samples += 2;
    }
    return result;
}

SuiteResult run_jacobi_suite(std::uint64_t seed, int samples) {
    SuiteResult result;
    result.name = "jacobi";
    SampleRng rng(seed);
    std::vector<cplx> taus = {{0.0, 0.3}, {0.0, 0.8},  {0.0, 1.0},
                              {0.0, 2.0}, {0.4, 0.7},  {-0.3, 1.2}};
    for (int s = 0; s < samples; ++s)
        taus.push_back({rng.uniform(-1.0, 1.0), rng.uniform(0.4, 2.0)});
    for (cplx tau : taus) {
        cplx lhs = theta_prime0(tau, 1e-13);
        cplx rhs = std::numbers::pi * theta_eval(ThetaKind::Theta1, {0.0, tau}, 1e-13) *
                   theta_eval(ThetaKind::Theta2, {0.0, tau}, 1e-13) *
                   theta_eval(ThetaKind::Theta3, {0.0, tau}, 1e-13);
        record(result, std::abs(lhs - rhs) / std::abs(lhs),
               "tau = " + std::to_string(tau.real()) + "+" +
                   std::to_string(tau.imag()) + "i");
        ++result.samples;
    }
    return result;
}

SuiteResult run_chseries_suite(std::uint64_t seed, int samples) {
    SuiteResult result;
    result.name = "chseries";
    SampleRng rng(seed);
    constexpr FamilyKind families[6] = {FamilyKind::SymInt,       FamilyKind::ExtInt,
                                        FamilyKind::SymHalfPlus,  FamilyKind::SymHalfMinus,
                                        FamilyKind::ExtHalfPlus,  FamilyKind::ExtHalfMinus};
    constexpr const char* family_names[6] = {"S_int",  "L_int",  "S_half+",
                                             "S_half-", "L_half+", "L_half-"};
    const int order = 12;  // through q^6 on the half-integer grid
    for (int s = 0; s < samples; ++s) {
        // |c| <= 0.3, bounded away from 0 so the S_int sine factor is honest.
        // Im c stays small: coefficients of both routes grow like
        // e^{2 pi |Im c| k}, which would swamp an absolute comparison.
        double re = (rng.uniform_int(0, 1) ? 1.0 : -1.0) * rng.uniform(0.05, 0.29);
        cplx c(re, rng.uniform(-0.05, 0.05));
        for (int fi = 0; fi < 6; ++fi) {
            auto brute = witten_product_series(families[fi], c, order);
            auto closed = theta_ratio_series(families[fi], c, order);
            double max_err = 0.0;
            for (int k = 0; k <= order; ++k)
                max_err = std::max(max_err, std::abs(brute.coeff(k) - closed.coeff(k)));
            record(result, max_err, std::string(family_names[fi]) + " at c=" +
                                        std::to_string(re));
            ++result.samples;
        }
    }
    return result;
}

}  // namespace rigiditylab
