#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rigiditylab/transforms.hpp"
#include "rigiditylab/verify_suites.hpp"
#include "test_util.hpp"

using namespace rigiditylab;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kIm{0.0, 1.0};
}  // namespace

TEST_CASE("modular action basics") {
    ModuliPoint p{{0.3, 0.1}, {0.2, 1.4}};

    ModuliPoint id = modular_act(SL2Z::identity(), p);
    CHECK(std::abs(id.v - p.v) == 0.0);
    CHECK(std::abs(id.tau - p.tau) == 0.0);

    ModuliPoint s = modular_act(SL2Z::S(), p);
    CHECK(std::abs(s.v - p.v / p.tau) < 1e-15);
    CHECK(std::abs(s.tau - (-1.0 / p.tau)) < 1e-15);
    CHECK(s.tau.imag() > 0.0);

    ModuliPoint t = modular_act(SL2Z::T(), p);
    CHECK(std::abs(t.v - p.v) == 0.0);
    CHECK(std::abs(t.tau - (p.tau + 1.0)) < 1e-15);

    CHECK_THROWS_AS(modular_act({1, 0, 0, 2}, p), std::domain_error);
    CHECK_THROWS_AS(modular_act(SL2Z::S(), {p.v, cplx(0.0, -1.0)}), std::domain_error);
}

TEST_CASE("modular action composes as a left action") {
    SampleRng rng(61);
    for (int s = 0; s < 30; ++s) {
        SL2Z g = SL2Z::identity(), h = SL2Z::identity();
        for (int k = 0; k < 4; ++k) {
            g = g * (rng.uniform_int(0, 1) ? SL2Z::S() : SL2Z::T());
            h = h * (rng.uniform_int(0, 1) ? SL2Z::S() : SL2Z::T());
        }
        ModuliPoint p{{rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3)},
                      {rng.uniform(-0.5, 0.5), rng.uniform(0.8, 1.5)}};
        ModuliPoint lhs = modular_act(g * h, p);
        ModuliPoint rhs = modular_act(g, modular_act(h, p));
        CHECK(std::abs(lhs.v - rhs.v) < 1e-12);
        CHECK(std::abs(lhs.tau - rhs.tau) < 1e-12);
    }
}

TEST_CASE("translation residuals") {
    ModuliPoint p{{0.27, 0.12}, {0.3, 0.9}};
    CHECK(translation_residual(ThetaKind::Theta2, p, ShiftKind::ByOne) < 1e-12);
    CHECK(translation_residual(ThetaKind::Theta, p, ShiftKind::ByOne) < 1e-12);
    CHECK(translation_residual(ThetaKind::Theta, p, ShiftKind::ByTau) < 1e-12);

    SuiteResult suite = run_translation_suite(2026, 200);
    CHECK(suite.max_residual < 1e-10);
}

TEST_CASE("lattice shift factors") {
    ModuliPoint p{{0.21, -0.05}, {0.1, 1.2}};
    CHECK(std::abs(lattice_shift_factor(ThetaKind::Theta3, 0, p) - 1.0) == 0.0);

    cplx expected = -std::exp(-kIm * kPi * p.tau) * std::exp(-2.0 * kPi * kIm * p.v);
    CHECK(std::abs(lattice_shift_factor(ThetaKind::Theta, 1, p) - expected) <=
          1e-13 * (1.0 + std::abs(expected)));

    SampleRng rng(67);
    for (int s = 0; s < 30; ++s) {
        ModuliPoint q{{rng.uniform(-1.0, 1.0), rng.uniform(-0.5, 0.5)},
                      {rng.uniform(-0.5, 0.5), rng.uniform(0.5, 1.5)}};
        long k = rng.uniform_int(-3, 3);
        ThetaKind kind = static_cast<ThetaKind>(rng.uniform_int(0, 3));
        cplx forward = lattice_shift_factor(kind, k, q);
        cplx back = lattice_shift_factor(
            kind, -k, {q.v + static_cast<double>(k) * q.tau, q.tau});
        CHECK(std::abs(forward * back - 1.0) <= 1e-11 * (1.0 + std::abs(forward * back)));
    }
}

TEST_CASE("modular residual table rows") {
    ModuliPoint p{{0.17, 0.06}, {0.25, 1.05}};
    CHECK(modular_residual(ModularRow::Theta3, p, Generator::T) < 1e-12);
    CHECK(modular_residual(ModularRow::Theta2, p, Generator::T) < 1e-12);
    CHECK(modular_residual(ModularRow::ThetaPrime, p, Generator::S) < 1e-11);
    CHECK(modular_residual(ThetaKind::Theta, p, Generator::S) < 1e-11);

    SuiteResult suite = run_modular_suite(2026, 200);
    CHECK(suite.max_residual < 1e-9);
}

TEST_CASE("bezout completion") {
    CHECK(bezout_complete(0, 1) == SL2Z::identity());
    CHECK(bezout_complete(1, 0) == SL2Z::S());
    SL2Z g23 = bezout_complete(2, 3);
    CHECK(g23.a == 1);
    CHECK(g23.b == 1);
    CHECK(g23.det() == 1);
    CHECK_THROWS_AS(bezout_complete(2, 4), std::domain_error);

    SampleRng rng(71);
    int done = 0;
    while (done < 50) {
        long c = rng.uniform_int(-30, 30), d = rng.uniform_int(-30, 30);
        long x = std::labs(c), y = std::labs(d);
        while (y) {
            long t = x % y;
            x = y;
            y = t;
        }
        if (x != 1) continue;
        SL2Z g = bezout_complete(c, d);
        CHECK(g.det() == 1);
        CHECK(g.c == c);
        CHECK(g.d == d);
        CHECK(bezout_complete(c, d) == g);  // deterministic
        ++done;
    }
}

TEST_CASE("pole lattice") {
    CHECK(pole_lattice({}).empty());
    CHECK(pole_lattice({1}).denominators == std::set<long>{1});
    CHECK(pole_lattice({2, -2}).denominators == std::set<long>{2});
    CHECK(pole_lattice({1, -2, 3}).denominators == (std::set<long>{1, 2, 3}));
    CHECK_THROWS_AS(pole_lattice({1, 0}), std::domain_error);
}

TEST_CASE("pole lattice soundness at tau = i") {
    cplx tau(0.0, 1.0);
    // theta(n t, tau) vanishes when t sits on (1/n)(Z + tau Z); nudged real
    // lattice points must give tiny values.
    int count = 0;
    for (long n : {1L, 2L}) {
        for (long j = -5; j <= 4; ++j) {
            double t = (static_cast<double>(j) + 1e-8) / static_cast<double>(n);
            cplx val = theta_eval(ThetaKind::Theta, {static_cast<double>(n) * t, tau});
            CHECK(std::abs(val) < 1e-6);
            ++count;
        }
    }
    CHECK(count == 20);

    SampleRng rng(73);
    for (int s = 0; s < 20; ++s) {
        double t = rng.uniform(0.1, 0.4);  // well off Z + tau Z
        cplx val = theta_eval(ThetaKind::Theta, {t, tau});
        CHECK(std::abs(val) > 1e-3);
    }
}
