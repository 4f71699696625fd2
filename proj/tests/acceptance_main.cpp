// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Tolerances are pinned here, not configurable.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "rigiditylab/char_series.hpp"
#include "rigiditylab/fixture_io.hpp"
#include "rigiditylab/lefschetz.hpp"
#include "rigiditylab/theta.hpp"
#include "rigiditylab/transforms.hpp"
#include "rigiditylab/verify_suites.hpp"

using namespace rigiditylab;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 2026;
int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %2d  %-28s %s\n", ok ? "PASS" : "FAIL", criterion,
                name.c_str(), detail.c_str());
    if (!ok) ++failures;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

ManifoldFixture fixture(const std::string& name) {
    return load_fixture(std::string(RIGIDITYLAB_FIXTURE_DIR) + "/" + name + ".json");
}

const std::array<const char*, 6> kAllFixtures = {"s2",    "s4",       "s6",
                                                 "s2xs2", "onepoint", "anomalous"};
const std::array<const char*, 4> kRigidFixtures = {"s2", "s4", "s6", "s2xs2"};

// 1. Jacobi identity on the fixed tau grid.
void criterion_jacobi() {
    const std::vector<cplx> taus = {{0.0, 0.3}, {0.0, 0.8}, {0.0, 1.0},
                                    {0.0, 2.0}, {0.4, 0.7}, {-0.3, 1.2}};
    double worst = 0.0;
    for (cplx tau : taus) {
        cplx lhs = theta_prime0(tau, 1e-13);
        cplx rhs = kPi * theta_eval(ThetaKind::Theta1, {0.0, tau}, 1e-13) *
                   theta_eval(ThetaKind::Theta2, {0.0, tau}, 1e-13) *
                   theta_eval(ThetaKind::Theta3, {0.0, tau}, 1e-13);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    report(1, "jacobi identity", worst < 1e-10, "max " + sci(worst) + " < 1e-10");
}

// 2. Translation and general lattice-shift laws, 200 seeded samples.
void criterion_translations() {
    SuiteResult suite = run_translation_suite(kSeed, 200);
    report(2, "translation laws", suite.max_residual < 1e-10,
           "max " + sci(suite.max_residual) + " < 1e-10 (" + suite.worst_case + ")");
}

// 3. All ten S/T table rows, 200 seeded samples.
void criterion_modular_table() {
    SuiteResult suite = run_modular_suite(kSeed, 200);
    report(3, "modular table", suite.max_residual < 1e-9,
           "max " + sci(suite.max_residual) + " < 1e-9 (" + suite.worst_case + ")");
}

// 4. The six tensor-product identities through q^6, 10 seeded roots.
void criterion_ch_identities() {
    SuiteResult suite = run_chseries_suite(kSeed, 10);
    report(4, "tensor-product identities", suite.max_residual < 1e-9,
           "max coeff err " + sci(suite.max_residual) + " < 1e-9");
}

// 5. Exact rigidity of the antisymmetric fixtures through q^4.
void criterion_exact_rigidity() {
    bool ok = true;
    std::string detail = "all orders constant 0 through q^4";
    for (const char* name : kRigidFixtures) {
        ManifoldFixture f = fixture(name);
        for (int lambda : {1, 2, 3}) {
            RigidityReport rep = rigidity_check(lefschetz_qexpansion(lambda, f, 8));
            if (!(rep.all_constant && rep.all_zero)) {
                ok = false;
                detail = std::string(name) + " lambda=" + std::to_string(lambda) +
                         " not constant 0";
            }
        }
    }
    report(5, "exact rigidity", ok, detail);
}

// 6. Negative control: onepoint keeps a z-denominator and the CLI says so.
void criterion_negative_control() {
    ManifoldFixture one = fixture("onepoint");
    RigidityReport rep = rigidity_check(lefschetz_qexpansion(2, one, 4));
    bool non_laurent = !rep.orders[0].is_laurent;

    std::string cmd = std::string(RIGIDITYLAB_CLI_PATH) + " rigidity --fixture " +
                      RIGIDITYLAB_FIXTURE_DIR + "/onepoint.json --lambda 2 --K 2 " +
                      "> /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    int code = WEXITSTATUS(status);

    report(6, "negative control", non_laurent && code == 1,
           std::string("order 0 non-laurent=") + (non_laurent ? "yes" : "no") +
               ", cmd_rigidity exit " + std::to_string(code));
}

// 7. Double periodicity with a = 2.
void criterion_periodicity() {
    SampleRng rng(kSeed);
    double worst_r1 = 0.0, worst_r2 = 0.0;
    bool ok = true;
    for (const char* name : kAllFixtures) {
        ManifoldFixture f = fixture(name);
        bool rigid = anomaly_report(f).rigid_condition_met;
        for (int lambda : {1, 2, 3}) {
            cplx t(rng.uniform(0.15, 0.45), 0.0);
            cplx tau(rng.uniform(-0.2, 0.2), rng.uniform(0.85, 1.15));
            auto r = periodicity_residual(lambda, f, t, tau, 2);
            worst_r1 = std::max(worst_r1, r.r1);
            if (rigid) worst_r2 = std::max(worst_r2, r.r2);
        }
    }
    ok = worst_r1 < 1e-10 && worst_r2 < 1e-8;

    // The anomalous fixture fails plainly and matches the predicted factor.
    ManifoldFixture anomalous = fixture("anomalous");
    auto r = periodicity_residual(2, anomalous, 0.27, cplx(0.1, 0.95), 2);
    ok = ok && r.anomalous && r.r2 > 1e-3 && r.r2_anomaly_corrected < 1e-8;

    report(7, "double periodicity", ok,
           "max r1 " + sci(worst_r1) + " < 1e-10, max rigid r2 " + sci(worst_r2) +
               " < 1e-8, anomalous r2 " + sci(r.r2) + " > 1e-3 corrected " +
               sci(r.r2_anomaly_corrected) + " < 1e-8");
}

// 8. S/T interchange on a 5x5 grid off the pole lattice.
void criterion_modular_interchange() {
    const std::array<double, 5> ts = {0.14, 0.22, 0.30, 0.38, 0.46};
    const cplx tau0(0.1, 0.85), tau1(-0.2, 1.25);
    double worst_t = 0.0, worst_s = 0.0;
    for (const char* name : kAllFixtures) {
        ManifoldFixture f = fixture(name);
        for (int lambda : {1, 2, 3})
            for (double t : ts)
                for (int j = 0; j < 5; ++j) {
                    cplx tau = tau0 + (tau1 - tau0) * (static_cast<double>(j) / 4.0);
                    worst_t = std::max(
                        worst_t, modular_image_residual(lambda, f, t, tau, Generator::T));
                    worst_s = std::max(
                        worst_s, modular_image_residual(lambda, f, t, tau, Generator::S));
                }
    }
    report(8, "modular interchange", worst_t < 1e-10 && worst_s < 1e-8,
           "max T " + sci(worst_t) + " < 1e-10, max S " + sci(worst_s) + " < 1e-8");
}

// 9. Cross-backend coherence at order q^{13/2}. The exact series is expanded
// to half-index 20 so its own tail sits far below the asserted scale (the
// q-coefficients grow with the level), and Im tau is kept moderate so the
// tolerance stays above the double-precision floor of the numeric route.
void criterion_cross_backend() {
    const int claimed = 12, order = 20;
    SampleRng rng(kSeed);
    double worst = 0.0;
    bool ok = true;
    for (const char* name : kAllFixtures) {
        ManifoldFixture f = fixture(name);
        for (int lambda : {1, 2, 3}) {
            auto series = lefschetz_qexpansion(lambda, f, order);
            for (int s = 0; s < 10; ++s) {
                cplx t(rng.uniform(0.15, 0.45), 0.0);
                cplx tau(rng.uniform(-0.2, 0.2), rng.uniform(0.72, 0.76));
                cplx numeric = lefschetz_eval(lambda, f, t, tau, 1e-15);
                cplx z = std::exp(cplx(0.0, kPi) * t);
                cplx exact = evaluate_qseries(
                    series, [&](const RatFun& r) { return r.eval(z); },
                    std::exp(cplx(0.0, kPi) * tau), std::exp(cplx(0.0, kPi) * tau / 4.0));
                double qh = std::exp(-kPi * tau.imag());
                double tol = 2.0 * std::pow(qh, claimed + 1) * (1.0 + std::abs(numeric));
                double err = std::abs(exact - numeric);
                if (err > tol) ok = false;
                worst = std::max(worst, err / tol);
            }
        }
    }
    report(9, "cross-backend coherence", ok,
           "max err/tol " + sci(worst) + " at tol 2|q|^{13/2}(1+|L|)");
}

// 10. Pole lattice soundness and Bezout completion.
void criterion_pole_lattice() {
    cplx tau(0.0, 1.0);
    bool ok = true;
    int lattice_points = 0;
    for (long n : {1L, 2L})
        for (long j = -5; j <= 4; ++j) {
            double t = (static_cast<double>(j) + 1e-8) / static_cast<double>(n);
            cplx val = theta_eval(ThetaKind::Theta, {static_cast<double>(n) * t, tau});
            ok = ok && std::abs(val) < 1e-6;
            ++lattice_points;
        }
    SampleRng rng(kSeed);
    for (int s = 0; s < 20; ++s) {
        double t = rng.uniform(0.1, 0.4);
        ok = ok && std::abs(theta_eval(ThetaKind::Theta, {t, tau})) > 1e-3;
    }

    int bezout_checked = 0;
    while (bezout_checked < 50) {
        long c = rng.uniform_int(-40, 40), d = rng.uniform_int(-40, 40);
        long x = std::labs(c), y = std::labs(d);
        while (y) {
            long r = x % y;
            x = y;
            y = r;
        }
        if (x != 1) continue;
        if (bezout_complete(c, d).det() != 1) ok = false;
        ++bezout_checked;
    }
    report(10, "pole lattice + bezout", ok,
           std::to_string(lattice_points) + " lattice points, 20 off-lattice, " +
               std::to_string(bezout_checked) + " coprime pairs");
}

}  // namespace

int main() {
    criterion_jacobi();
    criterion_translations();
    criterion_modular_table();
    criterion_ch_identities();
    criterion_exact_rigidity();
    criterion_negative_control();
    criterion_periodicity();
    criterion_modular_interchange();
    criterion_cross_backend();
    criterion_pole_lattice();
    std::printf("%d of 10 criteria failed\n", failures);
    return failures;
}
