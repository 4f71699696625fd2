#ifndef RIGIDITYLAB_LEFSCHETZ_HPP
#define RIGIDITYLAB_LEFSCHETZ_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigiditylab/qseries.hpp"
#include "rigiditylab/theta_series.hpp"
#include "rigiditylab/transforms.hpp"

namespace rigiditylab {

// Isolated fixed point: tangent rotation speeds n_i (all nonzero), bundle
// rotation speeds m_j, and an orientation sign.
struct FixedPointComponent {
    std::vector<long> tangent_weights;
    std::vector<long> bundle_weights;
    int sign = +1;
};

// Fixed-point data of a circle action on a 2d-manifold with a rank-2l
// equivariant bundle.
struct ManifoldFixture {
    std::string name;
    int d = 0;
    int l = 0;
    std::vector<FixedPointComponent> components;
};

class FixtureError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation was refused because some theta denominator came within 1e-13
// of a lattice zero.
class PoleProximityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checks all structural invariants; throws FixtureError with a descriptive
// message, otherwise returns the fixture unchanged.
ManifoldFixture validate_fixture(const ManifoldFixture& f);

// Pole candidates of the fixture's local factors.
PoleLattice fixture_pole_lattice(const ManifoldFixture& f);

// kappa_lambda = 2^l for lambda = 1, else 1.
GaussRat kappa_factor(int lambda, int l);

// Numerical Lefschetz number
//   L_lambda(t,tau) = kappa sum_alpha sign_alpha
//       (sum_mu prod_i F_mu(n_i t)) prod_j G_lambda(m_j t).
// Throws PoleProximityError near the pole lattice, std::domain_error for
// Im(tau) <= 0 or lambda outside {1,2,3}.
std::complex<double> lefschetz_eval(int lambda, const ManifoldFixture& f,
                                    std::complex<double> t, std::complex<double> tau,
                                    double eps = 1e-13);

// Exact q-expansion of the same quantity; coefficients are canonical
// rational functions in z = e^{pi i t}.
QSeries<RatFun> lefschetz_qexpansion(int lambda, const ManifoldFixture& f, int order);

struct OrderVerdict {
    int k = 0;  // coefficient of q^{k/2}
    RatFun coefficient;
    bool is_laurent = false;
    bool is_constant = false;
    GaussRat constant_value;     // meaningful iff is_constant
    bool constant_is_integer = false;
};

struct RigidityReport {
    std::vector<OrderVerdict> orders;
    bool all_laurent = true;
    bool all_constant = true;
    bool all_zero = true;
};

// Per-order holomorphicity/constancy verdicts: "constant" means a Laurent
// polynomial supported at z^0 only.
RigidityReport rigidity_check(const QSeries<RatFun>& series);

struct ComponentAnomaly {
    long sum_m2 = 0;
    long sum_mb = 0;  // identically 0 at isolated fixed points
};

struct AnomalyReport {
    std::vector<ComponentAnomaly> components;
    bool rigid_condition_met = true;  // every sum m_j^2 vanishes
    bool uniform_anomaly = true;      // all components share one sum m_j^2
};

AnomalyReport anomaly_report(const ManifoldFixture& f);

struct PeriodicityResidual {
    double r1 = 0.0;  // |L(t+a) - L(t)|, scale-aware
    double r2 = 0.0;  // |L(t+a tau) - L(t)|, scale-aware
    // Residual after multiplying each component by its predicted lattice
    // factor exp(-2 pi i a sum(m^2) (t + a tau/2)); equals r2 when the
    // fixture is anomaly-free.
    double r2_anomaly_corrected = 0.0;
    bool anomalous = false;
};

// a must be even.
PeriodicityResidual periodicity_residual(int lambda, const ManifoldFixture& f,
                                         std::complex<double> t, std::complex<double> tau,
                                         long a, double eps = 1e-13);

// Residual of the S/T image law:
//   T: L_1(t,tau+1) = L_1(t,tau), L_2 <-> L_3;
//   S: L_lambda(t/tau, -1/tau) = kappa_lambda tau^d
//        sum_alpha sign_alpha e^{i pi t^2 sum(m^2)/tau} (local term of lambda'),
//      lambda' = 2,1,3 for lambda = 1,2,3.
double modular_image_residual(int lambda, const ManifoldFixture& f,
                              std::complex<double> t, std::complex<double> tau,
                              Generator g, double eps = 1e-13);

}  // namespace rigiditylab

#endif
