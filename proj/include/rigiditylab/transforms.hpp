#ifndef RIGIDITYLAB_TRANSFORMS_HPP
#define RIGIDITYLAB_TRANSFORMS_HPP

#include <set>
#include <vector>

#include "rigiditylab/theta.hpp"

namespace rigiditylab {

// Integer matrix [a,b;c,d] with det = 1, acting on C x H on the left by
// g.(v,tau) = (v/(c tau + d), (a tau + b)/(c tau + d)).
struct SL2Z {
    long a = 1, b = 0, c = 0, d = 1;

    long det() const { return a * d - b * c; }

    static SL2Z identity() { return {1, 0, 0, 1}; }
    static SL2Z S() { return {0, -1, 1, 0}; }
    static SL2Z T() { return {1, 1, 0, 1}; }

    // Matrix product; (g*h).p == g.(h.p).
    friend SL2Z operator*(const SL2Z& g, const SL2Z& h) {
        return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
    }
    friend bool operator==(const SL2Z&, const SL2Z&) = default;
};

enum class Generator { S, T };

// Throws std::domain_error if det(g) != 1 or Im(tau) <= 0.
ModuliPoint modular_act(const SL2Z& g, const ModuliPoint& p);

enum class ShiftKind { ByOne, ByTau };

// Scale-aware residual |lhs - rhs| / (1 + |lhs| + |rhs|); small iff the two
// sides agree to relative working precision, regardless of their size.
double scaled_residual(std::complex<double> lhs, std::complex<double> rhs);

// Residual of the one-step translation laws
//   theta(v+1)   = -theta(v),      theta(v+tau)   = -q^{-1/2} e^{-2 pi i v} theta(v),
//   theta_1(v+1) = -theta_1(v),    theta_1(v+tau) = +q^{-1/2} e^{-2 pi i v} theta_1(v),
//   theta_2(v+1) = +theta_2(v),    theta_2(v+tau) = -q^{-1/2} e^{-2 pi i v} theta_2(v),
//   theta_3(v+1) = +theta_3(v),    theta_3(v+tau) = +q^{-1/2} e^{-2 pi i v} theta_3(v).
double translation_residual(ThetaKind kind, const ModuliPoint& p, ShiftKind shift,
                            double eps = 1e-13);

// Multiplier M(k) with theta_kind(v + k tau, tau) = M(k) theta_kind(v, tau):
// M(k) = s^k e^{-2 pi i k (v + k tau / 2)}, s = -1 for Theta and Theta2,
// s = +1 for Theta1 and Theta3.
std::complex<double> lattice_shift_factor(ThetaKind kind, long k, const ModuliPoint& p);

// Rows of the S/T transformation table, including the theta'(0,tau) row.
enum class ModularRow { Theta, Theta1, Theta2, Theta3, ThetaPrime };

// Residual of the corresponding table row, using the principal branch of
// sqrt(tau/i) (Re(tau/i) > 0 on H, so the cut is never crossed).
double modular_residual(ModularRow row, const ModuliPoint& p, Generator g,
                        double eps = 1e-13);
double modular_residual(ThetaKind kind, const ModuliPoint& p, Generator g,
                        double eps = 1e-13);

// Deterministic completion of a coprime bottom row (c,d) to [a,b;c,d] with
// det = 1: extended Euclid, then the representative with smallest |a|,
// breaking ties by smallest |b|, then by a >= 0.
SL2Z bezout_complete(long c, long d);

// Candidate pole denominators: every pole of a local factor built from the
// given tangent weights lies in (1/n)(Z + tau Z) for some n in the set.
struct PoleLattice {
    std::set<long> denominators;
    bool empty() const { return denominators.empty(); }
};

PoleLattice pole_lattice(const std::vector<long>& weights);

}  // namespace rigiditylab

#endif
