#ifndef RIGIDITYLAB_VERIFY_SUITES_HPP
#define RIGIDITYLAB_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>

namespace rigiditylab {

// Seeded, deterministic residual suites shared by the CLI `verify`
// subcommand and the acceptance tests.
struct SuiteResult {
    std::string name;
    size_t samples = 0;
    double max_residual = 0.0;
    std::string worst_case;  // human-readable description of the max
    bool passed(double tol) const { return max_residual < tol; }
};

// Uniform doubles from a seeded 64-bit generator; implementation-independent
// mapping so identical seeds give identical streams everywhere.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next_u64();
    double uniform(double lo, double hi);
    long uniform_int(long lo, long hi);  // inclusive bounds

private:
    std::uint64_t state_;
};

// One-step translation laws plus the general lattice-shift laws, k = -3..3.
SuiteResult run_translation_suite(std::uint64_t seed, int samples);
// All ten rows of the S/T table (four kinds x {S,T} and the two theta' rows).
SuiteResult run_modular_suite(std::uint64_t seed, int samples);
// theta'(0,tau) = pi theta_1 theta_2 theta_3 (0,tau) on the fixed tau grid,
// plus `samples` extra random tau values.
SuiteResult run_jacobi_suite(std::uint64_t seed, int samples);
// The six infinite-tensor-product identities: brute-force expansion vs the
// theta closed forms through q^6, max-coefficient error over `samples`
// seeded roots c with |c| <= 0.3.
SuiteResult run_chseries_suite(std::uint64_t seed, int samples);

}  // namespace rigiditylab

#endif
