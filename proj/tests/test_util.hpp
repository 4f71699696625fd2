#ifndef RIGIDITYLAB_TEST_UTIL_HPP
#define RIGIDITYLAB_TEST_UTIL_HPP

#include <complex>
#include <string>

#include "rigiditylab/fixture_io.hpp"
#include "rigiditylab/qseries.hpp"
#include "rigiditylab/verify_suites.hpp"

namespace rltest {

inline std::string fixture_path(const std::string& name) {
    return std::string(RIGIDITYLAB_FIXTURE_DIR) + "/" + name + ".json";
}

inline rigiditylab::ManifoldFixture load(const std::string& name) {
    return rigiditylab::load_fixture(fixture_path(name));
}

// Evaluate an exact series at z = e^{pi i t}, q^{1/2} = e^{pi i tau}.
inline std::complex<double> eval_exact(const rigiditylab::QSeries<rigiditylab::RatFun>& s,
                                       std::complex<double> t, std::complex<double> tau) {
    const std::complex<double> ipi(0.0, std::acos(-1.0));
    std::complex<double> z = std::exp(ipi * t);
    return rigiditylab::evaluate_qseries(
        s, [&](const rigiditylab::RatFun& r) { return r.eval(z); }, std::exp(ipi * tau),
        std::exp(ipi * tau / 4.0));
}

// Random GaussRat with numerators/denominators in a small range.
inline rigiditylab::GaussRat random_gauss(rigiditylab::SampleRng& rng) {
    return rigiditylab::GaussRat::make(rng.uniform_int(-12, 12), rng.uniform_int(1, 7),
                                       rng.uniform_int(-12, 12), rng.uniform_int(1, 7));
}

inline rigiditylab::LaurentPoly random_laurent(rigiditylab::SampleRng& rng,
                                               int max_terms = 4) {
    rigiditylab::LaurentPoly p;
    long terms = rng.uniform_int(0, max_terms);
    for (long i = 0; i < terms; ++i)
        p += rigiditylab::LaurentPoly::monomial(random_gauss(rng),
                                                static_cast<int>(rng.uniform_int(-4, 4)));
    return p;
}

}  // namespace rltest

#endif
