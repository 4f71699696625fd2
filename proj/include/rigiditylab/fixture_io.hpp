#ifndef RIGIDITYLAB_FIXTURE_IO_HPP
#define RIGIDITYLAB_FIXTURE_IO_HPP

#include <complex>
#include <string>

#include <json.hpp>

#include "rigiditylab/lefschetz.hpp"

namespace rigiditylab {

// Complex numbers in "a+bi" text form with optional parts: "0.23", "1i",
// "-i", "0.4+0.7i", "1e-2-3i". Throws std::invalid_argument on anything else.
std::complex<double> parse_complex(const std::string& text);

// Deterministic "re+imi" rendering with the given significant digits.
std::string format_complex(std::complex<double> z, int digits = 15);

// Strict fixture document: exactly
//   {name, d, l, components: [{sign, tangent_weights, bundle_weights}...]}
// plus an optional top-level "comment". Unknown keys are rejected. All
// weights are integers (fixtures feed exact arithmetic; no floats).
ManifoldFixture parse_fixture_json(const std::string& text);
ManifoldFixture load_fixture(const std::string& path);
nlohmann::ordered_json fixture_to_json(const ManifoldFixture& f);

// Rigidity report document with deterministic field order.
nlohmann::ordered_json rigidity_report_json(const ManifoldFixture& f, int lambda,
                                            int order, const RigidityReport& report,
                                            const AnomalyReport& anomaly);
// CSV rows "k,verdict,constant" with verdict in {constant, laurent, non-laurent}.
std::string rigidity_report_csv(const RigidityReport& report);

}  // namespace rigiditylab

#endif
