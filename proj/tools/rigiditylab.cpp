// rigiditylab: evaluate Jacobi theta functions, verify their transformation
// laws, and run exact rigidity / modularity reports for isolated-fixed-point
// circle-action fixtures.
//
// Exit codes: 0 = pass, 1 = mathematical verdict failed, 2 = usage or parse
// error, 3 = fixture/file error.

#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rigiditylab/char_series.hpp"
#include "rigiditylab/fixture_io.hpp"
#include "rigiditylab/lefschetz.hpp"
#include "rigiditylab/parallel.hpp"
#include "rigiditylab/theta.hpp"
#include "rigiditylab/transforms.hpp"
#include "rigiditylab/verify_suites.hpp"

namespace {

using namespace rigiditylab;
using cplx = std::complex<double>;

constexpr int kExitPass = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFixture = 3;

ThetaKind parse_kind(const std::string& s) {
    if (s == "t") return ThetaKind::Theta;
    if (s == "t1") return ThetaKind::Theta1;
    if (s == "t2") return ThetaKind::Theta2;
    if (s == "t3") return ThetaKind::Theta3;
    throw std::invalid_argument("unknown theta kind '" + s + "' (use t, t1, t2, t3)");
}

std::string format_residual(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", r);
    return buf;
}

int cmd_theta(const std::string& kind, const std::string& v, const std::string& tau,
              double eps) {
    ModuliPoint p{parse_complex(v), parse_complex(tau)};
    std::cout << format_complex(theta_eval(parse_kind(kind), p, eps)) << "\n";
    return kExitPass;
}

int cmd_verify(const std::string& suite, int samples, std::uint64_t seed, double tol) {
    SuiteResult result;
    if (suite == "translations") {
        result = run_translation_suite(seed, samples);
    } else if (suite == "modular") {
        result = run_modular_suite(seed, samples);
    } else if (suite == "jacobi") {
        result = run_jacobi_suite(seed, samples);
    } else {
        result = run_chseries_suite(seed, samples);
    }
    std::cout << "suite=" << result.name << " samples=" << result.samples
              << " max_residual=" << format_residual(result.max_residual)
              << " tol=" << format_residual(tol) << " worst=\"" << result.worst_case
              << "\"\n";
    std::cout << (result.passed(tol) ? "PASS" : "FAIL") << "\n";
    return result.passed(tol) ? kExitPass : kExitVerdictFail;
}

int cmd_rigidity(const std::string& path, int lambda, int K, const std::string& format) {
    ManifoldFixture fixture = load_fixture(path);
    QSeries<RatFun> series = lefschetz_qexpansion(lambda, fixture, 2 * K);
    RigidityReport report = rigidity_check(series);
    AnomalyReport anomaly = anomaly_report(fixture);
    if (format == "csv") {
        std::cout << rigidity_report_csv(report);
    } else {
        std::cout << rigidity_report_json(fixture, lambda, 2 * K, report, anomaly).dump(2)
                  << "\n";
    }
    return report.all_constant ? kExitPass : kExitVerdictFail;
}

int cmd_qexpand(const std::string& path, int lambda, int K, const std::string& format) {
    ManifoldFixture fixture = load_fixture(path);
    QSeries<RatFun> series = lefschetz_qexpansion(lambda, fixture, 2 * K);
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["fixture"] = fixture.name;
        doc["lambda"] = lambda;
        doc["K"] = series.order();
        doc["coefficients"] = nlohmann::ordered_json::array();
        for (int k = 0; k <= series.order(); ++k)
            doc["coefficients"].push_back(series.coeff(k).str());
        std::cout << doc.dump(2) << "\n";
    } else {
        // One line per retained half-order: "k=<k>: <coefficient of q^{k/2}>".
        for (int k = 0; k <= series.order(); ++k)
            std::cout << "k=" << k << ": " << series.coeff(k).str() << "\n";
    }
    return kExitPass;
}

int cmd_modularity(const std::string& path, int lambda_opt, const std::string& gen,
                   const std::string& t0s, const std::string& t1s, int nt,
                   const std::string& tau0s, const std::string& tau1s, int ntau,
                   double tol) {
    ManifoldFixture fixture = load_fixture(path);
    Generator g = gen == "S" ? Generator::S : Generator::T;
    cplx t0 = parse_complex(t0s), t1 = parse_complex(t1s);
    cplx tau0 = parse_complex(tau0s), tau1 = parse_complex(tau1s);
    // Linear interpolation keeps Im(tau) positive iff both endpoints are.
    if (!(tau0.imag() > 0.0) || !(tau1.imag() > 0.0))
        throw std::domain_error("modularity: tau grid not in upper half-plane");
    std::vector<int> lambdas = lambda_opt == 0 ? std::vector<int>{1, 2, 3}
                                               : std::vector<int>{lambda_opt};
    AnomalyReport anomaly = anomaly_report(fixture);

    struct Row {
        cplx t, tau;
        int lambda;
        std::optional<double> residual;  // empty: pole proximity, skipped
    };
    std::vector<Row> rows;
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < ntau; ++j) {
            double si = nt == 1 ? 0.0 : static_cast<double>(i) / (nt - 1);
            double sj = ntau == 1 ? 0.0 : static_cast<double>(j) / (ntau - 1);
            for (int lam : lambdas)
                rows.push_back({t0 + si * (t1 - t0), tau0 + sj * (tau1 - tau0), lam, {}});
        }

    parallel_for_indexed(rows.size(), [&](size_t idx) {
        Row& row = rows[idx];
        try {
            row.residual =
                modular_image_residual(row.lambda, fixture, row.t, row.tau, g, 1e-13);
        } catch (const PoleProximityError&) {
            row.residual.reset();
        }
    });

    std::cout << "# fixture: " << fixture.name << "\n";
    std::cout << "# g: " << gen << "\n";
    std::cout << "# anomaly: rigid_condition_met="
              << (anomaly.rigid_condition_met ? "true" : "false")
              << " uniform_anomaly=" << (anomaly.uniform_anomaly ? "true" : "false")
              << "\n";
    std::cout << "t,tau,lambda,residual\n";
    double max_residual = 0.0;
    size_t evaluated = 0;
    for (const Row& row : rows) {
        std::cout << format_complex(row.t, 9) << "," << format_complex(row.tau, 9) << ","
                  << row.lambda << ",";
        if (row.residual) {
            std::cout << format_residual(*row.residual) << "\n";
            max_residual = std::max(max_residual, *row.residual);
            ++evaluated;
        } else {
            std::cout << "skipped\n";
        }
    }
    std::cout << "# max_residual: " << format_residual(max_residual) << " over "
              << evaluated << " points, tol " << format_residual(tol) << "\n";
    return max_residual < tol ? kExitPass : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta-function identities and equivariant rigidity reports"};
    app.require_subcommand(1);

    // theta
    auto* theta = app.add_subcommand("theta", "evaluate a theta function");
    std::string kind, v_str, tau_str;
    double eps = 1e-12;
    theta->add_option("--kind", kind, "t, t1, t2 or t3")->required();
    theta->add_option("--v", v_str, "first argument, e.g. 0.3+0.1i")->required();
    theta->add_option("--tau", tau_str, "modulus, Im tau > 0")->required();
    theta->add_option("--eps", eps, "tail tolerance");

    // verify
    auto* verify = app.add_subcommand("verify", "run a residual suite");
    std::string suite;
    int samples = 200;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    verify->add_option("--suite", suite, "translations, modular, jacobi or chseries")
        ->required()
        ->check(CLI::IsMember({"translations", "modular", "jacobi", "chseries"}));
    verify->add_option("--samples", samples, "sample count");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--tol", tol, "pass/fail tolerance");

    // rigidity
    auto* rigidity = app.add_subcommand("rigidity", "exact per-order rigidity report");
    std::string fixture_path, format = "json";
    int lambda = 2, K = 4;
    rigidity->add_option("--fixture", fixture_path, "fixture JSON path")->required();
    rigidity->add_option("--lambda", lambda, "1, 2 or 3")->check(CLI::Range(1, 3));
    rigidity->add_option("--K", K, "expand through q^K");
    rigidity->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // qexpand
    auto* qexpand = app.add_subcommand("qexpand", "print exact q-expansion coefficients");
    std::string qx_path, qx_format = "text";
    int qx_lambda = 2, qx_K = 4;
    qexpand->add_option("--fixture", qx_path)->required();
    qexpand->add_option("--lambda", qx_lambda)->check(CLI::Range(1, 3));
    qexpand->add_option("--K", qx_K, "expand through q^K");
    qexpand->add_option("--format", qx_format)->check(CLI::IsMember({"text", "json"}));

    // modularity
    auto* modularity = app.add_subcommand("modularity", "S/T image residuals on a grid");
    std::string m_path, m_gen, m_t0 = "0.11", m_t1 = "0.43";
    std::string m_tau0 = "0.2+0.8i", m_tau1 = "-0.25+1.3i";
    int m_lambda = 0, m_nt = 5, m_ntau = 5;
    double m_tol = 1e-8;
    modularity->add_option("--fixture", m_path)->required();
    modularity->add_option("--g", m_gen, "S or T")->required()
        ->check(CLI::IsMember({"S", "T"}));
    modularity->add_option("--lambda", m_lambda, "1, 2 or 3; 0 = all")
        ->check(CLI::Range(0, 3));
    modularity->add_option("--t0", m_t0);
    modularity->add_option("--t1", m_t1);
    modularity->add_option("--nt", m_nt)->check(CLI::PositiveNumber);
    modularity->add_option("--tau0", m_tau0);
    modularity->add_option("--tau1", m_tau1);
    modularity->add_option("--ntau", m_ntau)->check(CLI::PositiveNumber);
    modularity->add_option("--tol", m_tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (theta->parsed()) return cmd_theta(kind, v_str, tau_str, eps);
        if (verify->parsed()) return cmd_verify(suite, samples, seed, tol);
        if (rigidity->parsed()) return cmd_rigidity(fixture_path, lambda, K, format);
        if (qexpand->parsed()) return cmd_qexpand(qx_path, qx_lambda, qx_K, qx_format);
        if (modularity->parsed())
            return cmd_modularity(m_path, m_lambda, m_gen, m_t0, m_t1, m_nt, m_tau0,
                                  m_tau1, m_ntau, m_tol);
    } catch (const FixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFixture;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFixture;
    }
    return kExitUsage;
}
