#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "rigiditylab/lefschetz.hpp"
#include "test_util.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RIGIDITYLAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string fx(const std::string& name) { return rltest::fixture_path(name); }

}  // namespace

TEST_CASE("cli: theta evaluation and exit codes") {
    RunResult r = run_cli("theta --kind t3 --v 0 --tau 1i");
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 15) == "1.0864348112133");

    RunResult zero = run_cli("theta --kind t --v 0 --tau 1i");
    CHECK(zero.exit_code == 0);
    CHECK(zero.output.substr(0, 2) == "0+");

    RunResult bad_tau = run_cli("theta --kind t --v 0 --tau -1i");
    CHECK(bad_tau.exit_code == 2);
    CHECK(bad_tau.output.find("upper half-plane") != std::string::npos);

    RunResult bad_kind = run_cli("theta --kind t9 --v 0 --tau 1i");
    CHECK(bad_kind.exit_code == 2);

    RunResult bad_complex = run_cli("theta --kind t --v 1x2 --tau 1i");
    CHECK(bad_complex.exit_code == 2);
}

TEST_CASE("cli: verify suites") {
    RunResult jac = run_cli("verify --suite jacobi --samples 20 --tol 1e-10");
    CHECK(jac.exit_code == 0);
    CHECK(jac.output.find("PASS") != std::string::npos);

    RunResult ch = run_cli("verify --suite chseries --samples 10 --tol 1e-9 --seed 7");
    CHECK(ch.exit_code == 0);

    RunResult unknown = run_cli("verify --suite nosuch");
    CHECK(unknown.exit_code == 2);

    // Impossible tolerance turns the verdict, not the usage, into a failure.
    RunResult strict = run_cli("verify --suite modular --samples 5 --tol 1e-30");
    CHECK(strict.exit_code == 1);
}

TEST_CASE("cli: verify output is deterministic for a fixed seed") {
    std::string args = "verify --suite translations --samples 40 --seed 99 --tol 1e-10";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("cli: rigidity reports and exit codes") {
    RunResult s2 = run_cli("rigidity --fixture " + fx("s2") + " --lambda 2 --K 4");
    CHECK(s2.exit_code == 0);
    auto doc = nlohmann::json::parse(s2.output);
    CHECK(doc["fixture"] == "s2");
    CHECK(doc["K"] == 8);  // half-order index of q^4
    CHECK(doc["verdict"]["all_constant"] == true);
    CHECK(doc["verdict"]["all_zero"] == true);
    for (const auto& o : doc["orders"]) CHECK(o["constant"] == "0");

    // Report JSON round-trips.
    CHECK(nlohmann::ordered_json::parse(s2.output).dump(2) + "\n" == s2.output);

    RunResult one = run_cli("rigidity --fixture " + fx("onepoint") + " --lambda 2 --K 2");
    CHECK(one.exit_code == 1);
    auto one_doc = nlohmann::json::parse(one.output);
    CHECK(one_doc["orders"][0]["is_laurent"] == false);

    RunResult csv = run_cli("rigidity --fixture " + fx("s2") + " --lambda 1 --K 1 "
                            "--format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.substr(0, 19) == "k,verdict,constant\n");
    CHECK(csv.output.find("0,constant,0") != std::string::npos);
}

TEST_CASE("cli: fixture errors exit with code 3") {
    RunResult missing = run_cli("rigidity --fixture /does/not/exist.json --lambda 2");
    CHECK(missing.exit_code == 3);

    std::string broken = "/tmp/rigiditylab_broken_fixture.json";
    std::ofstream(broken) << "{\"name\": \"broken\", \"d\": 1}";
    RunResult bad = run_cli("rigidity --fixture " + broken + " --lambda 2");
    CHECK(bad.exit_code == 3);
    CHECK(bad.output.find("missing key") != std::string::npos);

    std::ofstream(broken) << "{\"name\":\"b\",\"d\":1,\"l\":0,\"components\":"
                             "[{\"sign\":1,\"tangent_weights\":[0],"
                             "\"bundle_weights\":[]}]}";
    RunResult zero_weight = run_cli("rigidity --fixture " + broken + " --lambda 2");
    CHECK(zero_weight.exit_code == 3);
    CHECK(zero_weight.output.find("zero tangent weight") != std::string::npos);
}

TEST_CASE("cli: qexpand text grammar") {
    RunResult one = run_cli("qexpand --fixture " + fx("onepoint") + " --lambda 2 --K 0");
    CHECK(one.exit_code == 0);
    // Line for q^0 must carry the canonical closed form computed in-process.
    using namespace rigiditylab;
    ManifoldFixture f = rltest::load("onepoint");
    std::string expected = "k=0: " + lefschetz_qexpansion(2, f, 0).coeff(0).str() + "\n";
    CHECK(one.output == expected);

    RunResult s2 = run_cli("qexpand --fixture " + fx("s2") + " --lambda 3 --K 1");
    CHECK(s2.exit_code == 0);
    CHECK(s2.output == "k=0: 0\nk=1: 0\nk=2: 0\n");

    RunResult js = run_cli("qexpand --fixture " + fx("s2") + " --lambda 3 --K 1 "
                           "--format json");
    auto doc = nlohmann::json::parse(js.output);
    CHECK(doc["coefficients"].size() == 3);
}

TEST_CASE("cli: modularity grids") {
    RunResult t_run = run_cli("modularity --fixture " + fx("s2") +
                              " --g T --nt 3 --ntau 3 --tol 1e-10");
    CHECK(t_run.exit_code == 0);
    CHECK(t_run.output.find("# fixture: s2") != std::string::npos);
    CHECK(t_run.output.find("t,tau,lambda,residual") != std::string::npos);

    RunResult s_run = run_cli("modularity --fixture " + fx("anomalous") +
                              " --g S --nt 3 --ntau 3 --tol 1e-8");
    CHECK(s_run.exit_code == 0);
    CHECK(s_run.output.find("rigid_condition_met=false") != std::string::npos);

    RunResult strict = run_cli("modularity --fixture " + fx("s2") +
                               " --g S --nt 2 --ntau 2 --tol 1e-30");
    CHECK(strict.exit_code == 1);

    // A grid point on the pole lattice is skipped, not failed.
    RunResult skipped = run_cli("modularity --fixture " + fx("s2") +
                                " --g T --t0 0 --t1 0.4 --nt 2 --ntau 2 --tol 1e-10");
    CHECK(skipped.exit_code == 0);
    CHECK(skipped.output.find("skipped") != std::string::npos);

    RunResult bad_tau = run_cli("modularity --fixture " + fx("s2") +
                                " --g T --tau0 1i --tau1 -1i");
    CHECK(bad_tau.exit_code == 2);
}
