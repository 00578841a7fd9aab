#include <doctest.h>

#include <cmath>
#include <vector>

#include "nvsim/cumulant.hpp"
#include "nvsim/lindblad_oracle.hpp"

using namespace nvsim;

namespace {

std::vector<double> sample_times(double t_end, int n) {
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = t_end * i / (n - 1);
    return t;
}

SystemParams cold_params() {
    SystemParamsInput in;
    in.kappa_hz = 2.5e6;  // 1e4 * gamma1
    in.quality.reset();
    in.gamma1_hz = 250.0;
    // kept below gamma1 + v: the closed set evolves the cross coherence
    // without a dephasing term, so its trace is faithful only there
    in.gamma2_hz = 10.0;
    in.pump_hz = 25.0;
    in.g_hz = 100.0;
    in.spin_count = 2.0;
    in.temperature_k = 0.010;  // nbar ~ 5.6e-7
    return in.resolve();
}

}  // namespace

TEST_CASE("oracle: single-spin decay against the analytic exponential") {
    SystemParamsInput in;
    in.quality = 1e6;
    in.gamma1_hz = 1000.0;
    in.gamma2_hz = 1.0;
    in.g_hz = 1e-6;  // decoupled to numerical precision
    in.spin_count = 1.0;
    in.temperature_k = 0.0;
    const SystemParams p = in.resolve();

    const LindbladOracle oracle(p, 1, 2);
    const auto times = sample_times(5e-3, 21);
    const auto samples = oracle.evolve(oracle.excited_vacuum(), times);
    for (const auto& s : samples) {
        const double expected = 2.0 * std::exp(-p.gamma1_hz * s.t_s) - 1.0;
        CHECK(s.sigma_z == doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("oracle: vacuum Rabi oscillation at frequency 2g") {
    SystemParams p;  // direct construction: all rates off
    p.cavity_freq_hz = 3e9;
    p.spin_freq_hz = 3e9;
    p.quality = 1e30;
    p.kappa_hz = 0.0;
    p.gamma1_hz = 0.0;
    p.gamma2_hz = 0.0;
    p.pump_hz = 0.0;
    p.g_hz = 1000.0;
    p.spin_count = 1.0;
    p.temperature_k = 0.0;

    const LindbladOracle oracle(p, 1, 3);
    const auto times = sample_times(2e-3, 41);  // four full flops
    const auto samples = oracle.evolve(oracle.excited_vacuum(), times);
    for (const auto& s : samples) {
        const double expected = std::cos(kTwoPi * 2.0 * p.g_hz * s.t_s);
        CHECK(s.sigma_z == doctest::Approx(expected).epsilon(1e-6));
        CHECK(s.photon_number ==
              doctest::Approx(0.5 * (1.0 - expected)).epsilon(1e-6));
    }
}

TEST_CASE("oracle: density-matrix invariants hold along a pumped run") {
    const SystemParams p = cold_params();
    const LindbladOracle oracle(p, 2, 4);
    const auto times = sample_times(2.0 / p.gamma1_hz, 9);
    const auto samples = oracle.evolve(oracle.ground_vacuum(), times);
    for (const auto& s : samples) {
        CHECK(s.hermiticity_error <= 1e-12);
        CHECK(s.trace_error <= 1e-10);
        CHECK(s.min_eigenvalue >= -1e-9);
    }
}

TEST_CASE("oracle: permutation symmetry of identical spins") {
    const SystemParams p = cold_params();
    const LindbladOracle oracle(p, 2, 3);
    const auto times = sample_times(1.0 / p.gamma1_hz, 7);
    const auto samples = oracle.evolve(oracle.ground_vacuum(), times);
    for (const auto& s : samples) {
        REQUIRE(s.sigma_z_per_spin.size() == 2);
        CHECK(std::abs(s.sigma_z_per_spin[0] - s.sigma_z_per_spin[1]) <= 1e-10);
    }
}

TEST_CASE("oracle: truncation-leak monitor demands a larger ladder") {
    SystemParams p;
    p.cavity_freq_hz = 3e9;
    p.spin_freq_hz = 3e9;
    p.quality = 1e30;
    p.kappa_hz = 0.0;
    p.gamma1_hz = 0.0;
    p.gamma2_hz = 0.0;
    p.pump_hz = 0.0;
    p.g_hz = 1000.0;
    p.spin_count = 3.0;
    p.temperature_k = 0.0;
    // three excited spins dump up to three quanta into a 1-level ladder
    const LindbladOracle oracle(p, 3, 1);
    const auto times = sample_times(5e-4, 9);
    CHECK_THROWS_WITH_AS(oracle.evolve(oracle.excited_vacuum(), times),
                         doctest::Contains("raise n_cut"), std::runtime_error);
}

TEST_CASE("oracle: construction guards") {
    const SystemParams p = cold_params();
    CHECK_THROWS_AS(LindbladOracle(p, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(LindbladOracle(p, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(LindbladOracle(p, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(LindbladOracle(p, 2, 11), std::invalid_argument);

    SystemParams warm = p;
    warm.temperature_k = 300.0;  // nbar ~ 2e3 breaks the truncation
    CHECK_THROWS_AS(LindbladOracle(warm, 2, 5), std::invalid_argument);
}

TEST_CASE("oracle vs cumulant closure: pumped two-spin run") {
    // compact version of the acceptance criterion (shorter horizon)
    const SystemParams p = cold_params();
    const double t_end = 1.0 / p.gamma1_hz;
    const auto times = sample_times(t_end, 11);

    const LindbladOracle oracle(p, 2, 5);
    const auto exact = oracle.evolve(oracle.ground_vacuum(), times);

    IntegrationOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-14;
    const CumulantState ground{-1.0, 0.0, {0.0, 0.0}, 0.0};
    const Trajectory cum = integrate(ground, p, {t_end, 11}, opt);

    double n_scale = 0.0;
    double e_scale = 0.0;
    for (const auto& s : exact) {
        n_scale = std::max(n_scale, s.photon_number);
        e_scale = std::max(e_scale, std::abs(s.cross_coherence));
    }
    for (std::size_t i = 0; i < exact.size(); ++i) {
        CHECK(cum.states[i].sigma_z ==
              doctest::Approx(exact[i].sigma_z).epsilon(0.05));
        const double diff = std::abs(cum.states[i].photon_number - exact[i].photon_number);
        CHECK(diff <= 0.05 * (std::abs(exact[i].photon_number) + 1e-3 * n_scale));
        // the tracked cross-spin coherence follows the exact one, including
        // its negative (subradiant) sign
        const double ediff =
            std::abs(cum.states[i].spin_excitation - exact[i].cross_coherence);
        CHECK(ediff <= 0.10 * (std::abs(exact[i].cross_coherence) + 0.05 * e_scale));
    }
}
