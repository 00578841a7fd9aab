#include <doctest.h>

#include <cmath>
#include <random>

#include "nvsim/cumulant.hpp"

using namespace nvsim;

namespace {

SystemParams fig1_params(double pump_hz = 0.0, double spin_count = 1e20) {
    SystemParamsInput in;
    in.quality = 1e6;
    in.g_hz = 1.0;
    in.spin_count = spin_count;
    in.pump_hz = pump_hz;
    in.temperature_k = 300.0;
    return in.resolve();
}

// randomized parameter draw inside the closure's validity region: weak
// coupling, modest N, away from the pump-balance point v = gamma1
SystemParams random_params(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (true) {
        SystemParamsInput in;
        in.kappa_hz = std::pow(10.0, 2.0 + 4.0 * u(rng));
        in.quality.reset();
        in.gamma1_hz = std::pow(10.0, 1.0 + 4.0 * u(rng));
        in.pump_hz = in.gamma1_hz * std::pow(10.0, -2.0 + 4.0 * u(rng));
        in.gamma2_hz = std::pow(10.0, 4.0 + 3.0 * u(rng));
        in.g_hz = 0.05 + 1.95 * u(rng);
        in.spin_count = std::pow(10.0, 1.0 + 3.0 * u(rng));
        in.temperature_k = 1.0 + 399.0 * u(rng);
        const SystemParams p = in.resolve();
        if (std::abs(p.pump_hz - p.gamma1_hz) < 0.05 * (p.pump_hz + p.gamma1_hz)) continue;
        return p;
    }
}

}  // namespace

TEST_CASE("rhs: decoupled thermalization sign and value") {
    SystemParams p = fig1_params();
    p.g_hz = 0.0;  // decoupled
    CumulantState s{-1.0, p.nbar_cavity(), {0.0, 0.0}, 0.0};
    const CumulantState d = cumulant_rhs(s, p);
    // -(gamma1)(2nbar+1)(-1) + (0 - gamma1) = 2 gamma1 nbar > 0 toward thermal
    const double expected = 2.0 * p.gamma1_hz * p.nbar_spin();
    CHECK(d.sigma_z == doctest::Approx(expected).epsilon(1e-12));
    CHECK(d.sigma_z > 0.0);
    CHECK(d.photon_number == doctest::Approx(0.0));
}

TEST_CASE("rhs: g = 0 leaves the coherence closed at zero") {
    SystemParams p = fig1_params(10.0);
    p.g_hz = 0.0;
    CumulantState s{0.3, 12.0, {0.0, 0.0}, 0.0};
    const CumulantState d = cumulant_rhs(s, p);
    CHECK(d.coherence.real() == 0.0);
    CHECK(d.coherence.imag() == 0.0);
    CHECK(d.spin_excitation == 0.0);
}

TEST_CASE("rhs: closed-pair fixed point of the steady-state forms") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 120; ++i) {
        const SystemParams p = random_params(rng);
        const SteadyState ss = steady_state_consistent(p);
        const CumulantState state{ss.sigma_z, ss.photon_number, {0.0, 0.0}, 0.0};
        const CumulantState d = cumulant_rhs(state, p);
        const double rate_scale =
            std::max({(p.gamma1_hz + p.pump_hz) * (2.0 * p.nbar_spin() + 1.0),
                      2.0 * p.kappa_hz, 1.0});
        CHECK(std::abs(d.sigma_z) <= 1e-8 * rate_scale);
        CHECK(std::abs(d.photon_number) <=
              1e-8 * rate_scale * (p.nbar_cavity() + 1.0));
    }
}

TEST_CASE("steady state: closed-form anchors") {
    // pure relaxation at T = 0, no pump
    SystemParamsInput in;
    in.quality = 1e6;
    in.g_hz = 1.0;
    in.spin_count = 100.0;
    in.temperature_k = 0.0;
    const SystemParams p0 = in.resolve();
    CHECK(steady_state(p0).sigma_z == doctest::Approx(-1.0).epsilon(1e-14));
    // the mutually stationary pair parks the photons at the thermal value
    CHECK(steady_state_consistent(p0).photon_number == doctest::Approx(0.0));

    // pump balancing decay
    in.pump_hz = in.gamma1_hz;
    const SystemParams pb = in.resolve();
    CHECK(steady_state(pb).sigma_z == doctest::Approx(0.0));

    // guard
    in.pump_hz = 0.0;
    in.gamma1_hz = 0.0;
    CHECK_THROWS_AS(steady_state(in.resolve()), std::invalid_argument);
}

TEST_CASE("steady state: thermal tanh law") {
    // ratio sigma_z(T)/sigma_z(0) equals tanh(h nu0 / 2 kB T) for v << gamma1
    SystemParamsInput in;
    in.quality = 1e6;
    in.g_hz = 1.0;
    in.spin_count = 1e10;
    in.pump_hz = 0.5;  // v << gamma1
    in.temperature_k = 0.0;
    const double sz0 = steady_state(in.resolve()).sigma_z;
    for (double T : {4.0, 77.0, 300.0}) {
        in.temperature_k = T;
        const SystemParams p = in.resolve();
        const double ratio = steady_state(p).sigma_z / sz0;
        const double tanh_theta = thermal_tanh(p.spin_freq_hz, T);
        CHECK(ratio == doctest::Approx(tanh_theta).epsilon(1e-3));
    }
}

TEST_CASE("steady state: pump monotonicity") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        SystemParamsInput in;
        in.quality = 1e6;
        in.g_hz = 1.0;
        in.spin_count = 1e8;
        in.gamma1_hz = std::pow(10.0, 1.0 + 3.0 * u(rng));
        in.temperature_k = 400.0 * u(rng);
        double v1 = in.gamma1_hz * std::pow(10.0, -2.0 + 4.0 * u(rng));
        double v2 = in.gamma1_hz * std::pow(10.0, -2.0 + 4.0 * u(rng));
        if (v1 > v2) std::swap(v1, v2);
        in.pump_hz = v1;
        const double s1 = steady_state(in.resolve()).sigma_z;
        in.pump_hz = v2;
        const double s2 = steady_state(in.resolve()).sigma_z;
        CHECK(s1 <= s2 + 1e-15);
    }
}

TEST_CASE("integrate: ground state is stationary without pump at T = 0") {
    SystemParamsInput in;
    in.quality = 1e6;
    in.g_hz = 1.0;
    in.spin_count = 1e6;
    in.temperature_k = 0.0;
    const SystemParams p = in.resolve();
    const CumulantState ground{-1.0, 0.0, {0.0, 0.0}, 0.0};
    const Trajectory traj = integrate(ground, p, {5.0 / p.gamma1_hz, 200});
    CHECK(traj.states.front().sigma_z == -1.0);  // first sample is exact
    for (const auto& s : traj.states) {
        CHECK(std::abs(s.sigma_z + 1.0) < 1e-8);
        CHECK(std::abs(s.photon_number) < 1e-8);
        CHECK(std::abs(s.coherence) < 1e-10);
    }
}

TEST_CASE("integrate: long-time limit matches the closed forms (fig-1 rates)") {
    // v = 0 keeps the coupling flux zero at the fixed point, so the closed
    // pair is exact; 20/gamma1 is the stated convergence horizon
    const SystemParams p = fig1_params(0.0);
    const Trajectory traj =
        integrate(thermal_initial_state(p), p, {20.0 / p.gamma1_hz, 60});
    const SteadyState ss = steady_state_consistent(p);
    const auto& last = traj.states.back();
    CHECK(last.sigma_z == doctest::Approx(ss.sigma_z).epsilon(1e-3));
    CHECK(last.photon_number == doctest::Approx(ss.photon_number).epsilon(1e-3));
    // and the tanh detailed-balance value
    CHECK(last.sigma_z ==
          doctest::Approx(-thermal_tanh(p.spin_freq_hz, p.temperature_k)).epsilon(1e-6));
}

TEST_CASE("integrate: detailed balance with g -> 0 and v = 0") {
    SystemParams p = fig1_params(0.0, 1e6);
    p.g_hz = 0.0;
    const Trajectory traj =
        integrate(thermal_initial_state(p), p, {30.0 / p.gamma1_hz, 50});
    const auto& last = traj.states.back();
    CHECK(last.photon_number == doctest::Approx(p.nbar_cavity()).epsilon(1e-6));
    CHECK(last.sigma_z ==
          doctest::Approx(-thermal_tanh(p.spin_freq_hz, p.temperature_k)).epsilon(1e-6));
}

TEST_CASE("integrate: randomized closure against the closed forms") {
    // compact version of the acceptance sweep
    std::mt19937 rng(777);
    for (int i = 0; i < 12; ++i) {
        const SystemParams p = random_params(rng);
        const double slow = std::min(p.gamma1_hz + p.pump_hz, 2.0 * p.kappa_hz);
        IntegrationOptions opt;
        opt.rel_tol = 1e-10;
        opt.abs_tol = 1e-14;
        const Trajectory traj =
            integrate(thermal_initial_state(p), p, {40.0 / slow, 40}, opt);
        const SteadyState ss = steady_state_consistent(p);
        const auto& last = traj.states.back();
        CHECK(last.sigma_z == doctest::Approx(ss.sigma_z).epsilon(1e-3));
        CHECK(last.photon_number == doctest::Approx(ss.photon_number).epsilon(1e-3));
    }
}

TEST_CASE("integrate: above-threshold pump reproduces the photon closed form") {
    // v > gamma1 inverts the ensemble; the collective mode saturates with the
    // inversion clamped near zero and the photon number at the printed
    // closed-form value nbar + N(v - gamma1)/(4 kappa)
    const SystemParams p = fig1_params(10.0 * 250.0);
    const SteadyState printed = steady_state(p);  // thermal defaults
    const Trajectory traj =
        integrate(thermal_initial_state(p), p, {40e-3, 50});
    const auto& last = traj.states.back();
    CHECK(last.photon_number == doctest::Approx(printed.photon_number).epsilon(0.01));
    CHECK(last.sigma_z > 0.0);
    CHECK(last.sigma_z < 1e-8);  // clamped just above threshold
}

TEST_CASE("integrate: pump above the ensemble decay destroys the coherent dressed state") {
    // identical coherence seed; below gamma1 the seeded coherence rings at
    // the collective frequency and decays away (its envelope collapses
    // relative to the early peak), above gamma1 the medium inverts and the
    // coherence grows to the saturated value instead
    auto run = [&](double pump) {
        const SystemParams p = fig1_params(pump, 1e16);
        CumulantState init = thermal_initial_state(p);
        init.coherence = {1e-3, 0.0};
        IntegrationOptions opt;
        opt.abs_tol = 1e-16;
        return integrate(init, p, {2e-5, 8001}, opt);
    };
    auto envelope = [](const Trajectory& t) {
        double peak = 0.0;
        for (const auto& s : t.states) peak = std::max(peak, std::abs(s.coherence));
        return std::abs(t.states.back().coherence) / peak;
    };
    // the collective exchange oscillation shows up as sign changes of Im C
    // (the spin-photon energy flux); on resonance Re C only decays
    auto ring_count = [](const Trajectory& t) {
        int count = 0;
        for (std::size_t i = 1; i < t.states.size() / 2; ++i) {
            const double a = t.states[i - 1].coherence.imag();
            const double b = t.states[i].coherence.imag();
            if ((a > 0 && b < 0) || (a < 0 && b > 0)) ++count;
        }
        return count;
    };
    const Trajectory weak = run(0.1 * 250.0);
    const Trajectory strong = run(10.0 * 250.0);
    CHECK(envelope(weak) < 1e-2);     // coherent ring-down
    CHECK(envelope(strong) > 0.3);    // pinned near the saturated value
    CHECK(ring_count(weak) >= 20);    // visible collective oscillation
    CHECK(ring_count(strong) <= 2);   // growth without exchange ringing
    CHECK(weak.states.back().sigma_z < -1e-4);
    CHECK(strong.states.back().sigma_z > -1e-7);  // clamped at the threshold
}

TEST_CASE("integrate: deterministic and grid-faithful") {
    const SystemParams p = fig1_params(25.0, 1e12);
    const CumulantState init = thermal_initial_state(p);
    const SamplingGrid grid{1e-3, 173};
    const Trajectory a = integrate(init, p, grid);
    const Trajectory b = integrate(init, p, grid);
    REQUIRE(a.states.size() == 173);
    REQUIRE(a.times_s.size() == 173);
    CHECK(a.times_s.front() == 0.0);
    CHECK(a.times_s.back() == doctest::Approx(1e-3).epsilon(1e-14));
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        CHECK(a.times_s[i] == b.times_s[i]);
        CHECK(a.states[i].sigma_z == b.states[i].sigma_z);
        CHECK(a.states[i].photon_number == b.states[i].photon_number);
        CHECK(a.states[i].coherence == b.states[i].coherence);
        CHECK(a.states[i].spin_excitation == b.states[i].spin_excitation);
    }
    for (std::size_t i = 1; i < a.times_s.size(); ++i) {
        CHECK(a.times_s[i] > a.times_s[i - 1]);
    }
}

TEST_CASE("integrate: input validation") {
    const SystemParams p = fig1_params();
    CHECK_THROWS_AS(integrate(thermal_initial_state(p), p, {0.0, 100}),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate(thermal_initial_state(p), p, {1e-3, 1}),
                    std::invalid_argument);
}
