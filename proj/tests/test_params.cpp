#include <doctest.h>

#include <cmath>
#include <random>

#include "nvsim/params.hpp"

using namespace nvsim;

TEST_CASE("thermal occupation: limits and reference values") {
    // zero-temperature branch is exact
    CHECK(thermal_occupation(3e9, 0.0) == 0.0);

    // Bose-Einstein at 3 GHz, 300 K. Reference via the series
    // 1/expm1(x) with x = h nu / kB T = 4.799243073366221e-4 evaluated
    // independently (long-double expansion): nbar = 2083.16195.
    const double nbar = thermal_occupation(3e9, 300.0);
    CHECK(nbar == doctest::Approx(2083.16195).epsilon(1e-6));

    // nbar = 1 exactly when h nu = kB T ln 2
    const auto& c = codata();
    const double T = c.planck * 3e9 / (c.boltzmann * std::log(2.0));
    CHECK(thermal_occupation(3e9, T) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(thermal_occupation(0.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(thermal_occupation(3e9, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(thermal_occupation(std::nan(""), 10.0), std::invalid_argument);
}

TEST_CASE("thermal occupation: classical-limit check") {
    // First-order deviation from kB T / (h nu) is x/2, i.e. 2.5% right at
    // kB T = 20 h nu; the 1% window opens at kB T ~ 50 h nu.
    const auto& c = codata();
    auto rj = [&](double ratio) {
        const double nu = 3e9;
        const double T = ratio * c.planck * nu / c.boltzmann;
        const double classical = c.boltzmann * T / (c.planck * nu);
        return std::abs(thermal_occupation(nu, T) - classical) / classical;
    };
    CHECK(rj(20.0) < 0.03);
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(50.0, 1e6);
    for (int i = 0; i < 200; ++i) {
        CHECK(rj(u(rng)) < 0.01);
    }
}

TEST_CASE("single-spin coupling: caption anchors and scaling") {
    // 1 cm^3 at 3 GHz -> ~0.04 Hz; 2e-3 cm^3 -> ~1 Hz
    CHECK(single_spin_coupling(3e9, 1e-6) == doctest::Approx(0.044254).epsilon(1e-4));
    CHECK(single_spin_coupling(3e9, 2e-9) == doctest::Approx(0.98955).epsilon(1e-4));

    // inverse-square-root volume scaling
    const double g1 = single_spin_coupling(3e9, 1e-6);
    const double g4 = single_spin_coupling(3e9, 4e-6);
    CHECK(g4 == doctest::Approx(0.5 * g1).epsilon(1e-12));

    // g(V) sqrt(V) constant across volumes
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> logv(-12.0, -3.0);
    const double ref = g1 * std::sqrt(1e-6);
    for (int i = 0; i < 100; ++i) {
        const double V = std::pow(10.0, logv(rng));
        CHECK(single_spin_coupling(3e9, V) * std::sqrt(V) ==
              doctest::Approx(ref).epsilon(1e-12));
    }

    CHECK_THROWS_AS(single_spin_coupling(3e9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(single_spin_coupling(3e9, -1e-6), std::invalid_argument);
}

TEST_CASE("collective coupling: T = 0 and sqrt(N) scaling") {
    CHECK(collective_coupling(1.0, 1e4, 3e9, 0.0) == doctest::Approx(100.0).epsilon(1e-14));

    const double base = collective_coupling(0.7, 300.0, 3e9, 77.0);
    const double quad = collective_coupling(0.7, 1200.0, 3e9, 77.0);
    CHECK(quad == doctest::Approx(2.0 * base).epsilon(1e-14));

    // Fig. 4 operating point: ~0.62 MHz, within a factor 2 of Delta_en = 1 MHz.
    // Hand value: 0.04 * sqrt(1e18 * tanh(h*3e9 / (2 kB 300))) = 6.196e5.
    const double om = collective_coupling(0.04, 1e18, 3e9, 300.0);
    CHECK(om == doctest::Approx(6.196e5).epsilon(1e-3));
    CHECK(om > 0.5e6);
    CHECK(om < 2e6);
}

TEST_CASE("collective coupling: monotone in T and N") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> uT(0.0, 400.0);
    std::uniform_real_distribution<double> uN(1.0, 1e12);
    for (int i = 0; i < 200; ++i) {
        double T1 = uT(rng), T2 = uT(rng);
        if (T1 > T2) std::swap(T1, T2);
        CHECK(collective_coupling(1.0, 1e6, 3e9, T1) >=
              collective_coupling(1.0, 1e6, 3e9, T2));
        double N1 = uN(rng), N2 = uN(rng);
        if (N1 > N2) std::swap(N1, N2);
        CHECK(collective_coupling(1.0, N1, 3e9, 200.0) <=
              collective_coupling(1.0, N2, 3e9, 200.0));
    }
}

TEST_CASE("thermal argument conventions") {
    // literal reading divides the tanh argument by 2 pi^2; far inside the
    // linear regime the collective coupling shifts by sqrt(2 pi^2) ~ 4.44
    const double om_p = collective_coupling(1.0, 1e10, 3e9, 300.0, ThermalArgument::physical);
    const double om_l = collective_coupling(1.0, 1e10, 3e9, 300.0, ThermalArgument::literal);
    CHECK(om_p / om_l == doctest::Approx(std::sqrt(2.0 * M_PI * M_PI)).epsilon(1e-6));
    // identical at T = 0
    CHECK(collective_coupling(1.0, 100.0, 3e9, 0.0, ThermalArgument::literal) ==
          doctest::Approx(10.0).epsilon(1e-14));
}

TEST_CASE("dipole-dipole scale") {
    const double scale = dipole_dipole_scale();
    CHECK(scale == doctest::Approx(3.3e-19).epsilon(0.02));  // Hz m^3

    // cm^3 <-> m^3 round trip
    const double cm3 = scale * 1e6;
    CHECK(cm3 * 1e-6 == doctest::Approx(scale).epsilon(1e-15));

    // dipole interaction at n_v = 1e18 cm^-3 vs collective coupling:
    // smaller at 300 K, negligible at full polarization
    const double nv = 1e24;  // m^-3
    const double dipole_hz = scale * nv;
    const double om300 = collective_coupling(0.04, 1e18, 3e9, 300.0);
    const double om0 = collective_coupling(0.04, 1e18, 3e9, 0.0);
    CHECK(dipole_hz < om300);
    CHECK(dipole_hz < 0.01 * om0);
}

TEST_CASE("SystemParams: mutually exclusive input triples") {
    SystemParamsInput in;
    in.quality = 1e6;
    in.g_hz = 1.0;
    in.spin_count = 1e10;
    const SystemParams p = in.resolve();
    CHECK(p.kappa_hz == doctest::Approx(3000.0));
    CHECK(p.kappa_hz * p.quality == doctest::Approx(p.cavity_freq_hz).epsilon(1e-14));

    SystemParamsInput both = in;
    both.kappa_hz = 3000.0;
    CHECK_THROWS_AS(both.resolve(), std::invalid_argument);

    SystemParamsInput neither = in;
    neither.quality.reset();
    CHECK_THROWS_AS(neither.resolve(), std::invalid_argument);

    SystemParamsInput volume = in;
    volume.g_hz.reset();
    volume.mode_volume_m3 = 1e-6;
    const SystemParams pv = volume.resolve();
    CHECK(pv.g_hz == doctest::Approx(0.044254).epsilon(1e-4));

    SystemParamsInput density = in;
    density.spin_count.reset();
    density.density_m3 = 1e24;
    const SystemParams pd = density.resolve();
    CHECK(pd.spin_count == doctest::Approx(1e24 * pd.mode_volume_m3).epsilon(1e-12));

    // g <-> V round trip
    SystemParamsInput round = in;
    const SystemParams pg = round.resolve();
    SystemParamsInput back = in;
    back.g_hz.reset();
    back.mode_volume_m3 = pg.mode_volume_m3;
    CHECK(back.resolve().g_hz == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("SystemParams: kappa * Q = nu_c across random qualities") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> logq(2.0, 8.0);
    for (int i = 0; i < 100; ++i) {
        SystemParamsInput in;
        in.quality = std::pow(10.0, logq(rng));
        in.g_hz = 1.0;
        in.spin_count = 100.0;
        const SystemParams p = in.resolve();
        CHECK(p.kappa_hz * p.quality == doctest::Approx(p.cavity_freq_hz).epsilon(1e-13));
    }
}

TEST_CASE("SystemParams: validation rejects bad fields") {
    SystemParamsInput in;
    in.quality = 1e6;
    in.g_hz = 1.0;
    in.spin_count = 1e10;

    auto bad = in;
    bad.gamma2_hz = 0.0;
    CHECK_THROWS_AS(bad.resolve(), std::invalid_argument);
    bad = in;
    bad.temperature_k = -1.0;
    CHECK_THROWS_AS(bad.resolve(), std::invalid_argument);
    bad = in;
    bad.spin_count = 0.5;
    CHECK_THROWS_AS(bad.resolve(), std::invalid_argument);
    bad = in;
    bad.mixing = 1.5;
    CHECK_THROWS_AS(bad.resolve(), std::invalid_argument);
}
