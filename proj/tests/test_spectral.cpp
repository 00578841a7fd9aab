#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "nvsim/lamb_shift.hpp"
#include "nvsim/spectral_density.hpp"

using namespace nvsim;

namespace {
constexpr double kCenter = 3e9;
constexpr double kFwhm = 1e6;
}  // namespace

TEST_CASE("densities integrate to one") {
    for (auto kind : {DensityKind::gaussian, DensityKind::lorentzian}) {
        const SpectralDensity d(kind, kFwhm, kCenter);
        CHECK(integrate_density(d) == doctest::Approx(1.0).epsilon(1e-7));
    }
    const SpectralDensity pv(DensityKind::pseudo_voigt, kFwhm, kCenter, 0.37);
    CHECK(integrate_density(pv) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("lorentzian center value 2/(pi fwhm)") {
    const SpectralDensity d(DensityKind::lorentzian, kFwhm, kCenter);
    CHECK(d(kCenter) == doctest::Approx(2.0 / (M_PI * kFwhm)).epsilon(1e-12));
}

TEST_CASE("fwhm is the real full width at half maximum") {
    for (auto kind : {DensityKind::gaussian, DensityKind::lorentzian}) {
        const SpectralDensity d(kind, kFwhm, kCenter);
        const double half = 0.5 * d(kCenter);
        CHECK(d(kCenter + 0.5 * kFwhm) == doctest::Approx(half).epsilon(1e-10));
        CHECK(d(kCenter - 0.5 * kFwhm) == doctest::Approx(half).epsilon(1e-10));
    }
}

TEST_CASE("pseudo-Voigt endpoints equal the pure shapes") {
    const SpectralDensity l(DensityKind::lorentzian, kFwhm, kCenter);
    const SpectralDensity g(DensityKind::gaussian, kFwhm, kCenter);
    const SpectralDensity pv1(DensityKind::pseudo_voigt, kFwhm, kCenter, 1.0);
    const SpectralDensity pv0(DensityKind::pseudo_voigt, kFwhm, kCenter, 0.0);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-8.0 * kFwhm, 8.0 * kFwhm);
    for (int i = 0; i < 200; ++i) {
        const double f = kCenter + u(rng);
        CHECK(pv1(f) == doctest::Approx(l(f)).epsilon(1e-13));
        CHECK(pv0(f) == doctest::Approx(g(f)).epsilon(1e-13));
    }
}

TEST_CASE("density is nonnegative everywhere sampled") {
    const SpectralDensity pv(DensityKind::pseudo_voigt, kFwhm, kCenter, 0.2);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-500.0 * kFwhm, 500.0 * kFwhm);
    for (int i = 0; i < 1000; ++i) {
        CHECK(pv(kCenter + u(rng)) >= 0.0);
    }
}

TEST_CASE("analytic derivative matches finite differences") {
    const SpectralDensity pv(DensityKind::pseudo_voigt, kFwhm, kCenter, 0.3);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-4.0 * kFwhm, 4.0 * kFwhm);
    for (int i = 0; i < 100; ++i) {
        const double f = kCenter + u(rng);
        const double h = 1e-3 * kFwhm;
        const double fd = (pv(f + h) - pv(f - h)) / (2.0 * h);
        CHECK(pv.derivative(f) == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("Lamb shift: symmetric point vanishes") {
    for (auto kind : {DensityKind::gaussian, DensityKind::lorentzian}) {
        const SpectralDensity d(kind, kFwhm, kCenter);
        CHECK(std::abs(lamb_shift(d, kCenter)) < 1e-16);
        const auto pv = lamb_shift_pv_detailed(d, kCenter);
        CHECK(pv.converged);
        CHECK(std::abs(pv.value) * kFwhm < 1e-7);
    }
}

TEST_CASE("Lamb shift: quadrature matches the Lorentzian closed form") {
    const SpectralDensity d(DensityKind::lorentzian, kFwhm, kCenter);
    // closed form x / (x^2 + (fwhm/2)^2), derived as the half-plane pole
    // evaluation of the convolution integral
    for (int i = 1; i <= 20; ++i) {
        const double x = (i - 10.25) * 0.9 * kFwhm;
        const double f = kCenter + x;
        const double exact = x / (x * x + 0.25 * kFwhm * kFwhm);
        CHECK(lamb_shift(d, f) == doctest::Approx(exact).epsilon(1e-13));
        CHECK(lamb_shift_pv(d, f) == doctest::Approx(exact).epsilon(1e-6));
    }
}

TEST_CASE("Lamb shift: Dawson closed form vs quadrature for the Gaussian") {
    const SpectralDensity d(DensityKind::gaussian, kFwhm, kCenter);
    for (double x : {-6.0e6, -2.3e6, -0.8e6, -0.1e6, 0.05e6, 0.4e6, 1.7e6, 4.4e6, 9.0e6}) {
        const double f = kCenter + x;
        const double closed = lamb_shift(d, f);
        const double quad = lamb_shift_pv(d, f);
        CHECK(quad == doctest::Approx(closed).epsilon(1e-8));
    }
}

TEST_CASE("Lamb shift: pseudo-Voigt mixes linearly") {
    const double mix = 0.2;
    const SpectralDensity pv(DensityKind::pseudo_voigt, kFwhm, kCenter, mix);
    const SpectralDensity l(DensityKind::lorentzian, kFwhm, kCenter);
    const SpectralDensity g(DensityKind::gaussian, kFwhm, kCenter);
    for (double x : {-3.0e6, 0.5e6, 2.0e6}) {
        const double f = kCenter + x;
        CHECK(lamb_shift(pv, f) ==
              doctest::Approx(mix * lamb_shift(l, f) + (1 - mix) * lamb_shift(g, f))
                  .epsilon(1e-12));
        CHECK(lamb_shift_pv(pv, f) == doctest::Approx(lamb_shift(pv, f)).epsilon(1e-7));
    }
}

TEST_CASE("Lamb shift: far-field 1/(w - w0) behavior") {
    const SpectralDensity g(DensityKind::gaussian, kFwhm, kCenter);
    const double x = 20.0 * kFwhm;
    CHECK(lamb_shift(g, kCenter + x) == doctest::Approx(1.0 / x).epsilon(0.01));
    CHECK(lamb_shift_pv(g, kCenter + x) == doctest::Approx(1.0 / x).epsilon(0.01));
}

TEST_CASE("Lamb shift: antisymmetric about the center for symmetric densities") {
    const SpectralDensity pv(DensityKind::pseudo_voigt, kFwhm, kCenter, 0.2);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.01 * kFwhm, 10.0 * kFwhm);
    for (int i = 0; i < 24; ++i) {
        const double x = u(rng);
        const double plus = lamb_shift_pv(pv, kCenter + x);
        const double minus = lamb_shift_pv(pv, kCenter - x);
        CHECK(plus == doctest::Approx(-minus).epsilon(1e-7));
    }
}

TEST_CASE("density validation") {
    CHECK_THROWS_AS(SpectralDensity(DensityKind::gaussian, 0.0, kCenter),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpectralDensity(DensityKind::pseudo_voigt, kFwhm, kCenter, -0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpectralDensity(DensityKind::pseudo_voigt, kFwhm, kCenter, 1.1),
                    std::invalid_argument);
}
