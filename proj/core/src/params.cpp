#include "nvsim/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nvsim {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + ": non-finite value");
    }
}

}  // namespace

double thermal_occupation(double freq_hz, double temperature_k,
                          const PhysicalConstants& c) {
    require_finite(freq_hz, "thermal_occupation.frequency");
    require_finite(temperature_k, "thermal_occupation.temperature");
    if (freq_hz <= 0.0) {
        throw std::invalid_argument("thermal_occupation.frequency: must be > 0");
    }
    if (temperature_k < 0.0) {
        throw std::invalid_argument("thermal_occupation.temperature: must be >= 0");
    }
    if (temperature_k == 0.0) return 0.0;
    const double x = c.planck * freq_hz / (c.boltzmann * temperature_k);
    if (x > 700.0) return 0.0;  // exp would overflow; occupation underflows anyway
    return 1.0 / std::expm1(x);
}

double thermal_tanh(double freq_hz, double temperature_k,
                    ThermalArgument convention, const PhysicalConstants& c) {
    require_finite(freq_hz, "thermal_tanh.frequency");
    require_finite(temperature_k, "thermal_tanh.temperature");
    if (freq_hz <= 0.0) throw std::invalid_argument("thermal_tanh.frequency: must be > 0");
    if (temperature_k < 0.0) throw std::invalid_argument("thermal_tanh.temperature: must be >= 0");
    if (temperature_k == 0.0) return 1.0;
    double theta = c.planck * freq_hz / (2.0 * c.boltzmann * temperature_k);
    if (convention == ThermalArgument::literal) {
        theta /= kTwoPi * static_cast<double>(M_PI);  // 2 pi^2
    }
    return std::tanh(theta);
}

double single_spin_coupling(double cavity_freq_hz, double mode_volume_m3,
                            const PhysicalConstants& c) {
    require_finite(cavity_freq_hz, "single_spin_coupling.cavity_frequency");
    require_finite(mode_volume_m3, "single_spin_coupling.mode_volume");
    if (cavity_freq_hz <= 0.0) {
        throw std::invalid_argument("single_spin_coupling.cavity_frequency: must be > 0");
    }
    if (mode_volume_m3 <= 0.0) {
        throw std::invalid_argument("single_spin_coupling.mode_volume: must be > 0");
    }
    // hbar * omega_c = h * nu_c
    return c.gyromagnetic_ratio *
           std::sqrt(c.planck * cavity_freq_hz * c.vacuum_permeability / mode_volume_m3);
}

double collective_coupling(double g_hz, double spin_count, double spin_freq_hz,
                           double temperature_k, ThermalArgument convention,
                           const PhysicalConstants& c) {
    require_finite(g_hz, "collective_coupling.g");
    require_finite(spin_count, "collective_coupling.spin_count");
    if (g_hz <= 0.0) throw std::invalid_argument("collective_coupling.g: must be > 0");
    if (spin_count < 1.0) throw std::invalid_argument("collective_coupling.spin_count: must be >= 1");
    const double pol = thermal_tanh(spin_freq_hz, temperature_k, convention, c);
    return g_hz * std::sqrt(spin_count * pol);
}

double dipole_dipole_scale(const PhysicalConstants& c) {
    return 0.5 * c.vacuum_permeability * c.planck * c.gyromagnetic_ratio * c.gyromagnetic_ratio;
}

double kappa_from_quality(double cavity_freq_hz, double quality) {
    if (!(cavity_freq_hz > 0) || !std::isfinite(cavity_freq_hz)) {
        throw std::invalid_argument("kappa_from_quality.cavity_frequency: must be finite and > 0");
    }
    if (!(quality > 0) || !std::isfinite(quality)) {
        throw std::invalid_argument("kappa_from_quality.quality: must be finite and > 0");
    }
    return cavity_freq_hz / quality;
}

SystemParams SystemParamsInput::resolve() const {
    constants.validate();
    SystemParams p;
    p.constants = constants;
    p.cavity_freq_hz = cavity_freq_hz;
    p.spin_freq_hz = spin_freq_hz;
    p.gamma1_hz = gamma1_hz;
    p.gamma2_hz = gamma2_hz;
    p.pump_hz = pump_hz;
    p.temperature_k = temperature_k;
    p.distribution = distribution;
    p.mixing = mixing;
    p.thermal_argument = thermal_argument;

    require_finite(cavity_freq_hz, "cavity_frequency");
    require_finite(spin_freq_hz, "spin_frequency");
    if (cavity_freq_hz <= 0) throw std::invalid_argument("cavity_frequency: must be > 0");
    if (spin_freq_hz <= 0) throw std::invalid_argument("spin_frequency: must be > 0");
    if (gamma1_hz < 0 || !std::isfinite(gamma1_hz)) throw std::invalid_argument("gamma1: must be >= 0");
    if (gamma2_hz <= 0 || !std::isfinite(gamma2_hz)) throw std::invalid_argument("gamma2: must be > 0 (Delta_en)");
    if (pump_hz < 0 || !std::isfinite(pump_hz)) throw std::invalid_argument("pump: must be >= 0");
    if (temperature_k < 0 || !std::isfinite(temperature_k)) throw std::invalid_argument("temperature: must be >= 0");
    if (mixing < 0 || mixing > 1) throw std::invalid_argument("mixing: must lie in [0, 1]");

    if (quality.has_value() == kappa_hz.has_value()) {
        throw std::invalid_argument("exactly one of {quality, kappa} must be set");
    }
    if (quality) {
        p.quality = *quality;
        p.kappa_hz = kappa_from_quality(cavity_freq_hz, *quality);
    } else {
        if (!(*kappa_hz > 0) || !std::isfinite(*kappa_hz)) {
            throw std::invalid_argument("kappa: must be finite and > 0");
        }
        p.kappa_hz = *kappa_hz;
        p.quality = cavity_freq_hz / *kappa_hz;
    }

    if (g_hz.has_value() == mode_volume_m3.has_value()) {
        throw std::invalid_argument("exactly one of {coupling, mode_volume} must be set");
    }
    if (g_hz) {
        if (!(*g_hz > 0) || !std::isfinite(*g_hz)) {
            throw std::invalid_argument("coupling: must be finite and > 0");
        }
        p.g_hz = *g_hz;
        // invert g = gamma_e sqrt(h nu_c mu_0 / V)
        const double s = constants.gyromagnetic_ratio / *g_hz;
        p.mode_volume_m3 = constants.planck * cavity_freq_hz * constants.vacuum_permeability * s * s;
    } else {
        p.mode_volume_m3 = *mode_volume_m3;
        p.g_hz = single_spin_coupling(cavity_freq_hz, *mode_volume_m3, constants);
    }

    if (spin_count.has_value() == density_m3.has_value()) {
        throw std::invalid_argument("exactly one of {spin_count, density} must be set");
    }
    if (spin_count) {
        p.spin_count = *spin_count;
        p.density_m3 = *spin_count / p.mode_volume_m3;
    } else {
        if (!(*density_m3 > 0) || !std::isfinite(*density_m3)) {
            throw std::invalid_argument("density: must be finite and > 0");
        }
        p.density_m3 = *density_m3;
        p.spin_count = *density_m3 * p.mode_volume_m3;
    }
    if (!(p.spin_count >= 1.0)) {
        throw std::invalid_argument("spin_count: must be >= 1 (raise density or mode volume)");
    }

    // construction-time normalization check lives in SpectralDensity
    (void)p.spectral_density();
    return p;
}

}  // namespace nvsim
