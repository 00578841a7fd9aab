#pragma once

#include <optional>
#include <string>

#include "nvsim/constants.hpp"
#include "nvsim/spectral_density.hpp"

namespace nvsim {

enum class ThermalArgument { physical, literal };

/// Mean thermal photon number 1/(exp(h nu / kB T) - 1).
/// Exact 0 at T = 0 (dedicated branch, not a limit).
double thermal_occupation(double freq_hz, double temperature_k,
                          const PhysicalConstants& c = codata());

/// Thermal polarization factor tanh(theta). The physical convention is
/// theta = h nu / (2 kB T), which equals 1/(2 nbar + 1); the literal
/// convention divides theta by 2 pi^2. Returns exactly 1 at T = 0.
double thermal_tanh(double freq_hz, double temperature_k,
                    ThermalArgument convention = ThermalArgument::physical,
                    const PhysicalConstants& c = codata());

/// Single-spin magnetic coupling g = gamma_e sqrt(h nu_c mu_0 / V_eff), Hz.
double single_spin_coupling(double cavity_freq_hz, double mode_volume_m3,
                            const PhysicalConstants& c = codata());

/// Collective coupling Omega_{T,N} = g sqrt(N tanh(theta)), Hz.
double collective_coupling(double g_hz, double spin_count, double spin_freq_hz,
                           double temperature_k,
                           ThermalArgument convention = ThermalArgument::physical,
                           const PhysicalConstants& c = codata());

/// Spin--spin dipole coupling scale gamma_e^2 mu_0 / 2h restored to SI:
/// mu_0 (h gamma_e)^2 / (2 h) = mu_0 h gamma_e^2 / 2, in Hz m^3.
/// Report-only; quantifies why direct dipole coupling is neglected.
double dipole_dipole_scale(const PhysicalConstants& c = codata());

/// Cavity linewidth from quality factor, kappa = nu_c / Q.
double kappa_from_quality(double cavity_freq_hz, double quality);

/// All physical inputs of one simulation scenario, fully resolved.
/// Exactly one of {kappa, quality}, {g, mode volume}, {N, density} is
/// caller-supplied; the partner quantity is derived on construction.
struct SystemParams {
    double cavity_freq_hz = 3e9;     // nu_c
    double spin_freq_hz = 3e9;       // nu_0 (distribution center)
    double quality = 1e6;            // Q_p
    double kappa_hz = 3e3;           // cavity linewidth, nu_c/Q_p
    double gamma1_hz = 250.0;        // longitudinal relaxation 1/T1
    double gamma2_hz = 1e6;          // dephasing width; equals Delta_en
    double pump_hz = 0.0;            // incoherent pump/probe rate v
    double g_hz = 1.0;               // single-spin coupling
    double mode_volume_m3 = 0.0;     // V_eff
    double spin_count = 1.0;         // N (double: values up to 1e20)
    double density_m3 = 0.0;         // n_v
    double temperature_k = 300.0;    // T
    DensityKind distribution = DensityKind::gaussian;
    double mixing = 0.2;             // pseudo-Voigt Lorentzian fraction
    ThermalArgument thermal_argument = ThermalArgument::physical;
    PhysicalConstants constants{};

    double delta_en_hz() const { return gamma2_hz; }

    /// nbar at the cavity frequency.
    double nbar_cavity() const {
        return thermal_occupation(cavity_freq_hz, temperature_k, constants);
    }
    /// nbar at the spin center frequency.
    double nbar_spin() const {
        return thermal_occupation(spin_freq_hz, temperature_k, constants);
    }
    /// Omega_{T,N} for this parameter set.
    double collective_coupling_hz() const {
        return nvsim::collective_coupling(g_hz, spin_count, spin_freq_hz,
                                          temperature_k, thermal_argument,
                                          constants);
    }
    SpectralDensity spectral_density() const {
        return SpectralDensity(distribution, gamma2_hz, spin_freq_hz, mixing);
    }
};

/// Builder with the mutually-exclusive input triples left optional.
struct SystemParamsInput {
    double cavity_freq_hz = 3e9;
    double spin_freq_hz = 3e9;
    std::optional<double> quality;
    std::optional<double> kappa_hz;
    double gamma1_hz = 250.0;
    double gamma2_hz = 1e6;
    double pump_hz = 0.0;
    std::optional<double> g_hz;
    std::optional<double> mode_volume_m3;
    std::optional<double> spin_count;
    std::optional<double> density_m3;
    double temperature_k = 300.0;
    DensityKind distribution = DensityKind::gaussian;
    double mixing = 0.2;
    ThermalArgument thermal_argument = ThermalArgument::physical;
    PhysicalConstants constants{};

    /// Validates and resolves the derived quantities. Throws
    /// std::invalid_argument naming the offending field.
    SystemParams resolve() const;
};

}  // namespace nvsim
