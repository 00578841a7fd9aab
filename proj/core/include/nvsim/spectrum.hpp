#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nvsim/lamb_shift.hpp"
#include "nvsim/params.hpp"

namespace nvsim {

enum class SpectrumKind { cavity, ensemble, odmr, fano };

std::string to_string(SpectrumKind k);

/// Frequency grid plus complex amplitude and |amplitude|^2.
struct ComplexSpectrum {
    std::vector<double> freq_hz;              // strictly increasing
    std::vector<std::complex<double>> amplitude;
    std::vector<double> intensity;            // |amplitude|^2, kept in sync
    SpectrumKind kind = SpectrumKind::cavity;
    int branch_refinements = 0;               // grid points inserted by the phase guard

    std::size_t size() const { return freq_hz.size(); }
    void push(double f, std::complex<double> a) {
        freq_hz.push_back(f);
        amplitude.push_back(a);
        intensity.push_back(std::norm(a));
    }
};

/// Steady-state input--output response of the coupled cavity--ensemble
/// system. The denominator carries half-width losses,
///   D(w) = (nu_c - w) + Omega^2 Lambda(w) - (i/2)(kappa + gamma1 + 2 pi Omega^2 rho(w)),
/// and t_c = (i kappa / 2) / D with unit injected amplitude. Im D < 0
/// everywhere, which fixes a globally continuous square-root branch
/// sqrt(t_c) = sqrt|t_c| exp(i(pi/2 - arg D)/2) without unwrapping.
class DressedSpectrumModel {
  public:
    explicit DressedSpectrumModel(const SystemParams& params);

    const SystemParams& params() const { return params_; }
    const SpectralDensity& density() const { return density_; }
    double collective_coupling_hz() const { return omega_; }

    std::complex<double> cavity_amplitude(double freq_hz) const;   // t_c
    std::complex<double> sqrt_cavity_amplitude(double freq_hz) const;
    /// Uncoupled-spin emission: (Delta_w + i kappa) * Omega^2 Lambda(w) * sqrt(t_c) / Omega^2.
    std::complex<double> ensemble_amplitude(double freq_hz) const; // t_ens
    std::complex<double> odmr_amplitude(double freq_hz) const;     // t_c + t_ens
    double odmr_intensity(double freq_hz) const;

    /// Frequency of the upper/lower polariton intensity maximum (searched
    /// around +-Omega from the distribution center).
    double dressed_state_frequency(bool upper = true) const;

  private:
    SystemParams params_;
    SpectralDensity density_;
    double omega_;
};

/// Literal pointwise transmission (module-level op).
std::complex<double> cavity_transmission(const SystemParams& params, double freq_hz);

/// Default grid: center +- max(5 Delta_en, 3 Omega), at least 4001 points.
std::vector<double> default_spectrum_grid(const SystemParams& params,
                                          int min_points = 4001);

/// Evaluate a spectrum on a grid. For kinds involving sqrt(t_c) a phase-step
/// guard subdivides intervals where arg t_c jumps by more than pi/2
/// (branch-ambiguity detector); insertions are counted in the result.
ComplexSpectrum compute_spectrum(const DressedSpectrumModel& model,
                                 const std::vector<double>& grid,
                                 SpectrumKind kind);

/// ODMR intensity spectrum |t_c + t_ens|^2 on the grid.
ComplexSpectrum odmr_intensity(const SystemParams& params,
                               const std::vector<double>& grid);

/// Dressed-state linewidth Gamma_p = (kappa + gamma1 + 2 pi Omega^2 rho(Omega))/2,
/// the density evaluated at offset Omega from the distribution center.
double protected_linewidth(const SystemParams& params);
double protected_linewidth(double kappa_hz, double gamma1_hz, double omega_hz,
                           const SpectralDensity& density);

enum class PeakSide { lower, upper };

/// FWHM of a resolvable peak in a sampled spectrum: local-maximum detection
/// plus half-maximum crossings with linear interpolation. Throws if the peak
/// is unresolved (fewer than 3 samples above half maximum) or truncated.
double linewidth_numeric(const ComplexSpectrum& spectrum, PeakSide which_peak);

}  // namespace nvsim
