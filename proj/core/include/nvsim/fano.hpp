#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "nvsim/spectrum.hpp"

namespace nvsim {

/// Uncoupled scattering mode interfering with the dressed state.
struct ScatterParams {
    double quality = 1e6;        // Q_s
    double freq_hz = 3e9;        // omega_s
    double phase_rad = 0.0;      // phi, wrapped to (-pi, pi]
    double amplitude = 1.0;      // peak amplitude of the unit Lorentzian profile

    double linewidth_hz() const { return freq_hz / quality; }  // Gamma_s
};

/// Wrap an angle to (-pi, pi].
double wrap_phase(double phi);

/// Disk-resonator phase mismatch between first-order radial modes:
/// phi = (pi/2)(cos(2 pi r n / lambda_dress) - cos(2 pi r n / lambda_scatt)),
/// wrapped to (-pi, pi].
double phase_mismatch(double radius_m, double refractive_index,
                      double lambda_dress_m, double lambda_scatt_m);

/// MIT window width |Gamma_p Gamma_s / (Gamma_p + e^{-i phi} Gamma_s)|.
/// Throws when the denominator collapses (phi ~ pi with Gamma_p ~ Gamma_s).
double mit_linewidth(double gamma_p_hz, double gamma_s_hz, double phase_rad);

/// Composite interference model: |t_c + t_ens + e^{-i phi} t_scatt|^2 with
/// t_scatt a unit-peak complex Lorentzian of FWHM Gamma_s at omega_s (same
/// normalization convention as the bare-cavity t_c peak).
class FanoModel {
  public:
    FanoModel(const SystemParams& params, const ScatterParams& scatter);

    const DressedSpectrumModel& dressed() const { return dressed_; }
    const ScatterParams& scatter() const { return scatter_; }

    std::complex<double> scatter_amplitude(double freq_hz) const;
    std::complex<double> total_amplitude(double freq_hz) const;
    double intensity(double freq_hz) const;

  private:
    DressedSpectrumModel dressed_;
    ScatterParams scatter_;
    std::complex<double> phase_factor_;
};

/// Fano spectrum on a grid. The grid spacing must resolve
/// min(Gamma_p, Gamma_s, Gamma_MIT) with at least 10 points; otherwise an
/// error carrying a suggested spacing is thrown.
ComplexSpectrum fano_spectrum(const SystemParams& params,
                              const ScatterParams& scatter,
                              const std::vector<double>& grid);

struct SlopeRow {
    double detuning_hz = 0.0;     // dressed-state frequency minus omega_s
    double slope_ratio = 0.0;     // max |dI_fano/df| / max |dI_odmr/df|
    double argmax_freq_hz = 0.0;  // where the Fano slope peaks
};

/// Maximum-slope enhancement versus scatterer detuning. The scatterer is
/// moved relative to the (fixed) upper dressed state; each row is the peak
/// |dI/df| of the composite spectrum normalized to the unscattered one.
std::vector<SlopeRow> slope_enhancement(const SystemParams& params,
                                        ScatterParams scatter,
                                        const std::vector<double>& detunings_hz);

}  // namespace nvsim
