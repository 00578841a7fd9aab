#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nvsim/fano.hpp"
#include "nvsim/params.hpp"
#include "nvsim/spectrum.hpp"

namespace nvsim {

/// Shot-noise photon budget. zeta multiplies out to the detected photon
/// number per measurement (per unit spectrum intensity).
struct PhotonBudget {
    double eta_det = 0.70;     // detector quantum efficiency
    double eta_ext = 0.50;     // photon extraction efficiency
    double emitters = 1.0;     // N, photon emitters
    double t_m_s = 1.0;        // read-out duration
    double gamma_cyc_hz = 1.3e8;  // cyclic transition rate
    double eta_nvqe = 0.80;    // radiative quantum efficiency

    void validate() const;
};

/// zeta = eta_det * eta_ext * N * t_m * gamma_cyc * eta_nvqe.
double photon_count(const PhotonBudget& budget);

enum class LineshapeKind { lorentzian, gaussian };

/// Max-slope constants: 4/(3 sqrt 3) for a Lorentzian, sqrt(e / (8 ln 2))
/// for a Gaussian; max |dI/dnu| = C I / (Gamma P_F) for a symmetric line.
double pf_constant(LineshapeKind kind);

/// Shot-noise-limited sensitivity deltaB = Gamma / (gamma_e C sqrt(zeta)).
double sensitivity_from_linewidth(double linewidth_hz, double contrast,
                                  double zeta,
                                  const PhysicalConstants& c = codata());

/// Numeric-slope sensitivity for arbitrary (e.g. asymmetric Fano) lineshapes:
/// deltaB = sqrt(beta) / (gamma_e t_m max|dS/dnu|) with the detected rate
/// S(nu) = (zeta / t_m) I(nu) and beta = zeta * I_peak the photons at the
/// line's intensity scale. Equals pf_constant * sensitivity_from_linewidth
/// exactly for symmetric lines of contrast (peak - baseline)/peak, and halves
/// when the intensity quadruples (shot-noise scaling).
double sensitivity_numeric(const std::function<double(double)>& intensity,
                           double freq_lo_hz, double freq_hi_hz, double zeta,
                           const PhysicalConstants& c = codata());

/// Grid-sampled overload (central differences between samples).
double sensitivity_numeric(const ComplexSpectrum& spectrum, double zeta,
                           const PhysicalConstants& c = codata());

enum class SensitivityMode { dressed, mit, fano };

std::string to_string(SensitivityMode m);
SensitivityMode sensitivity_mode_from_string(const std::string& s);

struct SensitivityCell {
    double q = 0.0;            // Q_p (dressed/mit) or Q_s (fano)
    double density_m3 = 0.0;
    double delta_b = 0.0;      // T / sqrt(Hz)
    bool protected_regime = false;  // Omega_{T,N} >= Delta_en
    bool flagged = false;      // per-cell failure; delta_b not meaningful
    double fano_detuning_hz = 0.0;  // fano mode: optimal detuning used
};

struct SensitivityMap {
    std::vector<double> q_axis;         // strictly increasing
    std::vector<double> density_axis;   // strictly increasing, m^-3
    std::vector<SensitivityCell> cells; // row-major: q outer, density inner
    SensitivityMode mode = SensitivityMode::dressed;
    SystemParams base;
    PhotonBudget budget;
    std::optional<double> contrast_override;
};

struct MapOptions {
    std::optional<double> contrast;  // pins C; otherwise measured from the spectrum
    int threads = 0;                 // 0: hardware concurrency
    std::optional<ScatterParams> scatter;  // required for mit/fano
};

/// 2-D sensitivity sweep. Per cell the quality axis resets Q_p (dressed/mit)
/// or Q_s (fano); N = density * V_eff; the linewidth follows the mode
/// (Gamma_p, Gamma_MIT, or the numeric Fano max-slope at the per-cell optimal
/// detuning). Cell evaluation order never affects the result.
SensitivityMap sensitivity_map(const SystemParams& base, const PhotonBudget& budget,
                               SensitivityMode mode, const std::vector<double>& q_grid,
                               const std::vector<double>& density_grid,
                               const MapOptions& opt = {});

}  // namespace nvsim
