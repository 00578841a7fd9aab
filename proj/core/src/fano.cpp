#include "nvsim/fano.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nvsim/numerics.hpp"

namespace nvsim {

double wrap_phase(double phi) {
    phi = std::fmod(phi, 2.0 * M_PI);
    if (phi > M_PI) phi -= 2.0 * M_PI;
    if (phi <= -M_PI) phi += 2.0 * M_PI;
    return phi;
}

double phase_mismatch(double radius_m, double refractive_index,
                      double lambda_dress_m, double lambda_scatt_m) {
    if (!(radius_m > 0) || !(refractive_index > 0) || !(lambda_dress_m > 0) ||
        !(lambda_scatt_m > 0)) {
        throw std::invalid_argument("phase_mismatch: all arguments must be > 0");
    }
    const double rn = kTwoPi * radius_m * refractive_index;
    const double phi =
        0.5 * M_PI * (std::cos(rn / lambda_dress_m) - std::cos(rn / lambda_scatt_m));
    return wrap_phase(phi);
}

double mit_linewidth(double gamma_p_hz, double gamma_s_hz, double phase_rad) {
    if (!(gamma_p_hz > 0) || !(gamma_s_hz > 0)) {
        throw std::invalid_argument("mit_linewidth: widths must be > 0");
    }
    const std::complex<double> den =
        gamma_p_hz + std::polar(gamma_s_hz, -phase_rad);
    const double floor = 1e-12 * std::max(gamma_p_hz, gamma_s_hz);
    if (std::abs(den) < floor) {
        throw std::runtime_error(
            "mit_linewidth: destructive divergence (phi -> pi with Gamma_p ~ Gamma_s)");
    }
    return std::abs(gamma_p_hz * gamma_s_hz / den);
}

FanoModel::FanoModel(const SystemParams& params, const ScatterParams& scatter)
    : dressed_(params), scatter_(scatter) {
    if (!(scatter.quality > 0) || !(scatter.freq_hz > 0)) {
        throw std::invalid_argument("FanoModel: scatter quality and frequency must be > 0");
    }
    if (scatter.amplitude < 0) {
        throw std::invalid_argument("FanoModel: scatter amplitude must be >= 0");
    }
    scatter_.phase_rad = wrap_phase(scatter.phase_rad);
    phase_factor_ = std::polar(1.0, -scatter_.phase_rad);
}

std::complex<double> FanoModel::scatter_amplitude(double f) const {
    const double half = 0.5 * scatter_.linewidth_hz();
    const std::complex<double> den(scatter_.freq_hz - f, -half);
    return scatter_.amplitude * std::complex<double>(0.0, half) / den;
}

std::complex<double> FanoModel::total_amplitude(double f) const {
    return dressed_.odmr_amplitude(f) + phase_factor_ * scatter_amplitude(f);
}

double FanoModel::intensity(double f) const { return std::norm(total_amplitude(f)); }

ComplexSpectrum fano_spectrum(const SystemParams& params,
                              const ScatterParams& scatter,
                              const std::vector<double>& grid) {
    if (grid.size() < 2 || !std::is_sorted(grid.begin(), grid.end())) {
        throw std::invalid_argument("fano_spectrum: grid must be increasing with >= 2 points");
    }
    FanoModel model(params, scatter);

    const double gamma_p = protected_linewidth(params);
    const double gamma_s = scatter.linewidth_hz();
    double finest = std::min(gamma_p, gamma_s);
    if (scatter.amplitude > 0) {
        try {
            finest = std::min(finest, mit_linewidth(gamma_p, gamma_s, scatter.phase_rad));
        } catch (const std::runtime_error&) {
            // divergent MIT window is broader than either line; widths above suffice
        }
    }
    double max_step = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        max_step = std::max(max_step, grid[i] - grid[i - 1]);
    }
    if (max_step > finest / 10.0) {
        std::ostringstream os;
        os << "fano_spectrum: grid step " << max_step << " Hz cannot resolve the narrowest width "
           << finest << " Hz; use spacing <= " << finest / 10.0 << " Hz";
        throw std::invalid_argument(os.str());
    }

    ComplexSpectrum out;
    out.kind = SpectrumKind::fano;
    for (double f : grid) out.push(f, model.total_amplitude(f));
    return out;
}

std::vector<SlopeRow> slope_enhancement(const SystemParams& params,
                                        ScatterParams scatter,
                                        const std::vector<double>& detunings_hz) {
    DressedSpectrumModel dressed(params);
    const double f_dress = dressed.dressed_state_frequency(true);
    const double gamma_p = protected_linewidth(params);
    const double gamma_s = scatter.linewidth_hz();
    const double window = 12.0 * (gamma_p + gamma_s);

    // unscattered reference slope around the dressed state
    auto ref_intensity = [&](double f) { return dressed.odmr_intensity(f); };
    const SlopePoint ref =
        max_abs_slope(ref_intensity, f_dress - window, f_dress + window, 513);
    if (!(ref.slope > 0)) {
        throw std::runtime_error("slope_enhancement: vanishing reference slope");
    }

    std::vector<SlopeRow> rows;
    rows.reserve(detunings_hz.size());
    for (double det : detunings_hz) {
        ScatterParams sc = scatter;
        sc.freq_hz = f_dress - det;
        sc.quality = scatter.quality * (sc.freq_hz / scatter.freq_hz);  // keep Gamma_s fixed
        FanoModel model(params, sc);
        auto inten = [&](double f) { return model.intensity(f); };
        const double lo = std::min(f_dress, sc.freq_hz) - window;
        const double hi = std::max(f_dress, sc.freq_hz) + window;
        const SlopePoint best = max_abs_slope(inten, lo, hi, 1025);
        rows.push_back({det, best.slope / ref.slope, best.freq_hz});
    }
    return rows;
}

}  // namespace nvsim
