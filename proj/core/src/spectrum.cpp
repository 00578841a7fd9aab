#include "nvsim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "nvsim/numerics.hpp"

namespace nvsim {

namespace {
constexpr double kHalfPi = 1.5707963267948966192;
}

std::string to_string(SpectrumKind k) {
    switch (k) {
        case SpectrumKind::cavity: return "cavity";
        case SpectrumKind::ensemble: return "ensemble";
        case SpectrumKind::odmr: return "odmr";
        case SpectrumKind::fano: return "fano";
    }
    return "?";
}

DressedSpectrumModel::DressedSpectrumModel(const SystemParams& params)
    : params_(params),
      density_(params.spectral_density()),
      omega_(params.collective_coupling_hz()) {}

std::complex<double> DressedSpectrumModel::cavity_amplitude(double f) const {
    const double kappa = params_.kappa_hz;
    const double o2 = omega_ * omega_;
    const double re = (params_.cavity_freq_hz - f) + o2 * lamb_shift(density_, f);
    const double im = -0.5 * (kappa + params_.gamma1_hz + kTwoPi * o2 * density_(f));
    const std::complex<double> D(re, im);
    return std::complex<double>(0.0, 0.5 * kappa) / D;
}

std::complex<double> DressedSpectrumModel::sqrt_cavity_amplitude(double f) const {
    const double kappa = params_.kappa_hz;
    const double o2 = omega_ * omega_;
    const double re = (params_.cavity_freq_hz - f) + o2 * lamb_shift(density_, f);
    const double im = -0.5 * (kappa + params_.gamma1_hz + kTwoPi * o2 * density_(f));
    // Im D < 0 strictly: arg D in (-pi, 0), continuous in f.
    const double mag = 0.5 * kappa / std::hypot(re, im);
    const double phase = kHalfPi - std::atan2(im, re);
    return std::sqrt(mag) * std::polar(1.0, 0.5 * phase);
}

std::complex<double> DressedSpectrumModel::ensemble_amplitude(double f) const {
    const double dw = params_.cavity_freq_hz - f;
    const std::complex<double> pre(dw, params_.kappa_hz);
    // Omega^2 Lambda / Omega^2: the collective weight cancels.
    return pre * lamb_shift(density_, f) * sqrt_cavity_amplitude(f);
}

std::complex<double> DressedSpectrumModel::odmr_amplitude(double f) const {
    return cavity_amplitude(f) + ensemble_amplitude(f);
}

double DressedSpectrumModel::odmr_intensity(double f) const {
    return std::norm(odmr_amplitude(f));
}

double DressedSpectrumModel::dressed_state_frequency(bool upper) const {
    const double c = density_.center();
    const double sign = upper ? 1.0 : -1.0;
    const double guess = c + sign * omega_;
    const double span = std::max(0.5 * omega_, 5.0 * density_.fwhm());
    auto inten = [this](double f) { return std::norm(cavity_amplitude(f)); };
    return golden_section_max(inten, guess - span, guess + span, 1e-13);
}

std::complex<double> cavity_transmission(const SystemParams& params, double freq_hz) {
    return DressedSpectrumModel(params).cavity_amplitude(freq_hz);
}

std::vector<double> default_spectrum_grid(const SystemParams& params, int min_points) {
    const double omega = params.collective_coupling_hz();
    const double span = std::max(5.0 * params.gamma2_hz, 3.0 * omega);
    const double c = params.spin_freq_hz;
    std::vector<double> grid(static_cast<std::size_t>(min_points));
    for (int i = 0; i < min_points; ++i) {
        grid[static_cast<std::size_t>(i)] = c - span + 2.0 * span * i / (min_points - 1);
    }
    return grid;
}

ComplexSpectrum compute_spectrum(const DressedSpectrumModel& model,
                                 const std::vector<double>& grid,
                                 SpectrumKind kind) {
    if (grid.size() < 2 || !std::is_sorted(grid.begin(), grid.end())) {
        throw std::invalid_argument("compute_spectrum: grid must be increasing with >= 2 points");
    }
    auto amp = [&](double f) -> std::complex<double> {
        switch (kind) {
            case SpectrumKind::cavity: return model.cavity_amplitude(f);
            case SpectrumKind::ensemble: return model.ensemble_amplitude(f);
            case SpectrumKind::odmr: return model.odmr_amplitude(f);
            default:
                throw std::invalid_argument("compute_spectrum: fano spectra are built by the interference module");
        }
    };

    ComplexSpectrum out;
    out.kind = kind;
    const bool guard = (kind != SpectrumKind::cavity);

    // phase of t_c between adjacent points; subdivide ambiguous steps
    auto tc_phase = [&](double f) {
        const auto t = model.cavity_amplitude(f);
        return std::atan2(t.imag(), t.real());
    };

    std::deque<double> pending(grid.begin(), grid.end());
    double prev_f = pending.front();
    std::complex<double> prev_a = amp(prev_f);
    double prev_ph = guard ? tc_phase(prev_f) : 0.0;
    out.push(prev_f, prev_a);
    pending.pop_front();

    while (!pending.empty()) {
        const double f = pending.front();
        if (guard) {
            const double ph = tc_phase(f);
            double d = ph - prev_ph;
            while (d > M_PI) d -= 2.0 * M_PI;
            while (d < -M_PI) d += 2.0 * M_PI;
            const double min_step = 1e-9 * std::max(std::abs(f), 1.0);
            if (std::abs(d) > kHalfPi && (f - prev_f) > min_step &&
                out.branch_refinements < 1 << 16) {
                pending.push_front(0.5 * (prev_f + f));
                ++out.branch_refinements;
                continue;
            }
            prev_ph = ph;
        }
        pending.pop_front();
        prev_f = f;
        prev_a = amp(f);
        out.push(f, prev_a);
    }
    return out;
}

ComplexSpectrum odmr_intensity(const SystemParams& params,
                               const std::vector<double>& grid) {
    return compute_spectrum(DressedSpectrumModel(params), grid, SpectrumKind::odmr);
}

double protected_linewidth(double kappa_hz, double gamma1_hz, double omega_hz,
                           const SpectralDensity& density) {
    if (!(omega_hz > 0)) throw std::invalid_argument("protected_linewidth: Omega must be > 0");
    const double rho = density(density.center() + omega_hz);
    return 0.5 * (kappa_hz + gamma1_hz + kTwoPi * omega_hz * omega_hz * rho);
}

double protected_linewidth(const SystemParams& params) {
    return protected_linewidth(params.kappa_hz, params.gamma1_hz,
                               params.collective_coupling_hz(),
                               params.spectral_density());
}

double linewidth_numeric(const ComplexSpectrum& spectrum, PeakSide which_peak) {
    const auto& f = spectrum.freq_hz;
    const auto& I = spectrum.intensity;
    const std::size_t n = f.size();
    if (n < 5) throw std::invalid_argument("linewidth_numeric: spectrum too short");

    // local maxima
    std::vector<std::size_t> maxima;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (I[i] > I[i - 1] && I[i] >= I[i + 1]) maxima.push_back(i);
    }
    if (maxima.empty()) throw std::runtime_error("linewidth_numeric: no local maximum found");
    std::sort(maxima.begin(), maxima.end(),
              [&](std::size_t a, std::size_t b) { return I[a] > I[b]; });
    std::size_t peak;
    if (maxima.size() == 1) {
        peak = maxima[0];
    } else {
        const std::size_t a = maxima[0], b = maxima[1];
        const std::size_t lower = f[a] < f[b] ? a : b;
        const std::size_t upper = f[a] < f[b] ? b : a;
        peak = (which_peak == PeakSide::upper) ? upper : lower;
    }

    const double half = 0.5 * I[peak];
    std::size_t above = 0;
    for (std::size_t i = peak; i < n && I[i] > half; ++i) ++above;
    for (std::size_t i = peak; i-- > 0 && I[i] > half;) ++above;
    if (above < 3) {
        throw std::runtime_error("linewidth_numeric: peak unresolved (fewer than 3 points above half maximum)");
    }

    auto cross = [&](bool rightward) -> double {
        std::size_t i = peak;
        while (true) {
            const std::size_t j = rightward ? i + 1 : i - 1;
            if ((rightward && j >= n) || (!rightward && i == 0)) {
                throw std::runtime_error("linewidth_numeric: half-maximum crossing truncated by grid edge");
            }
            if (I[j] <= half) {
                const double t = (I[i] - half) / (I[i] - I[j]);
                return f[i] + t * (f[j] - f[i]);
            }
            i = j;
        }
    };
    const double right = cross(true);
    const double left = cross(false);
    return right - left;
}

}  // namespace nvsim
