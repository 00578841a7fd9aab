#include "nvsim/sensitivity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "nvsim/numerics.hpp"

namespace nvsim {

void PhotonBudget::validate() const {
    auto eff = [](double e, const char* name) {
        if (!(e > 0.0) || e > 1.0 || !std::isfinite(e)) {
            throw std::invalid_argument(std::string("PhotonBudget.") + name +
                                        ": efficiency must lie in (0, 1]");
        }
    };
    eff(eta_det, "eta_det");
    eff(eta_ext, "eta_ext");
    eff(eta_nvqe, "eta_nvqe");
    if (!(emitters >= 1.0)) throw std::invalid_argument("PhotonBudget.emitters: must be >= 1");
    if (!(t_m_s > 0.0)) throw std::invalid_argument("PhotonBudget.t_m: must be > 0");
    if (!(gamma_cyc_hz > 0.0)) throw std::invalid_argument("PhotonBudget.gamma_cyc: must be > 0");
}

double photon_count(const PhotonBudget& b) {
    b.validate();
    return b.eta_det * b.eta_ext * b.emitters * b.t_m_s * b.gamma_cyc_hz * b.eta_nvqe;
}

double pf_constant(LineshapeKind kind) {
    switch (kind) {
        case LineshapeKind::lorentzian: return 4.0 / (3.0 * std::sqrt(3.0));
        case LineshapeKind::gaussian: return std::sqrt(M_E / (8.0 * M_LN2));
    }
    return 0.0;
}

double sensitivity_from_linewidth(double linewidth_hz, double contrast, double zeta,
                                  const PhysicalConstants& c) {
    if (!(linewidth_hz > 0)) throw std::invalid_argument("sensitivity: linewidth must be > 0");
    if (!(contrast > 0.0) || contrast > 1.0) {
        throw std::invalid_argument("sensitivity: contrast must lie in (0, 1]");
    }
    if (!(zeta > 0)) throw std::invalid_argument("sensitivity: zeta must be > 0");
    return linewidth_hz / (c.gyromagnetic_ratio * contrast * std::sqrt(zeta));
}

double sensitivity_numeric(const std::function<double(double)>& intensity,
                           double freq_lo_hz, double freq_hi_hz, double zeta,
                           const PhysicalConstants& c) {
    if (!(zeta > 0)) throw std::invalid_argument("sensitivity_numeric: zeta must be > 0");
    const SlopePoint best = max_abs_slope(intensity, freq_lo_hz, freq_hi_hz, 1025);
    if (!(best.slope > 0)) {
        throw std::runtime_error("sensitivity_numeric: vanishing spectral slope");
    }
    // shot noise referenced to the line's intensity scale (the peak level the
    // photon budget is calibrated against): beta = zeta * I_peak
    double peak = 0.0;
    for (int i = 0; i <= 1024; ++i) {
        const double f = freq_lo_hz + (freq_hi_hz - freq_lo_hz) * i / 1024.0;
        peak = std::max(peak, intensity(f));
    }
    if (!(peak > 0) || !std::isfinite(peak)) {
        throw std::runtime_error("sensitivity_numeric: invalid peak intensity");
    }
    return std::sqrt(peak / zeta) / (c.gyromagnetic_ratio * best.slope);
}

double sensitivity_numeric(const ComplexSpectrum& spectrum, double zeta,
                           const PhysicalConstants& c) {
    const auto& f = spectrum.freq_hz;
    const auto& I = spectrum.intensity;
    if (f.size() < 4) throw std::invalid_argument("sensitivity_numeric: spectrum too short");
    if (!(zeta > 0)) throw std::invalid_argument("sensitivity_numeric: zeta must be > 0");
    double best = 0.0;
    double peak = std::max(I.front(), I.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        const double s = std::abs((I[i + 1] - I[i - 1]) / (f[i + 1] - f[i - 1]));
        best = std::max(best, s);
        peak = std::max(peak, I[i]);
    }
    if (!(best > 0)) throw std::runtime_error("sensitivity_numeric: vanishing spectral slope");
    if (!(peak > 0)) throw std::runtime_error("sensitivity_numeric: invalid peak intensity");
    return std::sqrt(peak / zeta) / (c.gyromagnetic_ratio * best);
}

std::string to_string(SensitivityMode m) {
    switch (m) {
        case SensitivityMode::dressed: return "dressed";
        case SensitivityMode::mit: return "mit";
        case SensitivityMode::fano: return "fano";
    }
    return "?";
}

SensitivityMode sensitivity_mode_from_string(const std::string& s) {
    if (s == "dressed") return SensitivityMode::dressed;
    if (s == "mit") return SensitivityMode::mit;
    if (s == "fano") return SensitivityMode::fano;
    throw std::invalid_argument("sensitivity mode: unknown '" + s + "'");
}

namespace {

// Contrast measured from the dressed spectrum: (peak - baseline)/peak with
// the baseline sampled 10 linewidths off the peak.
double measured_contrast(const DressedSpectrumModel& model, double gamma_p) {
    const double f_peak = model.dressed_state_frequency(true);
    const double peak = model.odmr_intensity(f_peak);
    const double base = model.odmr_intensity(f_peak + 10.0 * gamma_p);
    if (!(peak > 0)) return 1.0;
    const double c = (peak - base) / peak;
    return std::clamp(c, 1e-6, 1.0);
}

SensitivityCell evaluate_cell(const SystemParams& base, const PhotonBudget& budget,
                              SensitivityMode mode, const MapOptions& opt,
                              double q, double density_m3) {
    SensitivityCell cell;
    cell.q = q;
    cell.density_m3 = density_m3;
    try {
        SystemParams p = base;
        p.density_m3 = density_m3;
        p.spin_count = density_m3 * p.mode_volume_m3;
        if (p.spin_count < 1.0) throw std::runtime_error("cell: fewer than one spin");

        ScatterParams scatter;
        if (mode != SensitivityMode::dressed) {
            if (!opt.scatter) throw std::runtime_error("cell: scatter parameters required");
            scatter = *opt.scatter;
        }
        if (mode == SensitivityMode::fano) {
            scatter.quality = q;  // fano maps sweep the scattering-mode quality
        } else {
            p.quality = q;
            p.kappa_hz = kappa_from_quality(p.cavity_freq_hz, q);
        }

        const double omega = p.collective_coupling_hz();
        cell.protected_regime = omega >= p.delta_en_hz();

        PhotonBudget b = budget;
        b.emitters = p.spin_count;
        const double zeta = photon_count(b);

        const double gamma_p = protected_linewidth(p);

        switch (mode) {
            case SensitivityMode::dressed: {
                const double C = opt.contrast
                                     ? *opt.contrast
                                     : measured_contrast(DressedSpectrumModel(p), gamma_p);
                cell.delta_b = sensitivity_from_linewidth(gamma_p, C, zeta, p.constants);
                break;
            }
            case SensitivityMode::mit: {
                const double g_mit =
                    mit_linewidth(gamma_p, scatter.linewidth_hz(), scatter.phase_rad);
                // transparency window carries half the dressed-state contrast
                const double C0 = opt.contrast
                                      ? *opt.contrast
                                      : measured_contrast(DressedSpectrumModel(p), gamma_p);
                cell.delta_b = sensitivity_from_linewidth(g_mit, 0.5 * C0, zeta, p.constants);
                break;
            }
            case SensitivityMode::fano: {
                DressedSpectrumModel dressed(p);
                const double f_dress = dressed.dressed_state_frequency(true);
                const double gamma_s = scatter.linewidth_hz();
                // coarse detuning scan, then refine around the best ratio
                std::vector<double> dets;
                const double span = 4.0 * (gamma_p + gamma_s);
                for (int i = 0; i <= 16; ++i) {
                    dets.push_back(-span + 2.0 * span * i / 16.0);
                }
                auto rows = slope_enhancement(p, scatter, dets);
                const auto* best = &rows.front();
                for (const auto& r : rows) {
                    if (r.slope_ratio > best->slope_ratio) best = &r;
                }
                double det = best->detuning_hz;
                // local refinement
                const double dstep = 2.0 * span / 16.0;
                std::vector<double> fine;
                for (int i = -3; i <= 3; ++i) fine.push_back(det + dstep * i / 3.0);
                auto fine_rows = slope_enhancement(p, scatter, fine);
                for (const auto& r : fine_rows) {
                    if (r.slope_ratio > best->slope_ratio) {
                        det = r.detuning_hz;
                        best = &r;
                    }
                }
                cell.fano_detuning_hz = det;
                ScatterParams sc = scatter;
                sc.freq_hz = f_dress - det;
                sc.quality = scatter.quality * (sc.freq_hz / scatter.freq_hz);
                FanoModel model(p, sc);
                const double window = 12.0 * (gamma_p + gamma_s);
                const double lo = std::min(f_dress, sc.freq_hz) - window;
                const double hi = std::max(f_dress, sc.freq_hz) + window;
                cell.delta_b = sensitivity_numeric(
                    [&](double f) { return model.intensity(f); }, lo, hi, zeta, p.constants);
                break;
            }
        }
        if (!(cell.delta_b > 0) || !std::isfinite(cell.delta_b)) {
            throw std::runtime_error("cell: non-finite sensitivity");
        }
    } catch (const std::exception&) {
        cell.flagged = true;
        cell.delta_b = 0.0;
    }
    return cell;
}

}  // namespace

SensitivityMap sensitivity_map(const SystemParams& base, const PhotonBudget& budget,
                               SensitivityMode mode, const std::vector<double>& q_grid,
                               const std::vector<double>& density_grid,
                               const MapOptions& opt) {
    if (q_grid.empty() || density_grid.empty()) {
        throw std::invalid_argument("sensitivity_map: grids must be nonempty");
    }
    if (!std::is_sorted(q_grid.begin(), q_grid.end()) ||
        !std::is_sorted(density_grid.begin(), density_grid.end())) {
        throw std::invalid_argument("sensitivity_map: grid axes must be increasing");
    }
    if (mode != SensitivityMode::dressed && !opt.scatter) {
        throw std::invalid_argument("sensitivity_map: mit/fano modes need scatter parameters");
    }
    budget.validate();

    SensitivityMap map;
    map.q_axis = q_grid;
    map.density_axis = density_grid;
    map.mode = mode;
    map.base = base;
    map.budget = budget;
    map.contrast_override = opt.contrast;
    map.cells.resize(q_grid.size() * density_grid.size());

    const std::size_t total = map.cells.size();
    unsigned n_threads = opt.threads > 0 ? static_cast<unsigned>(opt.threads)
                                         : std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(total));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) break;
            const std::size_t qi = i / density_grid.size();
            const std::size_t di = i % density_grid.size();
            map.cells[i] = evaluate_cell(base, budget, mode, opt, q_grid[qi],
                                         density_grid[di]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return map;
}

}  // namespace nvsim
