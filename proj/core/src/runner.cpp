#include "nvsim/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>

#include "nvsim/csv.hpp"
#include "nvsim/cumulant.hpp"
#include "nvsim/fano.hpp"
#include "nvsim/numerics.hpp"
#include "nvsim/spectrum.hpp"
#include "nvsim/version.hpp"

namespace nvsim {

namespace {

using nlohmann::json;

std::string provenance(const Scenario& sc, const std::vector<std::string>& columns) {
    json j;
    j["name"] = sc.name;
    j["task"] = to_string(sc.task);
    j["fingerprint"] = sc.fingerprint;
    j["version"] = kVersion;
    j["columns"] = columns;
    json cfg;
    for (const auto& [k, v] : sc.canonical) cfg[k] = v;
    j["config"] = cfg;
    return j.dump();
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads)
                                     : std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return g;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double r = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo * std::exp(r * i);
    g.back() = hi;
    return g;
}

ScatterParams resolve_scatter(const Scenario& sc, const SystemParams& params) {
    ScatterParams s = sc.scatter->params;
    if (sc.scatter->at_dressed_state) {
        DressedSpectrumModel model(params);
        s.freq_hz = model.dressed_state_frequency(true);
    }
    return s;
}

RunResult run_dynamics(const Scenario& sc, const RunOptions& opt) {
    const auto& d = *sc.dynamics;
    CumulantState init;
    if (d.initial == "thermal") {
        init = thermal_initial_state(sc.params);
    } else {
        init = CumulantState{-1.0, 0.0, {0.0, 0.0}, 0.0};
    }
    init.coherence += std::complex<double>(d.coherence_seed, 0.0);

    SamplingGrid grid{d.t_end_s, d.samples, d.log_spacing};
    IntegrationOptions iopt;
    iopt.rel_tol = d.rel_tol;
    iopt.abs_tol = d.abs_tol;
    const Trajectory traj = integrate(init, sc.params, grid, iopt);

    const std::vector<std::string> cols = {"time_s",       "sigma_z",
                                           "photon_number", "re_coherence",
                                           "im_coherence",  "spin_excitation"};
    CsvWriter csv(provenance(sc, cols), cols);
    for (std::size_t i = 0; i < traj.times_s.size(); ++i) {
        const auto& s = traj.states[i];
        csv.add_row({traj.times_s[i], s.sigma_z, s.photon_number, s.coherence.real(),
                     s.coherence.imag(), s.spin_excitation});
    }
    RunResult res;
    res.points = csv.rows();
    const auto path = opt.out_dir / (sc.name + "_trajectory.csv");
    csv.write(path);
    res.files.push_back(path);
    return res;
}

RunResult run_steady_state(const Scenario& sc, const RunOptions& opt) {
    const auto& s = *sc.steady_state;
    const auto pumps = logspace(s.pump_min_hz, s.pump_max_hz, s.pump_steps);
    const auto temps = linspace(s.temp_min_k, s.temp_max_k, s.temp_steps);

    const std::vector<std::string> cols = {"pump_hz", "temperature_k", "sigma_z_ss",
                                           "photon_ss"};
    CsvWriter csv(provenance(sc, cols), cols);
    for (double v : pumps) {
        for (double T : temps) {
            SystemParams p = sc.params;
            p.pump_hz = v;
            p.temperature_k = T;
            // the printed closed forms at the thermal initialization
            const SteadyState ss = steady_state(p);
            csv.add_row({v, T, ss.sigma_z, ss.photon_number});
        }
    }
    RunResult res;
    res.points = csv.rows();
    const auto path = opt.out_dir / (sc.name + "_steady_state.csv");
    csv.write(path);
    res.files.push_back(path);
    return res;
}

RunResult run_spectrum(const Scenario& sc, const RunOptions& opt) {
    const auto& s = *sc.spectrum;
    RunResult res;

    auto make_grid = [&](const SystemParams& p) {
        if (s.span_hz > 0) {
            return linspace(p.spin_freq_hz - s.span_hz, p.spin_freq_hz + s.span_hz, s.points);
        }
        return default_spectrum_grid(p, s.points);
    };
    const SpectrumKind kind =
        (s.quantity == "odmr") ? SpectrumKind::odmr : SpectrumKind::cavity;

    if (s.quantity == "linewidth_sweep") {
        const auto ratios =
            logspace(s.coupling_min_ratio, s.coupling_max_ratio, s.coupling_steps);
        const double den = sc.params.gamma2_hz;
        const SpectralDensity g(DensityKind::gaussian, den, sc.params.spin_freq_hz);
        const SpectralDensity l(DensityKind::lorentzian, den, sc.params.spin_freq_hz);
        const SpectralDensity pv(DensityKind::pseudo_voigt, den, sc.params.spin_freq_hz,
                                 sc.params.mixing);
        const ScatterParams scatter = resolve_scatter(sc, sc.params);
        const std::vector<std::string> cols = {
            "collective_coupling_hz",   "gamma_p_gaussian_hz", "gamma_p_lorentzian_hz",
            "gamma_p_pseudo_voigt_hz", "gamma_mit_hz"};
        CsvWriter csv(provenance(sc, cols), cols);
        for (double r : ratios) {
            const double omega = r * den;
            const double gp_g = protected_linewidth(sc.params.kappa_hz, sc.params.gamma1_hz, omega, g);
            const double gp_l = protected_linewidth(sc.params.kappa_hz, sc.params.gamma1_hz, omega, l);
            const double gp_pv = protected_linewidth(sc.params.kappa_hz, sc.params.gamma1_hz, omega, pv);
            double gmit = std::nan("");
            try {
                gmit = mit_linewidth(gp_g, scatter.linewidth_hz(), scatter.phase_rad);
            } catch (const std::runtime_error&) {
                // divergent window; recorded as nan
            }
            csv.add_row({omega, gp_g, gp_l, gp_pv, gmit});
        }
        res.points = csv.rows();
        const auto path = opt.out_dir / (sc.name + "_linewidths.csv");
        csv.write(path);
        res.files.push_back(path);
        return res;
    }

    if (s.sweep == "none") {
        const DressedSpectrumModel model(sc.params);
        const ComplexSpectrum spec = compute_spectrum(model, make_grid(sc.params), kind);
        const std::vector<std::string> cols = {"freq_hz", "re_amp", "im_amp", "intensity"};
        CsvWriter csv(provenance(sc, cols), cols);
        for (std::size_t i = 0; i < spec.size(); ++i) {
            csv.add_row({spec.freq_hz[i], spec.amplitude[i].real(), spec.amplitude[i].imag(),
                         spec.intensity[i]});
        }
        res.points = csv.rows();
        const auto path = opt.out_dir / (sc.name + "_spectrum.csv");
        csv.write(path);
        res.files.push_back(path);
        return res;
    }

    if (s.sweep == "cavity_detuning") {
        const auto dets = linspace(s.sweep_min, s.sweep_max, s.sweep_steps);
        std::vector<ComplexSpectrum> specs(dets.size());
        parallel_for(dets.size(), opt.threads, [&](std::size_t i) {
            SystemParams p = sc.params;
            p.cavity_freq_hz = p.spin_freq_hz + dets[i];
            p.kappa_hz = kappa_from_quality(p.cavity_freq_hz, p.quality);
            specs[i] = compute_spectrum(DressedSpectrumModel(p), make_grid(p), kind);
        });
        const std::vector<std::string> cols = {"detuning_hz", "freq_hz", "intensity"};
        CsvWriter csv(provenance(sc, cols), cols);
        for (std::size_t i = 0; i < dets.size(); ++i) {
            for (std::size_t k = 0; k < specs[i].size(); ++k) {
                csv.add_row({dets[i], specs[i].freq_hz[k], specs[i].intensity[k]});
            }
        }
        res.points = csv.rows();
        const auto path = opt.out_dir / (sc.name + "_map.csv");
        csv.write(path);
        res.files.push_back(path);
        return res;
    }

    // ensemble_size sweep, optionally at several temperatures
    const auto sizes = logspace(s.sweep_min, s.sweep_max, s.sweep_steps);
    std::vector<double> temps = s.temperatures_k;
    if (temps.empty()) temps.push_back(sc.params.temperature_k);
    struct Job {
        double T, N;
    };
    std::vector<Job> jobs;
    for (double T : temps)
        for (double N : sizes) jobs.push_back({T, N});
    std::vector<ComplexSpectrum> specs(jobs.size());
    parallel_for(jobs.size(), opt.threads, [&](std::size_t i) {
        SystemParams p = sc.params;
        p.temperature_k = jobs[i].T;
        p.spin_count = jobs[i].N;
        p.density_m3 = jobs[i].N / p.mode_volume_m3;
        specs[i] = compute_spectrum(DressedSpectrumModel(p), make_grid(p), kind);
    });
    const bool multi_t = temps.size() > 1;
    std::vector<std::string> cols;
    if (multi_t) cols.push_back("temperature_k");
    cols.insert(cols.end(), {"ensemble_size", "freq_hz", "intensity"});
    CsvWriter csv(provenance(sc, cols), cols);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        for (std::size_t k = 0; k < specs[i].size(); ++k) {
            if (multi_t) {
                csv.add_row({jobs[i].T, jobs[i].N, specs[i].freq_hz[k], specs[i].intensity[k]});
            } else {
                csv.add_row({jobs[i].N, specs[i].freq_hz[k], specs[i].intensity[k]});
            }
        }
    }
    res.points = csv.rows();
    const auto path = opt.out_dir / (sc.name + "_map.csv");
    csv.write(path);
    res.files.push_back(path);
    return res;
}

RunResult run_fano(const Scenario& sc, const RunOptions& opt) {
    const auto& f = *sc.fano;
    RunResult res;
    const ScatterParams scatter = resolve_scatter(sc, sc.params);
    const auto dets = linspace(f.detuning_min_hz, f.detuning_max_hz, f.detuning_steps);

    if (f.output == "slopes") {
        const auto rows = slope_enhancement(sc.params, scatter, dets);
        const std::vector<std::string> cols = {"detuning_hz", "slope_ratio", "argmax_freq_hz"};
        CsvWriter csv(provenance(sc, cols), cols);
        for (const auto& r : rows) csv.add_row({r.detuning_hz, r.slope_ratio, r.argmax_freq_hz});
        res.points = csv.rows();
        const auto path = opt.out_dir / (sc.name + "_slopes.csv");
        csv.write(path);
        res.files.push_back(path);
        return res;
    }

    DressedSpectrumModel dressed(sc.params);
    const double f_dress = dressed.dressed_state_frequency(true);
    const double gamma_p = protected_linewidth(sc.params);
    const double gamma_s = scatter.linewidth_hz();
    double span = f.span_hz;
    if (!(span > 0)) {
        span = std::max(8.0 * (gamma_p + gamma_s),
                        std::max(std::abs(f.detuning_min_hz), std::abs(f.detuning_max_hz)) +
                            6.0 * (gamma_p + gamma_s));
    }
    const auto grid = linspace(f_dress - span, f_dress + span, f.points);

    std::vector<ComplexSpectrum> specs(dets.size());
    parallel_for(dets.size(), opt.threads, [&](std::size_t i) {
        ScatterParams sct = scatter;
        sct.freq_hz = f_dress - dets[i];
        sct.quality = scatter.quality * (sct.freq_hz / scatter.freq_hz);
        specs[i] = fano_spectrum(sc.params, sct, grid);
    });
    const std::vector<std::string> cols = {"detuning_hz", "freq_hz", "intensity"};
    CsvWriter csv(provenance(sc, cols), cols);
    for (std::size_t i = 0; i < dets.size(); ++i) {
        for (std::size_t k = 0; k < specs[i].size(); ++k) {
            csv.add_row({dets[i], specs[i].freq_hz[k], specs[i].intensity[k]});
        }
    }
    res.points = csv.rows();
    const auto path = opt.out_dir / (sc.name + "_map.csv");
    csv.write(path);
    res.files.push_back(path);
    return res;
}

RunResult run_map(const Scenario& sc, const RunOptions& opt) {
    const auto& m = *sc.map;
    MapOptions mo;
    mo.contrast = m.contrast;
    mo.threads = opt.threads;
    if (sc.scatter) mo.scatter = resolve_scatter(sc, sc.params);
    const auto q_grid = logspace(m.q_min, m.q_max, m.q_points);
    const auto d_grid = logspace(m.density_min_m3, m.density_max_m3, m.density_points);
    const SensitivityMap map =
        sensitivity_map(sc.params, sc.budget, m.mode, q_grid, d_grid, mo);

    const std::vector<std::string> cols = {"q_p", "density_m3", "delta_b_tesla_sqrthz",
                                           "protected", "flagged"};
    CsvWriter csv(provenance(sc, cols), cols);
    for (const auto& cell : map.cells) {
        csv.add_row_raw({format_double(cell.q), format_double(cell.density_m3),
                         format_double(cell.delta_b), cell.protected_regime ? "1" : "0",
                         cell.flagged ? "1" : "0"});
    }
    RunResult res;
    res.points = csv.rows();
    const auto path = opt.out_dir / (sc.name + "_map.csv");
    csv.write(path);
    res.files.push_back(path);

    // sidecar with full config, constants, code version (and the per-cell
    // optimal detunings in fano mode, row-major like the CSV)
    json meta;
    meta["name"] = sc.name;
    meta["task"] = to_string(sc.task);
    meta["fingerprint"] = sc.fingerprint;
    meta["version"] = kVersion;
    meta["mode"] = to_string(m.mode);
    meta["q_axis_meaning"] =
        m.mode == SensitivityMode::fano ? "scattering-mode quality Q_s" : "cavity quality Q_p";
    json cfg;
    for (const auto& [k, v] : sc.canonical) cfg[k] = v;
    meta["config"] = cfg;
    const auto& c = sc.params.constants;
    meta["constants"] = {{"planck", c.planck},
                         {"planck_reduced", c.planck_reduced},
                         {"boltzmann", c.boltzmann},
                         {"vacuum_permeability", c.vacuum_permeability},
                         {"gyromagnetic_ratio", c.gyromagnetic_ratio},
                         {"speed_of_light", c.speed_of_light}};
    if (m.mode == SensitivityMode::fano) {
        json dts = json::array();
        for (const auto& cell : map.cells) dts.push_back(cell.fano_detuning_hz);
        meta["fano_detuning_hz"] = dts;
    }
    const auto meta_path = opt.out_dir / (sc.name + "_meta.json");
    write_file_atomic(meta_path, meta.dump(2) + "\n");
    res.files.push_back(meta_path);
    return res;
}

}  // namespace

RunResult run(const Scenario& sc, const RunOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    RunResult res;
    switch (sc.task) {
        case Task::dynamics: res = run_dynamics(sc, opt); break;
        case Task::steady_state: res = run_steady_state(sc, opt); break;
        case Task::spectrum: res = run_spectrum(sc, opt); break;
        case Task::fano: res = run_fano(sc, opt); break;
        case Task::sensitivity_map: res = run_map(sc, opt); break;
    }
    res.task = to_string(sc.task);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace nvsim
