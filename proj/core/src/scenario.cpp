#include "nvsim/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nvsim/csv.hpp"

namespace nvsim {

std::string to_string(Task t) {
    switch (t) {
        case Task::dynamics: return "dynamics";
        case Task::steady_state: return "steady-state";
        case Task::spectrum: return "spectrum";
        case Task::fano: return "fano";
        case Task::sensitivity_map: return "sensitivity-map";
    }
    return "?";
}

namespace {

Task task_from_string(const std::string& s) {
    if (s == "dynamics") return Task::dynamics;
    if (s == "steady-state" || s == "steady_state") return Task::steady_state;
    if (s == "spectrum") return Task::spectrum;
    if (s == "fano") return Task::fano;
    if (s == "sensitivity-map" || s == "sensitivity_map") return Task::sensitivity_map;
    throw std::invalid_argument("task: unknown '" + s + "'");
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct RawEntry {
    std::string value;
    int line = 0;
    bool used = false;
};

struct RawScenario {
    std::map<std::string, RawEntry> entries;  // "section.key" (global keys: ".key")
    std::string source;
};

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
    std::ostringstream os;
    os << source << ":" << line << ": " << what;
    throw std::invalid_argument(os.str());
}

RawScenario tokenize(const std::string& text, const std::string& source) {
    RawScenario raw;
    raw.source = source;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') parse_fail(source, lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) parse_fail(source, lineno, "empty section name");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) parse_fail(source, lineno, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) parse_fail(source, lineno, "empty key");
        if (value.empty()) parse_fail(source, lineno, "empty value for key '" + key + "'");
        const std::string full = section + "." + key;
        if (raw.entries.count(full)) {
            parse_fail(source, lineno, "duplicate key '" + full + "'");
        }
        raw.entries[full] = {value, lineno, false};
    }
    return raw;
}

enum class Dim { frequency, time, temperature, volume, density, angle, length, none };

double unit_factor(const std::string& u, Dim dim) {
    switch (dim) {
        case Dim::frequency:
            if (u == "Hz") return 1.0;
            if (u == "kHz") return 1e3;
            if (u == "MHz") return 1e6;
            if (u == "GHz") return 1e9;
            break;
        case Dim::time:
            if (u == "s") return 1.0;
            if (u == "ms") return 1e-3;
            if (u == "us") return 1e-6;
            if (u == "ns") return 1e-9;
            break;
        case Dim::temperature:
            if (u == "K") return 1.0;
            if (u == "mK") return 1e-3;
            if (u == "uK") return 1e-6;
            break;
        case Dim::volume:
            if (u == "m^3" || u == "m3") return 1.0;
            if (u == "cm^3" || u == "cm3") return 1e-6;
            if (u == "mm^3" || u == "mm3") return 1e-9;
            break;
        case Dim::density:
            if (u == "m^-3" || u == "1/m^3") return 1.0;
            if (u == "cm^-3" || u == "1/cm^3") return 1e6;
            break;
        case Dim::angle:
            if (u == "rad") return 1.0;
            if (u == "deg") return M_PI / 180.0;
            break;
        case Dim::length:
            if (u == "m") return 1.0;
            if (u == "cm") return 1e-2;
            if (u == "mm") return 1e-3;
            if (u == "um") return 1e-6;
            if (u == "nm") return 1e-9;
            break;
        case Dim::none:
            break;
    }
    return 0.0;  // unknown
}

class Reader {
  public:
    Reader(RawScenario& raw) : raw_(raw) {}

    bool has(const std::string& full) const { return raw_.entries.count(full) > 0; }

    std::string str(const std::string& full, const std::string& fallback) {
        auto it = raw_.entries.find(full);
        if (it == raw_.entries.end()) return fallback;
        it->second.used = true;
        return it->second.value;
    }

    std::string str_required(const std::string& full) {
        auto it = raw_.entries.find(full);
        if (it == raw_.entries.end()) {
            throw std::invalid_argument(raw_.source + ": missing required key '" + full + "'");
        }
        it->second.used = true;
        return it->second.value;
    }

    double quantity(const std::string& full, Dim dim, double fallback) {
        auto it = raw_.entries.find(full);
        if (it == raw_.entries.end()) return fallback;
        it->second.used = true;
        return parse_quantity(it->second.value, dim, full, it->second.line);
    }

    std::optional<double> quantity_opt(const std::string& full, Dim dim) {
        auto it = raw_.entries.find(full);
        if (it == raw_.entries.end()) return std::nullopt;
        it->second.used = true;
        return parse_quantity(it->second.value, dim, full, it->second.line);
    }

    std::vector<double> quantity_list(const std::string& full, Dim dim) {
        auto it = raw_.entries.find(full);
        if (it == raw_.entries.end()) return {};
        it->second.used = true;
        std::vector<double> out;
        std::string token;
        std::istringstream ss(it->second.value);
        while (std::getline(ss, token, ',')) {
            out.push_back(parse_quantity(trim(token), dim, full, it->second.line));
        }
        return out;
    }

    int integer(const std::string& full, int fallback) {
        const double v = quantity(full, Dim::none, static_cast<double>(fallback));
        if (std::abs(v - std::round(v)) > 1e-9) {
            throw std::invalid_argument(raw_.source + ": key '" + full + "' must be an integer");
        }
        return static_cast<int>(std::llround(v));
    }

    void fail_on_unused() const {
        for (const auto& [key, entry] : raw_.entries) {
            if (!entry.used) {
                parse_fail(raw_.source, entry.line, "unknown key '" + key + "'");
            }
        }
    }

    double parse_quantity(const std::string& value, Dim dim, const std::string& key, int line) {
        // number with optional unit suffix, e.g. "3 kHz", "3kHz", "1e6"
        std::size_t pos = 0;
        double num = 0.0;
        try {
            num = std::stod(value, &pos);
        } catch (const std::exception&) {
            parse_fail(raw_.source, line, "key '" + key + "': cannot parse number from '" + value + "'");
        }
        std::string unit = trim(value.substr(pos));
        if (unit.empty()) return num;  // already SI (or dimensionless)
        const double f = unit_factor(unit, dim);
        if (f == 0.0) {
            parse_fail(raw_.source, line,
                       "key '" + key + "': unit '" + unit + "' not valid here");
        }
        return num * f;
    }

  private:
    RawScenario& raw_;
};

void put_canonical(std::map<std::string, std::string>& c, const std::string& key, double v) {
    c[key] = format_double(v);
}

std::vector<double> geom_grid(double lo, double hi, int n) {
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

}  // namespace

std::string fingerprint_of(const std::map<std::string, std::string>& canonical) {
    // FNV-1a 64 over "key=value\n" in sorted order (std::map iterates sorted)
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [k, v] : canonical) {
        mix(k);
        mix("=");
        mix(v);
        mix("\n");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Scenario parse_scenario_text(const std::string& text, const std::string& source_label) {
    RawScenario raw = tokenize(text, source_label);
    Reader r(raw);
    Scenario sc;
    sc.source = source_label;

    sc.name = r.str_required(".name");
    for (char c : sc.name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) {
            throw std::invalid_argument(source_label + ": name must be [A-Za-z0-9_-]");
        }
    }
    sc.task = task_from_string(r.str_required(".task"));

    // ---- [params] ----
    SystemParamsInput in;
    in.cavity_freq_hz = r.quantity("params.cavity_frequency", Dim::frequency, 3e9);
    in.spin_freq_hz = r.quantity("params.spin_frequency", Dim::frequency, in.cavity_freq_hz);
    if (r.has("params.quality")) in.quality = r.quantity("params.quality", Dim::none, 0);
    if (r.has("params.kappa")) in.kappa_hz = r.quantity("params.kappa", Dim::frequency, 0);
    if (!in.quality && !in.kappa_hz) in.quality = 1e6;
    in.gamma1_hz = r.quantity("params.gamma1", Dim::frequency, 250.0);
    if (r.has("params.gamma2") && r.has("params.delta_en")) {
        throw std::invalid_argument(source_label +
                                    ": gamma2 and delta_en are the same field; set only one");
    }
    in.gamma2_hz = r.quantity("params.gamma2", Dim::frequency,
                              r.quantity("params.delta_en", Dim::frequency, 1e6));
    in.pump_hz = r.quantity("params.pump", Dim::frequency, 0.0);
    if (r.has("params.coupling")) in.g_hz = r.quantity("params.coupling", Dim::frequency, 0);
    if (r.has("params.mode_volume")) in.mode_volume_m3 = r.quantity("params.mode_volume", Dim::volume, 0);
    if (!in.g_hz && !in.mode_volume_m3) in.g_hz = 1.0;
    if (r.has("params.spin_count")) in.spin_count = r.quantity("params.spin_count", Dim::none, 0);
    if (r.has("params.density")) in.density_m3 = r.quantity("params.density", Dim::density, 0);
    if (!in.spin_count && !in.density_m3) in.spin_count = 1e10;
    if (r.has("params.temperature")) {
        in.temperature_k = r.quantity("params.temperature", Dim::temperature, 300.0);
    } else {
        in.temperature_k = 300.0;
        sc.notices.push_back("params.temperature not set; defaulted to 300 K");
    }
    in.distribution = density_kind_from_string(r.str("params.distribution", "gaussian"));
    in.mixing = r.quantity("params.mixing", Dim::none, 0.2);
    const std::string tharg = r.str("params.thermal_argument", "physical");
    if (tharg == "physical") {
        in.thermal_argument = ThermalArgument::physical;
    } else if (tharg == "literal") {
        in.thermal_argument = ThermalArgument::literal;
    } else {
        throw std::invalid_argument(source_label + ": thermal_argument must be physical|literal");
    }
    if (r.has("params.gyromagnetic_ratio")) {
        in.constants.gyromagnetic_ratio = r.quantity("params.gyromagnetic_ratio", Dim::none, 2.8e10);
    }
    sc.params = in.resolve();

    // ---- [budget] ----
    sc.budget.eta_det = r.quantity("budget.eta_det", Dim::none, 0.70);
    sc.budget.eta_ext = r.quantity("budget.eta_ext", Dim::none, 0.50);
    sc.budget.t_m_s = r.quantity("budget.t_m", Dim::time, 1.0);
    sc.budget.gamma_cyc_hz = r.quantity("budget.gamma_cyc", Dim::frequency, 1.3e8);
    sc.budget.eta_nvqe = r.quantity("budget.eta_nvqe", Dim::none, 0.80);
    sc.budget.emitters = sc.params.spin_count;
    sc.budget.validate();

    // ---- [scatter] ----
    const bool scatter_needed =
        sc.task == Task::fano ||
        (sc.task == Task::sensitivity_map && r.str("map.mode", "dressed") != "dressed") ||
        (sc.task == Task::spectrum && r.str("spectrum.quantity", "transmission") == "linewidth_sweep");
    if (scatter_needed || r.has("scatter.quality")) {
        ScatterSection s;
        s.params.quality = r.quantity("scatter.quality", Dim::none, 1e6);
        const std::string freq = r.str("scatter.frequency", "auto");
        if (freq == "auto") {
            s.at_dressed_state = true;
            s.params.freq_hz = sc.params.cavity_freq_hz;  // placeholder until resolved
        } else {
            s.at_dressed_state = false;
            s.params.freq_hz = r.parse_quantity(freq, Dim::frequency, "scatter.frequency", 0);
        }
        const bool has_disk = r.has("scatter.disk_radius");
        if (has_disk) {
            const double radius = r.quantity("scatter.disk_radius", Dim::length, 0);
            const double nidx = r.quantity("scatter.refractive_index", Dim::none, 0);
            const double ld = r.quantity("scatter.lambda_dress", Dim::length, 0);
            const double ls = r.quantity("scatter.lambda_scatt", Dim::length, 0);
            s.params.phase_rad = phase_mismatch(radius, nidx, ld, ls);
            if (r.has("scatter.phase")) {
                throw std::invalid_argument(source_label +
                                            ": scatter.phase and disk geometry are mutually exclusive");
            }
        } else {
            s.params.phase_rad = wrap_phase(r.quantity("scatter.phase", Dim::angle, M_PI));
        }
        s.params.amplitude = r.quantity("scatter.amplitude", Dim::none, 1.0);
        sc.scatter = s;
    }

    // ---- task sections ----
    switch (sc.task) {
        case Task::dynamics: {
            DynamicsSection d;
            d.t_end_s = r.quantity("dynamics.t_end", Dim::time, 0.0);
            if (!(d.t_end_s > 0)) {
                throw std::invalid_argument(source_label + ": dynamics.t_end must be set and > 0");
            }
            d.samples = r.integer("dynamics.samples", 1000);
            d.initial = r.str("dynamics.initial", "thermal");
            if (d.initial != "thermal" && d.initial != "ground") {
                throw std::invalid_argument(source_label + ": dynamics.initial must be thermal|ground");
            }
            d.rel_tol = r.quantity("dynamics.rel_tol", Dim::none, 1e-8);
            d.abs_tol = r.quantity("dynamics.abs_tol", Dim::none, 1e-10);
            d.coherence_seed = r.quantity("dynamics.coherence_seed", Dim::none, 0.0);
            d.log_spacing = r.str("dynamics.spacing", "linear") == "log";
            sc.dynamics = d;
            break;
        }
        case Task::steady_state: {
            SteadyStateSection s;
            s.pump_min_hz = r.quantity("steady_state.pump_min", Dim::frequency, 1.0);
            s.pump_max_hz = r.quantity("steady_state.pump_max", Dim::frequency, 1e4);
            s.pump_steps = r.integer("steady_state.pump_steps", 41);
            s.temp_min_k = r.quantity("steady_state.temp_min", Dim::temperature, 0.0);
            s.temp_max_k = r.quantity("steady_state.temp_max", Dim::temperature, 400.0);
            s.temp_steps = r.integer("steady_state.temp_steps", 41);
            if (s.pump_min_hz <= 0 || s.pump_max_hz < s.pump_min_hz) {
                throw std::invalid_argument(source_label + ": steady_state pump grid invalid");
            }
            sc.steady_state = s;
            break;
        }
        case Task::spectrum: {
            SpectrumSection s;
            s.quantity = r.str("spectrum.quantity", "transmission");
            if (s.quantity != "transmission" && s.quantity != "odmr" &&
                s.quantity != "linewidth_sweep") {
                throw std::invalid_argument(source_label +
                                            ": spectrum.quantity must be transmission|odmr|linewidth_sweep");
            }
            s.span_hz = r.quantity("spectrum.span", Dim::frequency, 0.0);
            s.points = r.integer("spectrum.points", 4001);
            s.sweep = r.str("spectrum.sweep", "none");
            if (s.sweep != "none" && s.sweep != "cavity_detuning" && s.sweep != "ensemble_size") {
                throw std::invalid_argument(source_label +
                                            ": spectrum.sweep must be none|cavity_detuning|ensemble_size");
            }
            if (s.sweep == "cavity_detuning") {
                s.sweep_min = r.quantity("spectrum.sweep_min", Dim::frequency, -5.0 * sc.params.gamma2_hz);
                s.sweep_max = r.quantity("spectrum.sweep_max", Dim::frequency, 5.0 * sc.params.gamma2_hz);
                s.sweep_steps = r.integer("spectrum.sweep_steps", 41);
            } else if (s.sweep == "ensemble_size") {
                s.sweep_min = r.quantity("spectrum.sweep_min", Dim::none, 1e12);
                s.sweep_max = r.quantity("spectrum.sweep_max", Dim::none, 1e20);
                s.sweep_steps = r.integer("spectrum.sweep_steps", 41);
            }
            s.temperatures_k = r.quantity_list("spectrum.temperatures", Dim::temperature);
            if (s.quantity == "linewidth_sweep") {
                s.coupling_min_ratio = r.quantity("spectrum.coupling_min", Dim::none, 0.3);
                s.coupling_max_ratio = r.quantity("spectrum.coupling_max", Dim::none, 300.0);
                s.coupling_steps = r.integer("spectrum.coupling_steps", 121);
            }
            sc.spectrum = s;
            break;
        }
        case Task::fano: {
            FanoSection f;
            const double gp_scale = 10e3;
            f.detuning_min_hz = r.quantity("fano.detuning_min", Dim::frequency, -2.0 * gp_scale);
            f.detuning_max_hz = r.quantity("fano.detuning_max", Dim::frequency, 2.0 * gp_scale);
            f.detuning_steps = r.integer("fano.detuning_steps", 41);
            f.span_hz = r.quantity("fano.span", Dim::frequency, 0.0);
            f.points = r.integer("fano.points", 4001);
            f.output = r.str("fano.output", "map");
            if (f.output != "map" && f.output != "slopes") {
                throw std::invalid_argument(source_label + ": fano.output must be map|slopes");
            }
            if (!sc.scatter) {
                throw std::invalid_argument(source_label + ": fano task needs a [scatter] section");
            }
            sc.fano = f;
            break;
        }
        case Task::sensitivity_map: {
            MapSection m;
            m.mode = sensitivity_mode_from_string(r.str("map.mode", "dressed"));
            m.q_min = r.quantity("map.q_min", Dim::none, 1e3);
            m.q_max = r.quantity("map.q_max", Dim::none, 1e7);
            m.q_points = r.integer("map.q_points", 40);
            m.density_min_m3 = r.quantity("map.density_min", Dim::density, 1e22);
            m.density_max_m3 = r.quantity("map.density_max", Dim::density, 1e26);
            m.density_points = r.integer("map.density_points", 40);
            m.contrast = r.quantity_opt("map.contrast", Dim::none);
            if (m.q_min <= 0 || m.q_max < m.q_min || m.density_min_m3 <= 0 ||
                m.density_max_m3 < m.density_min_m3 || m.q_points < 1 || m.density_points < 1) {
                throw std::invalid_argument(source_label + ": map grid invalid");
            }
            if (m.mode != SensitivityMode::dressed && !sc.scatter) {
                throw std::invalid_argument(source_label + ": mit/fano maps need a [scatter] section");
            }
            sc.map = m;
            break;
        }
    }

    r.fail_on_unused();

    // ---- canonical serialization + fingerprint ----
    auto& c = sc.canonical;
    c["name"] = sc.name;
    c["task"] = to_string(sc.task);
    put_canonical(c, "params.cavity_frequency_hz", sc.params.cavity_freq_hz);
    put_canonical(c, "params.spin_frequency_hz", sc.params.spin_freq_hz);
    put_canonical(c, "params.quality", sc.params.quality);
    put_canonical(c, "params.kappa_hz", sc.params.kappa_hz);
    put_canonical(c, "params.gamma1_hz", sc.params.gamma1_hz);
    put_canonical(c, "params.gamma2_hz", sc.params.gamma2_hz);
    put_canonical(c, "params.pump_hz", sc.params.pump_hz);
    put_canonical(c, "params.coupling_hz", sc.params.g_hz);
    put_canonical(c, "params.mode_volume_m3", sc.params.mode_volume_m3);
    put_canonical(c, "params.spin_count", sc.params.spin_count);
    put_canonical(c, "params.density_m3", sc.params.density_m3);
    put_canonical(c, "params.temperature_k", sc.params.temperature_k);
    c["params.distribution"] = to_string(sc.params.distribution);
    put_canonical(c, "params.mixing", sc.params.mixing);
    c["params.thermal_argument"] =
        sc.params.thermal_argument == ThermalArgument::physical ? "physical" : "literal";
    put_canonical(c, "params.gyromagnetic_ratio", sc.params.constants.gyromagnetic_ratio);
    put_canonical(c, "budget.eta_det", sc.budget.eta_det);
    put_canonical(c, "budget.eta_ext", sc.budget.eta_ext);
    put_canonical(c, "budget.t_m_s", sc.budget.t_m_s);
    put_canonical(c, "budget.gamma_cyc_hz", sc.budget.gamma_cyc_hz);
    put_canonical(c, "budget.eta_nvqe", sc.budget.eta_nvqe);
    if (sc.scatter) {
        put_canonical(c, "scatter.quality", sc.scatter->params.quality);
        c["scatter.frequency"] = sc.scatter->at_dressed_state
                                     ? "auto"
                                     : format_double(sc.scatter->params.freq_hz);
        put_canonical(c, "scatter.phase_rad", sc.scatter->params.phase_rad);
        put_canonical(c, "scatter.amplitude", sc.scatter->params.amplitude);
    }
    if (sc.dynamics) {
        put_canonical(c, "dynamics.t_end_s", sc.dynamics->t_end_s);
        put_canonical(c, "dynamics.samples", sc.dynamics->samples);
        c["dynamics.initial"] = sc.dynamics->initial;
        put_canonical(c, "dynamics.rel_tol", sc.dynamics->rel_tol);
        put_canonical(c, "dynamics.abs_tol", sc.dynamics->abs_tol);
        put_canonical(c, "dynamics.coherence_seed", sc.dynamics->coherence_seed);
        c["dynamics.spacing"] = sc.dynamics->log_spacing ? "log" : "linear";
    }
    if (sc.steady_state) {
        put_canonical(c, "steady_state.pump_min_hz", sc.steady_state->pump_min_hz);
        put_canonical(c, "steady_state.pump_max_hz", sc.steady_state->pump_max_hz);
        put_canonical(c, "steady_state.pump_steps", sc.steady_state->pump_steps);
        put_canonical(c, "steady_state.temp_min_k", sc.steady_state->temp_min_k);
        put_canonical(c, "steady_state.temp_max_k", sc.steady_state->temp_max_k);
        put_canonical(c, "steady_state.temp_steps", sc.steady_state->temp_steps);
    }
    if (sc.spectrum) {
        c["spectrum.quantity"] = sc.spectrum->quantity;
        put_canonical(c, "spectrum.span_hz", sc.spectrum->span_hz);
        put_canonical(c, "spectrum.points", sc.spectrum->points);
        c["spectrum.sweep"] = sc.spectrum->sweep;
        put_canonical(c, "spectrum.sweep_min", sc.spectrum->sweep_min);
        put_canonical(c, "spectrum.sweep_max", sc.spectrum->sweep_max);
        put_canonical(c, "spectrum.sweep_steps", sc.spectrum->sweep_steps);
        if (!sc.spectrum->temperatures_k.empty()) {
            std::string list;
            for (double t : sc.spectrum->temperatures_k) {
                if (!list.empty()) list += ",";
                list += format_double(t);
            }
            c["spectrum.temperatures_k"] = list;
        }
        if (sc.spectrum->quantity == "linewidth_sweep") {
            put_canonical(c, "spectrum.coupling_min", sc.spectrum->coupling_min_ratio);
            put_canonical(c, "spectrum.coupling_max", sc.spectrum->coupling_max_ratio);
            put_canonical(c, "spectrum.coupling_steps", sc.spectrum->coupling_steps);
        }
    }
    if (sc.fano) {
        put_canonical(c, "fano.detuning_min_hz", sc.fano->detuning_min_hz);
        put_canonical(c, "fano.detuning_max_hz", sc.fano->detuning_max_hz);
        put_canonical(c, "fano.detuning_steps", sc.fano->detuning_steps);
        put_canonical(c, "fano.span_hz", sc.fano->span_hz);
        put_canonical(c, "fano.points", sc.fano->points);
        c["fano.output"] = sc.fano->output;
    }
    if (sc.map) {
        c["map.mode"] = to_string(sc.map->mode);
        put_canonical(c, "map.q_min", sc.map->q_min);
        put_canonical(c, "map.q_max", sc.map->q_max);
        put_canonical(c, "map.q_points", sc.map->q_points);
        put_canonical(c, "map.density_min_m3", sc.map->density_min_m3);
        put_canonical(c, "map.density_max_m3", sc.map->density_max_m3);
        put_canonical(c, "map.density_points", sc.map->density_points);
        if (sc.map->contrast) put_canonical(c, "map.contrast", *sc.map->contrast);
    }
    sc.fingerprint = fingerprint_of(c);
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path);
}

const ShippedScenario* find_shipped_scenario(const std::string& name) {
    for (const auto& s : list_scenarios()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

}  // namespace nvsim
