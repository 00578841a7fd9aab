#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nvsim/params.hpp"
#include "nvsim/sensitivity.hpp"

namespace nvsim {

enum class Task { dynamics, steady_state, spectrum, fano, sensitivity_map };

std::string to_string(Task t);

struct DynamicsSection {
    double t_end_s = 0.0;
    int samples = 1000;
    std::string initial = "thermal";  // thermal | ground
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    double coherence_seed = 0.0;      // optional Re<sigma- a+> kick at t=0
    bool log_spacing = false;
};

struct SteadyStateSection {
    double pump_min_hz = 1.0;
    double pump_max_hz = 1e4;
    int pump_steps = 41;      // log-spaced
    double temp_min_k = 0.0;
    double temp_max_k = 400.0;
    int temp_steps = 41;      // linear
};

struct SpectrumSection {
    std::string quantity = "transmission";  // transmission | odmr | linewidth_sweep
    double span_hz = 0.0;                   // half-span; 0 = default grid policy
    int points = 4001;
    std::string sweep = "none";             // none | cavity_detuning | ensemble_size
    double sweep_min = 0.0;
    double sweep_max = 0.0;
    int sweep_steps = 0;
    std::vector<double> temperatures_k;     // ensemble_size sweep may list several
    double coupling_min_ratio = 0.3;        // linewidth_sweep: Omega / Delta_en, log"
    double coupling_max_ratio = 300.0;
    int coupling_steps = 121;
};

struct ScatterSection {
    ScatterParams params;
    bool at_dressed_state = true;  // frequency = auto
};

struct FanoSection {
    double detuning_min_hz = 0.0;
    double detuning_max_hz = 0.0;
    int detuning_steps = 41;
    double span_hz = 0.0;           // omega window half-span around the features
    int points = 4001;
    std::string output = "map";     // map | slopes
};

struct MapSection {
    SensitivityMode mode = SensitivityMode::dressed;
    double q_min = 1e3;
    double q_max = 1e7;
    int q_points = 40;
    double density_min_m3 = 1e22;
    double density_max_m3 = 1e26;
    int density_points = 40;
    std::optional<double> contrast;
};

/// One fully validated simulation request. The canonical serialization
/// (sorted section.key = value pairs, SI units) defines the fingerprint hash
/// embedded in every output file.
struct Scenario {
    std::string name;
    Task task = Task::dynamics;
    SystemParams params;
    PhotonBudget budget;
    std::optional<ScatterSection> scatter;
    std::optional<DynamicsSection> dynamics;
    std::optional<SteadyStateSection> steady_state;
    std::optional<SpectrumSection> spectrum;
    std::optional<FanoSection> fano;
    std::optional<MapSection> map;

    std::map<std::string, std::string> canonical;  // sorted, SI-normalized
    std::string fingerprint;                       // 16 hex digits, FNV-1a 64
    std::vector<std::string> notices;              // defaulted-key notes
    std::string source;                            // path or shipped name
};

/// Parse + unit-convert + default + validate. Unknown keys are hard errors;
/// parse errors carry line numbers.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& source_label);

struct ShippedScenario {
    std::string name;
    std::string description;
    std::string text;
};

/// Catalog of the shipped figure-reproduction scenarios.
const std::vector<ShippedScenario>& list_scenarios();

/// Look up a shipped scenario by name (nullptr if absent).
const ShippedScenario* find_shipped_scenario(const std::string& name);

/// FNV-1a 64 over the canonical serialization.
std::string fingerprint_of(const std::map<std::string, std::string>& canonical);

}  // namespace nvsim
