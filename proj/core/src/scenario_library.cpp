#include "nvsim/scenario.hpp"

namespace nvsim {

// Shipped figure-reproduction scenarios. The files under scenarios/ mirror
// these strings byte for byte; a test keeps them in sync.

namespace {

const char* kFig1 = R"(# Relaxation of the inversion and cavity occupation from a thermal start.
# Ensemble size follows the figure caption (1e20); the main text also quotes
# 1e10 for the same plot, and the steady-state ratios probed downstream are
# insensitive to this choice.
name = fig1
task = dynamics

[params]
cavity_frequency = 3 GHz
spin_frequency   = 3 GHz
quality          = 1e6
gamma1           = 250 Hz
gamma2           = 1 MHz
coupling         = 1 Hz
spin_count       = 1e20
pump             = 25 Hz
temperature      = 300 K
distribution     = gaussian

[dynamics]
t_end   = 80 ms
samples = 2000
initial = thermal
)";

const char* kFig2a = R"(# Probe-frequency vs cavity-detuning ODMR map of the coupled system.
# A deliberately small collective coupling (Omega ~ 2 Delta_en) keeps the
# cavity-pulling and the uncoupled-spin pedestal visible.
name = fig2a
task = spectrum

[params]
cavity_frequency = 3 GHz
spin_frequency   = 3 GHz
quality          = 1e6
gamma1           = 250 Hz
gamma2           = 1 MHz
coupling         = 1 Hz
spin_count       = 1.7e16
temperature      = 300 K
distribution     = gaussian

[spectrum]
quantity    = odmr
span        = 8 MHz
points      = 1601
sweep       = cavity_detuning
sweep_min   = -5 MHz
sweep_max   = 5 MHz
sweep_steps = 41
)";

const char* kFig2b = R"(# Cavity transmission versus ensemble size at two temperatures.
name = fig2b
task = spectrum

[params]
cavity_frequency = 3 GHz
spin_frequency   = 3 GHz
quality          = 1e6
gamma1           = 250 Hz
gamma2           = 1 MHz
coupling         = 1 Hz
spin_count       = 1e16
temperature      = 300 K
distribution     = gaussian

[spectrum]
quantity     = transmission
points       = 1201
sweep        = ensemble_size
sweep_min    = 1e14
sweep_max    = 1e20
sweep_steps  = 25
temperatures = 77 K, 300 K
)";

const char* kFig2c = R"(# Dressed-state linewidth versus collective coupling for the three spin
# distributions, plus the scattered (MIT) window width for the Gaussian case.
name = fig2c
task = spectrum

[params]
cavity_frequency = 3 GHz
spin_frequency   = 3 GHz
quality          = 1e6
gamma1           = 250 Hz
gamma2           = 1 MHz
coupling         = 1 Hz
spin_count       = 1e20
temperature      = 300 K
distribution     = pseudo_voigt
mixing           = 0.2

[scatter]
quality   = 1e6
frequency = auto
phase     = 3.14159265358979324 rad
amplitude = 1

[spectrum]
quantity       = linewidth_sweep
coupling_min   = 0.3
coupling_max   = 300
coupling_steps = 121
)";

const char* kFig3a = R"(# Interference map of the dressed state with a detuned scattering mode of
# equal quality factor; the on-resonance cut shows the transparency window.
name = fig3a
task = fano

[params]
cavity_frequency = 3 GHz
spin_frequency   = 3 GHz
quality          = 1e6
gamma1           = 250 Hz
gamma2           = 1 MHz
coupling         = 1 Hz
spin_count       = 1e20
temperature      = 300 K
distribution     = gaussian

[scatter]
quality   = 1e6
frequency = auto
phase     = 3.14159265358979324 rad
amplitude = 1

[fano]
detuning_min   = -15 kHz
detuning_max   = 15 kHz
detuning_steps = 61
points         = 2401
output         = map
)";

const char* kFig3b = R"(# Maximum spectral slope versus scatterer detuning, normalized to the
# unscattered dressed state.
name = fig3b
task = fano

[params]
cavity_frequency = 3 GHz
spin_frequency   = 3 GHz
quality          = 1e6
gamma1           = 250 Hz
gamma2           = 1 MHz
coupling         = 1 Hz
spin_count       = 1e20
temperature      = 300 K
distribution     = gaussian

[scatter]
quality   = 1e6
frequency = auto
phase     = 3.14159265358979324 rad
amplitude = 1

[fano]
detuning_min   = -15 kHz
detuning_max   = 15 kHz
detuning_steps = 61
output         = slopes
)";

const char* kFig4a = R"(# DC sensitivity of the bare dressed state over (Q_p, NV density) at 300 K,
# 1 cm^3 mode volume. Contrast pinned to 1: only order-of-magnitude absolute
# values are meaningful, trends carry the physics.
name = fig4a
task = sensitivity-map

[params]
cavity_frequency = 3 GHz
spin_frequency   = 3 GHz
quality          = 1e6
gamma1           = 250 Hz
gamma2           = 1 MHz
mode_volume      = 1 cm^3
density          = 1e18 cm^-3
temperature      = 300 K
distribution     = gaussian

[map]
mode           = dressed
q_min          = 1e3
q_max          = 1e7
q_points       = 40
density_min    = 1e16 cm^-3
density_max    = 1e20 cm^-3
density_points = 40
contrast       = 1
)";

const char* kFig4b = R"(# DC sensitivity of the transparency (MIT) window for a Q_s = 1e5 scattering
# mode, swept over (Q_p, NV density).
name = fig4b
task = sensitivity-map

[params]
cavity_frequency = 3 GHz
spin_frequency   = 3 GHz
quality          = 1e6
gamma1           = 250 Hz
gamma2           = 1 MHz
mode_volume      = 1 cm^3
density          = 1e18 cm^-3
temperature      = 300 K
distribution     = gaussian

[scatter]
quality   = 1e5
frequency = auto
phase     = 3.14159265358979324 rad
amplitude = 1

[map]
mode           = mit
q_min          = 1e3
q_max          = 1e7
q_points       = 40
density_min    = 1e16 cm^-3
density_max    = 1e20 cm^-3
density_points = 40
contrast       = 1
)";

const char* kFig4c = R"(# DC sensitivity read from the steepest edge of the asymmetric interference
# lineshape at the per-cell optimal detuning; Q_p fixed at 1e5, the map
# sweeps the scattering-mode quality Q_s >= Q_p.
name = fig4c
task = sensitivity-map

[params]
cavity_frequency = 3 GHz
spin_frequency   = 3 GHz
quality          = 1e5
gamma1           = 250 Hz
gamma2           = 1 MHz
mode_volume      = 1 cm^3
density          = 1e18 cm^-3
temperature      = 300 K
distribution     = gaussian

[scatter]
quality   = 1e5
frequency = auto
phase     = 3.14159265358979324 rad
amplitude = 1

[map]
mode           = fano
q_min          = 1e5
q_max          = 1e7
q_points       = 24
density_min    = 1e16 cm^-3
density_max    = 1e20 cm^-3
density_points = 24
)";

}  // namespace

const std::vector<ShippedScenario>& list_scenarios() {
    static const std::vector<ShippedScenario> catalog = {
        {"fig1", "cumulant relaxation traces (inversion, photon number)", kFig1},
        {"fig2a", "ODMR intensity vs probe frequency and cavity detuning", kFig2a},
        {"fig2b", "cavity transmission vs ensemble size at 77 K and 300 K", kFig2b},
        {"fig2c", "dressed-state and MIT linewidths vs collective coupling", kFig2c},
        {"fig3a", "dressed-state/scatterer interference map", kFig3a},
        {"fig3b", "maximum-slope enhancement vs scatterer detuning", kFig3b},
        {"fig4a", "dressed-state DC sensitivity map over (Q_p, density)", kFig4a},
        {"fig4b", "MIT-window DC sensitivity map, Q_s = 1e5", kFig4b},
        {"fig4c", "Fano-edge DC sensitivity map at Q_p = 1e5", kFig4c},
    };
    return catalog;
}

}  // namespace nvsim
