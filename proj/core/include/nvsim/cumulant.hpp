#pragma once

#include <complex>
#include <vector>

#include "nvsim/params.hpp"

namespace nvsim {

/// The four second-order expectation values tracked by the cumulant closure.
struct CumulantState {
    double sigma_z = 0.0;                       // per-spin inversion, [-1, 1]
    double photon_number = 0.0;                 // <a+ a>, >= 0
    std::complex<double> coherence{0.0, 0.0};   // <sigma- a+>
    double spin_excitation = 0.0;               // cross-spin <sigma+_i sigma-_j>, [-1/2, 1]
};

/// Thermal preparation: fully mixed spins, thermally occupied cavity.
CumulantState thermal_initial_state(const SystemParams& p);

/// Time derivative of the cumulant state in the frame rotating at the cavity
/// frequency (only the spin detuning nu_0 - nu_c oscillates). Couplings carry
/// 2*pi (Hamiltonian phases); the dissipative rates enter as plain 1/s rates.
/// The complex spin frequency carries Im = -(gamma1(2 nbar + 1) + v + gamma2)/2
/// and the cavity one Im = -kappa, as documented in the symbol table.
CumulantState cumulant_rhs(const CumulantState& s, const SystemParams& p);

struct SamplingGrid {
    double t_end_s = 0.0;
    int samples = 500;          // output points, t=0 included
    bool log_spacing = false;   // log-spaced sampling after the first point
};

struct IntegrationOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;     // photon component is scaled by nbar_c + 1
    double initial_dt_s = 0.0;  // 0: choose from the fastest rate
    bool check_invariants = true;
    double invariant_tol = 1e-9;
};

struct Trajectory {
    std::vector<double> times_s;
    std::vector<CumulantState> states;
    SystemParams params;
};

/// Adaptive semi-implicit (Rosenbrock) integration of the four coupled
/// equations; the trajectory is sampled on the requested grid by dense
/// output. Internally time is measured in units of 1/kappa and the photon
/// number in units of nbar_c + 1. Deterministic for identical inputs.
Trajectory integrate(const CumulantState& initial, const SystemParams& p,
                     const SamplingGrid& grid, const IntegrationOptions& opt = {});

/// Closed-form steady state of the (inversion, photon-number) pair, evaluated
/// from the given initialization. The two printed relations are one
/// stationarity constraint read two ways; see steady_state_consistent for the
/// mutually stationary pair.
struct SteadyState {
    double sigma_z = 0.0;
    double photon_number = 0.0;
};

SteadyState steady_state(const SystemParams& p, double initial_inversion,
                         double initial_photons);

/// Default thermal initialization (sigma_z_in = 0, photons_in = nbar_c).
SteadyState steady_state(const SystemParams& p);

/// The unique pair that is simultaneously stationary for both closed
/// equations: sigma_z from the thermal photon initialization, then the photon
/// relation evaluated at that inversion (which lands back on nbar_c).
SteadyState steady_state_consistent(const SystemParams& p);

}  // namespace nvsim
