#pragma once

#include "nvsim/spectral_density.hpp"

namespace nvsim {

struct PvOptions {
    double rel_tol = 1e-10;   // per-panel target
    double report_tol = 1e-8; // non-convergence threshold on the summed estimate
    int max_depth = 14;
};

struct PvResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Principal-value integral PV int rho(w') / (w - w') dw' by a split-interval
/// scheme: an exact odd-part reduction over a symmetric window around the
/// singularity, adaptive Gauss-Kronrod panels outside it, and
/// reciprocal-substitution tails. Independent of the closed forms in
/// SpectralDensity::hilbert.
PvResult lamb_shift_pv_detailed(const SpectralDensity& d, double freq_hz,
                                const PvOptions& opt = {});

/// Throwing wrapper: reports quadrature non-convergence as a runtime error.
double lamb_shift_pv(const SpectralDensity& d, double freq_hz,
                     const PvOptions& opt = {});

/// Fast dispersive shift used by the transmission code: closed forms for all
/// shipped density kinds (cross-checked against the quadrature in tests).
double lamb_shift(const SpectralDensity& d, double freq_hz);

}  // namespace nvsim
