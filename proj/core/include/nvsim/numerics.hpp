#pragma once

#include <functional>

namespace nvsim {

/// Golden-section maximization of a unimodal function on [a, b].
/// Returns the abscissa of the maximum to the given relative tolerance.
double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, double rel_tol = 1e-10, int max_iter = 200);

struct SlopePoint {
    double freq_hz = 0.0;   // where the steepest slope occurs
    double slope = 0.0;     // |dI/df| there
};

/// Maximum absolute derivative of a smooth evaluator on [a, b]: coarse
/// central-difference scan followed by golden-section refinement of |dI/df|
/// around the best interval. Shared by the interference and sensitivity code.
SlopePoint max_abs_slope(const std::function<double(double)>& intensity,
                         double a, double b, int coarse_points = 257);

}  // namespace nvsim
