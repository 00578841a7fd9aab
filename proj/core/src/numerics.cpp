#include "nvsim/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nvsim {

double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_iter) {
    if (!(b > a)) throw std::invalid_argument("golden_section_max: need b > a");
    constexpr double phi = 0.61803398874989484820;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > rel_tol * (std::abs(a) + std::abs(b) + 1e-300);
         ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

SlopePoint max_abs_slope(const std::function<double(double)>& intensity,
                         double a, double b, int coarse_points) {
    if (coarse_points < 8) coarse_points = 8;
    const double h = (b - a) / (coarse_points - 1);
    const double dh = 0.25 * h;  // central-difference step
    auto slope_at = [&](double x) {
        return std::abs(intensity(x + dh) - intensity(x - dh)) / (2.0 * dh);
    };
    double best_x = a + h;
    double best = -1.0;
    for (int i = 1; i + 1 < coarse_points; ++i) {
        const double x = a + i * h;
        const double s = slope_at(x);
        if (s > best) {
            best = s;
            best_x = x;
        }
    }
    const double lo = std::max(a + dh, best_x - 2.0 * h);
    const double hi = std::min(b - dh, best_x + 2.0 * h);
    const double x_star = golden_section_max(slope_at, lo, hi, 1e-12);
    // shrink the difference step for the final value
    const double dh2 = 0.02 * h;
    SlopePoint out;
    out.freq_hz = x_star;
    out.slope = std::abs(intensity(x_star + dh2) - intensity(x_star - dh2)) / (2.0 * dh2);
    return out;
}

}  // namespace nvsim
