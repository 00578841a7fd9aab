#include "nvsim/spectral_density.hpp"

#include <gsl/gsl_sf_dawson.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

namespace nvsim {

namespace {
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kPi = 3.14159265358979323846;

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
}  // namespace

std::string to_string(DensityKind k) {
    switch (k) {
        case DensityKind::gaussian: return "gaussian";
        case DensityKind::lorentzian: return "lorentzian";
        case DensityKind::pseudo_voigt: return "pseudo_voigt";
    }
    return "?";
}

DensityKind density_kind_from_string(const std::string& s) {
    if (s == "gaussian") return DensityKind::gaussian;
    if (s == "lorentzian") return DensityKind::lorentzian;
    if (s == "pseudo_voigt" || s == "pseudo-voigt") return DensityKind::pseudo_voigt;
    throw std::invalid_argument("distribution: unknown kind '" + s + "'");
}

SpectralDensity::SpectralDensity(DensityKind kind, double fwhm_hz,
                                 double center_hz, double mixing)
    : kind_(kind), fwhm_(fwhm_hz), center_(center_hz), mixing_(mixing) {
    if (!(fwhm_hz > 0) || !std::isfinite(fwhm_hz)) {
        throw std::invalid_argument("SpectralDensity: fwhm must be finite and > 0");
    }
    if (!std::isfinite(center_hz)) {
        throw std::invalid_argument("SpectralDensity: center must be finite");
    }
    if (kind == DensityKind::pseudo_voigt) {
        if (mixing < 0.0 || mixing > 1.0) {
            throw std::invalid_argument("SpectralDensity: mixing must lie in [0, 1]");
        }
    } else {
        mixing_ = (kind == DensityKind::lorentzian) ? 1.0 : 0.0;
    }
    gauss_b_ = 4.0 * kLn2 / (fwhm_ * fwhm_);
    gauss_amp_ = 2.0 * std::sqrt(kLn2) / (kSqrtPi * fwhm_);  // = sqrt(b/pi)
    lorentz_amp_ = fwhm_ / (2.0 * kPi);
    lorentz_a2_ = 0.25 * fwhm_ * fwhm_;

    const double total = integrate_density(*this);
    if (std::abs(total - 1.0) > 1e-6) {
        throw std::runtime_error("SpectralDensity: normalization check failed, integral = " +
                                 std::to_string(total));
    }
}

double SpectralDensity::operator()(double freq_hz) const {
    const double x = freq_hz - center_;
    double g = 0.0, l = 0.0;
    if (mixing_ < 1.0) g = gauss_amp_ * std::exp(-gauss_b_ * x * x);
    if (mixing_ > 0.0) l = lorentz_amp_ / (lorentz_a2_ + x * x);
    return mixing_ * l + (1.0 - mixing_) * g;
}

double SpectralDensity::derivative(double freq_hz) const {
    const double x = freq_hz - center_;
    double dg = 0.0, dl = 0.0;
    if (mixing_ < 1.0) {
        dg = gauss_amp_ * std::exp(-gauss_b_ * x * x) * (-2.0 * gauss_b_ * x);
    }
    if (mixing_ > 0.0) {
        const double den = lorentz_a2_ + x * x;
        dl = -lorentz_amp_ * 2.0 * x / (den * den);
    }
    return mixing_ * dl + (1.0 - mixing_) * dg;
}

double SpectralDensity::hilbert(double freq_hz) const {
    const double x = freq_hz - center_;
    double hg = 0.0, hl = 0.0;
    if (mixing_ < 1.0) {
        // PV int A exp(-b u^2)/(x - u) du = A 2 sqrt(pi) F(sqrt(b) x),
        // F the Dawson integral.
        hg = gauss_amp_ * 2.0 * kSqrtPi * gsl_sf_dawson(std::sqrt(gauss_b_) * x);
    }
    if (mixing_ > 0.0) {
        hl = x / (x * x + lorentz_a2_);
    }
    return mixing_ * hl + (1.0 - mixing_) * hg;
}

double integrate_density(const SpectralDensity& d, double rel_tol) {
    // width-scaled coordinates keep all quadrature values O(1)
    const double c = d.center();
    const double w = d.fwhm();
    auto rho = [&](double u) { return w * d(c + u * w); };
    const double R = 40.0;
    double err = 0.0;
    const double core = GK::integrate(rho, -R, R, 12, rel_tol, &err);
    // Tails via t = 1/u: int_{R}^{inf} rho du = int_0^{1/R} rho(1/t)/t^2 dt.
    // Needed because the Lorentzian tail decays only as 1/u^2.
    auto tail = [&](double sign) {
        return GK::integrate(
            [&](double t) {
                if (t == 0.0) {
                    // scaled rho ~ amp/u^2 for large u, so rho(1/t)/t^2 -> amp
                    return d.mixing() * d.lorentzian_norm() / w;
                }
                return rho(sign / t) / (t * t);
            },
            0.0, 1.0 / R, 12, rel_tol, &err);
    };
    return core + tail(1.0) + tail(-1.0);
}

}  // namespace nvsim
