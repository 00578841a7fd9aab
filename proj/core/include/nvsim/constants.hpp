#pragma once

#include <stdexcept>
#include <cmath>

namespace nvsim {

/// Fundamental constants (CODATA 2018) plus the electron-spin gyromagnetic
/// ratio used throughout. All user-facing frequencies and rates are ordinary
/// frequencies in Hz; factors of 2*pi are applied internally wherever a
/// formula needs an energy (h*nu) or a time-evolution phase.
struct PhysicalConstants {
    double planck = 6.62607015e-34;              // J s (exact)
    double planck_reduced = 1.054571817e-34;     // J s
    double boltzmann = 1.380649e-23;             // J/K (exact)
    double vacuum_permeability = 1.25663706212e-6;  // T^2 m^3 / J
    double gyromagnetic_ratio = 2.8e10;          // Hz/T  (2.8 MHz/G)
    double speed_of_light = 2.99792458e8;        // m/s (exact)

    void validate() const {
        if (!(planck > 0) || !(planck_reduced > 0) || !(boltzmann > 0) ||
            !(vacuum_permeability > 0) || !(gyromagnetic_ratio > 0) ||
            !(speed_of_light > 0) || !std::isfinite(gyromagnetic_ratio)) {
            throw std::invalid_argument("PhysicalConstants: all entries must be finite and strictly positive");
        }
    }
};

inline const PhysicalConstants& codata() {
    static const PhysicalConstants c{};
    return c;
}

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace nvsim
