#include "nvsim/symbols.hpp"

namespace nvsim {

const std::vector<SymbolEntry>& symbol_table() {
    static const std::vector<SymbolEntry> table = {
        {"nu_c (omega_c)", "cavity_frequency", "Hz",
         "cavity resonance, ordinary frequency; 2*pi applied only in time-evolution phases"},
        {"nu_0 (omega_0)", "spin_frequency", "Hz",
         "spin ensemble center frequency (distribution center)"},
        {"Q_p", "quality", "-", "cavity quality factor; kappa = nu_c / Q_p"},
        {"kappa", "kappa", "Hz",
         "cavity linewidth. Dynamics: occupation relaxes at 2*kappa, amplitude at kappa. "
         "Transmission: bare-cavity |t_c|^2 FWHM = kappa + gamma1 (half-width kappa/2 in the denominator)"},
        {"gamma_1", "gamma1", "Hz",
         "longitudinal relaxation 1/T1; plain exponential rate (no 2*pi)"},
        {"gamma_2 = Delta_en", "gamma2 / delta_en", "Hz",
         "dephasing rate and inhomogeneous FWHM; a single configuration field with two accepted names"},
        {"v", "pump", "Hz", "incoherent pump rate; enters the inversion as (v - gamma1)"},
        {"g_k = g", "coupling", "Hz",
         "single-spin coupling gamma_e sqrt(h nu_c mu_0 / V_eff); all spins identical"},
        {"V_eff", "mode_volume", "m^3", "effective cavity mode volume"},
        {"N", "spin_count", "-", "ensemble size; N = density * V_eff"},
        {"n_v", "density", "m^-3", "NV volume density"},
        {"T", "temperature", "K", "bath temperature"},
        {"nbar(nu, T)", "-", "-",
         "1/(exp(h nu / kB T) - 1); evaluated at nu_c for cavity terms, nu_0 for spin terms"},
        {"theta", "thermal_argument", "-",
         "tanh argument of the thermal polarization: physical = h nu_0 / (2 kB T) "
         "(equals 1/(2 nbar + 1)); literal = physical / (2 pi^2)"},
        {"Omega_{T,N}", "-", "Hz", "collective coupling g sqrt(N tanh(theta))"},
        {"omega~_c", "-", "Hz",
         "complex cavity frequency in the coherence equation: Im = -kappa"},
        {"omega~_k", "-", "Hz",
         "complex spin frequency: Im = -(gamma1 (2 nbar + 1) + v + gamma2)/2; "
         "Re enters as the detuning 2*pi(nu_0 - nu_c) in the cavity rotating frame"},
        {"rho(omega, Delta_en)", "distribution / mixing", "1/Hz",
         "unit-area spectral density, FWHM Delta_en; pseudo-Voigt mixing = Lorentzian fraction"},
        {"Lambda(omega)", "-", "1/Hz",
         "dispersive kernel PV int rho(w')/(w - w') dw'; the nonlinear Lamb shift is Omega^2 Lambda"},
        {"t_c(omega)", "-", "-",
         "(i kappa/2) / [(nu_c - w) + Omega^2 Lambda - (i/2)(kappa + gamma1 + 2 pi Omega^2 rho)]"},
        {"t_ens(omega)", "-", "-",
         "((nu_c - w) + i kappa) * Lambda * sqrt(t_c); the Omega^2 of the shift cancels the printed 1/Omega^2"},
        {"Gamma_p", "-", "Hz",
         "dressed-state FWHM (kappa + gamma1 + 2 pi Omega^2 rho(Omega))/2"},
        {"Gamma_s", "scatter.quality", "Hz", "scattering-mode linewidth nu_s / Q_s"},
        {"phi", "scatter.phase", "rad", "scattering phase mismatch, wrapped to (-pi, pi]"},
        {"Gamma_MIT", "-", "Hz", "|Gamma_p Gamma_s / (Gamma_p + e^{-i phi} Gamma_s)|"},
        {"zeta", "budget.*", "-",
         "eta_det * eta_ext * N * t_m * gamma_cyc * eta_nvqe, detected photons per measurement"},
        {"P_F", "-", "-",
         "max-slope constant: 4/(3 sqrt 3) Lorentzian, sqrt(e/(8 ln 2)) Gaussian"},
        {"C", "map.contrast", "-",
         "ODMR contrast (peak - baseline)/peak; baseline sampled 10 linewidths off peak unless pinned"},
        {"delta_B", "-", "T/sqrt(Hz)", "shot-noise sensitivity Gamma / (gamma_e C sqrt(zeta))"},
        {"gamma_e", "gyromagnetic_ratio", "Hz/T", "electron-spin gyromagnetic ratio, default 2.8e10"},
        {"gamma_e^2 mu_0 / 2h", "-", "Hz m^3",
         "spin-spin dipole scale mu_0 h gamma_e^2 / 2 (~3.3e-19 Hz m^3); report-only"},
    };
    return table;
}

std::string symbol_table_markdown() {
    std::string md;
    md += "# Symbol table\n\n";
    md += "Canonical mapping between physics symbols, configuration fields, units,\n";
    md += "and the conventions this code adopts. All user-facing frequencies and\n";
    md += "rates are ordinary frequencies in Hz; factors of 2*pi enter only where a\n";
    md += "formula needs an energy (h*nu) or a time-evolution phase.\n\n";
    md += "| Symbol | Field | Unit | Convention |\n";
    md += "|--------|-------|------|------------|\n";
    for (const auto& e : symbol_table()) {
        md += "| " + e.symbol + " | " + e.field + " | " + e.unit + " | " + e.convention + " |\n";
    }
    return md;
}

}  // namespace nvsim
