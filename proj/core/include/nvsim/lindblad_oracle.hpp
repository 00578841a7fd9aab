#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nvsim/params.hpp"

namespace nvsim {

/// Brute-force Lindblad master-equation solver for tiny systems (N <= 3
/// spins, truncated boson ladder). Used exclusively by the test suites to
/// validate the cumulant closure in regimes where both descriptions hold;
/// the CLI never touches it.
///
/// Works in the frame rotating at the cavity frequency, so only the spin
/// detuning nu_0 - nu_c enters the Hamiltonian. Dissipators:
///   kappa (nbar_c+1) D[a] + kappa nbar_c D[a+]
///   (gamma1/2)(nbar_s+1) D[sigma-_k] + (gamma1/2) nbar_s D[sigma+_k]
///   (gamma2/2)(sigma^z_k rho sigma^z_k - rho)
///   (v/2) D[sigma+_k]
/// with D[L] rho = 2 L rho L+ - {L+L, rho}.
class LindbladOracle {
  public:
    LindbladOracle(const SystemParams& p, int spin_count, int n_cut);

    int dimension() const { return dim_; }
    int n_cut() const { return n_cut_; }
    int spins() const { return n_spins_; }

    /// |g...g, 0> projector.
    Eigen::MatrixXcd ground_vacuum() const;
    /// All spins excited, empty cavity.
    Eigen::MatrixXcd excited_vacuum() const;

    Eigen::MatrixXcd rhs(const Eigen::MatrixXcd& rho) const;

    double sigma_z_expectation(const Eigen::MatrixXcd& rho, int spin) const;
    double mean_sigma_z(const Eigen::MatrixXcd& rho) const;
    double photon_number(const Eigen::MatrixXcd& rho) const;
    /// Population of the highest Fock level (truncation-leak monitor).
    double top_level_population(const Eigen::MatrixXcd& rho) const;

    struct Sample {
        double t_s = 0.0;
        double sigma_z = 0.0;
        double photon_number = 0.0;
        double cross_coherence = 0.0;  // Re<sigma+_0 sigma-_1>, 0 for N = 1
        std::vector<double> sigma_z_per_spin;
        double min_eigenvalue = 0.0;
        double trace_error = 0.0;
        double hermiticity_error = 0.0;
    };

    struct EvolveOptions {
        double rel_tol = 1e-9;
        double abs_tol = 1e-12;
        bool check_invariants = true;   // Hermiticity 1e-12, trace 1e-10, positivity -1e-9
        double leak_tol = 1e-6;         // abort if top Fock level exceeds this
    };

    /// Adaptive explicit integration, sampled at the given times (first time
    /// must be 0; the first sample is the initial state).
    std::vector<Sample> evolve(const Eigen::MatrixXcd& rho0,
                               const std::vector<double>& times_s,
                               const EvolveOptions& opt) const;
    std::vector<Sample> evolve(const Eigen::MatrixXcd& rho0,
                               const std::vector<double>& times_s) const {
        return evolve(rho0, times_s, EvolveOptions{});
    }

  private:
    Sample analyze(double t, const Eigen::MatrixXcd& rho, const EvolveOptions& opt) const;

    int n_spins_;
    int n_cut_;
    int dim_;
    double kappa_, gamma1_, gamma2_, pump_;
    double nbar_c_, nbar_s_;
    Eigen::MatrixXcd hamiltonian_;             // rad/s
    Eigen::MatrixXcd a_, ad_;
    std::vector<Eigen::MatrixXcd> sm_, sp_, sz_;
    // collapse operators with rates, L+L precomputed
    struct Collapse {
        double rate;
        Eigen::MatrixXcd L;
        Eigen::MatrixXcd LdL;
    };
    std::vector<Collapse> collapses_;
    std::vector<Eigen::MatrixXcd> sz_ops_;     // dephasing channels
    // dense generator acting on vec(rho); the dimensions stay small enough
    // (d^2 <= ~2000) that one matvec per derivative beats repeated gemms
    Eigen::MatrixXcd superop_;
    // spectral propagator exp(S t) = V diag(exp(lambda t)) V^-1; used when the
    // eigenbasis reproduces S to high accuracy, else evolve() falls back to
    // adaptive stepping (kappa stiffness makes that path far slower)
    bool have_spectral_ = false;
    Eigen::VectorXcd eigvals_;
    Eigen::MatrixXcd eigvecs_;
    Eigen::PartialPivLU<Eigen::MatrixXcd> eigvecs_lu_;
};

}  // namespace nvsim
