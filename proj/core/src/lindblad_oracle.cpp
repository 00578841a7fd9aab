#include "nvsim/lindblad_oracle.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace nvsim {

namespace {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

Mat kron(const Mat& A, const Mat& B) {
    Mat out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
}

}  // namespace

LindbladOracle::LindbladOracle(const SystemParams& p, int spin_count, int n_cut)
    : n_spins_(spin_count), n_cut_(n_cut) {
    if (spin_count < 1 || spin_count > 3) {
        throw std::invalid_argument("LindbladOracle: spin_count must be 1..3");
    }
    if (n_cut < 1 || n_cut > 10) {
        throw std::invalid_argument("LindbladOracle: n_cut must be 1..10");
    }
    nbar_c_ = p.nbar_cavity();
    nbar_s_ = p.nbar_spin();
    if (nbar_c_ > 0.5) {
        throw std::invalid_argument(
            "LindbladOracle: nbar(cavity) > 0.5, boson truncation invalid at this temperature");
    }
    kappa_ = p.kappa_hz;
    gamma1_ = p.gamma1_hz;
    gamma2_ = p.gamma2_hz;
    pump_ = p.pump_hz;

    const int nb = n_cut + 1;
    const int ns = 1 << spin_count;
    dim_ = ns * nb;

    // boson ladder
    Mat ab = Mat::Zero(nb, nb);
    for (int n = 1; n < nb; ++n) ab(n - 1, n) = std::sqrt(static_cast<double>(n));
    const Mat idb = Mat::Identity(nb, nb);
    const Mat id2 = Mat::Identity(2, 2);

    Mat sm2 = Mat::Zero(2, 2);
    sm2(0, 1) = 1.0;  // |g><e|, basis {g, e}
    Mat sz2 = Mat::Zero(2, 2);
    sz2(0, 0) = -1.0;
    sz2(1, 1) = 1.0;

    const Mat ids = Mat::Identity(ns, ns);
    a_ = kron(ids, ab);
    ad_ = a_.adjoint();

    sm_.resize(static_cast<std::size_t>(spin_count));
    sp_.resize(static_cast<std::size_t>(spin_count));
    sz_.resize(static_cast<std::size_t>(spin_count));
    for (int k = 0; k < spin_count; ++k) {
        Mat op = Mat::Identity(1, 1), opz = Mat::Identity(1, 1);
        for (int j = 0; j < spin_count; ++j) {
            op = kron(op, j == k ? sm2 : id2);
            opz = kron(opz, j == k ? sz2 : id2);
        }
        sm_[static_cast<std::size_t>(k)] = kron(op, idb);
        sp_[static_cast<std::size_t>(k)] = sm_[static_cast<std::size_t>(k)].adjoint();
        sz_[static_cast<std::size_t>(k)] = kron(opz, idb);
    }

    const double delta = kTwoPi * (p.spin_freq_hz - p.cavity_freq_hz);
    const double G = kTwoPi * p.g_hz;
    hamiltonian_ = Mat::Zero(dim_, dim_);
    for (int k = 0; k < spin_count; ++k) {
        const auto& sp = sp_[static_cast<std::size_t>(k)];
        const auto& sm = sm_[static_cast<std::size_t>(k)];
        hamiltonian_ += 0.5 * delta * sz_[static_cast<std::size_t>(k)];
        hamiltonian_ += G * (sp * a_ + sm * ad_);
    }

    auto add_collapse = [&](double rate, const Mat& L) {
        if (rate <= 0.0) return;
        Collapse c;
        c.rate = rate;
        c.L = L;
        c.LdL = L.adjoint() * L;
        collapses_.push_back(std::move(c));
    };
    add_collapse(kappa_ * (nbar_c_ + 1.0), a_);
    add_collapse(kappa_ * nbar_c_, ad_);
    for (int k = 0; k < spin_count; ++k) {
        add_collapse(0.5 * gamma1_ * (nbar_s_ + 1.0), sm_[static_cast<std::size_t>(k)]);
        add_collapse(0.5 * gamma1_ * nbar_s_, sp_[static_cast<std::size_t>(k)]);
        add_collapse(0.5 * pump_, sp_[static_cast<std::size_t>(k)]);
        if (gamma2_ > 0.0) sz_ops_.push_back(sz_[static_cast<std::size_t>(k)]);
    }

    // assemble the generator column by column from single-entry matrices
    const int n2 = dim_ * dim_;
    superop_.resize(n2, n2);
    Mat basis = Mat::Zero(dim_, dim_);
    for (int col = 0; col < n2; ++col) {
        basis(col % dim_, col / dim_) = 1.0;  // column-major vec ordering
        const Mat out = rhs(basis);
        superop_.col(col) = Eigen::Map<const Eigen::VectorXcd>(out.data(), n2);
        basis(col % dim_, col / dim_) = 0.0;
    }

    // spectral form for the propagator, when affordable and well conditioned
    if (n2 <= 1100) {
        Eigen::ComplexEigenSolver<Mat> ces(superop_, /*computeEigenvectors=*/true);
        if (ces.info() == Eigen::Success) {
            eigvals_ = ces.eigenvalues();
            eigvecs_ = ces.eigenvectors();
            eigvecs_lu_.compute(eigvecs_);
            const Mat recon =
                eigvecs_ * eigvals_.asDiagonal() * eigvecs_lu_.solve(Mat::Identity(n2, n2));
            const double scale = superop_.cwiseAbs().maxCoeff();
            const double resid = (recon - superop_).cwiseAbs().maxCoeff();
            have_spectral_ = scale == 0.0 || resid <= 1e-10 * scale;
        }
    }
}

Mat LindbladOracle::ground_vacuum() const {
    Mat rho = Mat::Zero(dim_, dim_);
    rho(0, 0) = 1.0;  // spins |g..g> = bitstring 0, Fock 0
    return rho;
}

Mat LindbladOracle::excited_vacuum() const {
    Mat rho = Mat::Zero(dim_, dim_);
    const int ns = 1 << n_spins_;
    const int idx = (ns - 1) * (n_cut_ + 1);
    rho(idx, idx) = 1.0;
    return rho;
}

Mat LindbladOracle::rhs(const Mat& rho) const {
    const cd minus_i(0.0, -1.0);
    Mat out = minus_i * (hamiltonian_ * rho - rho * hamiltonian_);
    for (const auto& c : collapses_) {
        out += c.rate * (2.0 * (c.L * rho) * c.L.adjoint() - c.LdL * rho - rho * c.LdL);
    }
    const double half_g2 = 0.5 * gamma2_;
    for (const auto& z : sz_ops_) {
        out += half_g2 * (z * rho * z - rho);
    }
    return out;
}

double LindbladOracle::sigma_z_expectation(const Mat& rho, int spin) const {
    return (sz_[static_cast<std::size_t>(spin)] * rho).trace().real();
}

double LindbladOracle::mean_sigma_z(const Mat& rho) const {
    double sum = 0.0;
    for (int k = 0; k < n_spins_; ++k) sum += sigma_z_expectation(rho, k);
    return sum / n_spins_;
}

double LindbladOracle::photon_number(const Mat& rho) const {
    return (ad_ * a_ * rho).trace().real();
}

double LindbladOracle::top_level_population(const Mat& rho) const {
    const int nb = n_cut_ + 1;
    double pop = 0.0;
    for (int s = 0; s < (1 << n_spins_); ++s) {
        const int idx = s * nb + n_cut_;
        pop += rho(idx, idx).real();
    }
    return pop;
}

LindbladOracle::Sample LindbladOracle::analyze(double t, const Mat& rho,
                                               const EvolveOptions& opt) const {
    Sample s;
    s.t_s = t;
    s.sigma_z = mean_sigma_z(rho);
    s.photon_number = photon_number(rho);
    if (n_spins_ >= 2) {
        s.cross_coherence = (sp_[0] * sm_[1] * rho).trace().real();
    }
    for (int k = 0; k < n_spins_; ++k) s.sigma_z_per_spin.push_back(sigma_z_expectation(rho, k));
    s.trace_error = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
    s.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (rho + rho.adjoint()),
                                          Eigen::EigenvaluesOnly);
    s.min_eigenvalue = es.eigenvalues().minCoeff();

    if (opt.check_invariants) {
        std::ostringstream os;
        if (s.hermiticity_error > 1e-12) {
            os << "oracle: Hermiticity violated at t=" << t << " (" << s.hermiticity_error << ")";
            throw std::runtime_error(os.str());
        }
        if (s.trace_error > 1e-10) {
            os << "oracle: trace drift at t=" << t << " (" << s.trace_error << ")";
            throw std::runtime_error(os.str());
        }
        if (s.min_eigenvalue < -1e-9) {
            os << "oracle: positivity violated at t=" << t << " (" << s.min_eigenvalue << ")";
            throw std::runtime_error(os.str());
        }
    }
    const double leak = top_level_population(rho);
    if (leak > opt.leak_tol) {
        std::ostringstream os;
        os << "oracle: top Fock level population " << leak << " at t=" << t
           << " exceeds " << opt.leak_tol << "; raise n_cut";
        throw std::runtime_error(os.str());
    }
    return s;
}

std::vector<LindbladOracle::Sample> LindbladOracle::evolve(
    const Mat& rho0, const std::vector<double>& times_s,
    const EvolveOptions& opt) const {
    namespace odeint = boost::numeric::odeint;
    if (times_s.empty() || times_s.front() != 0.0) {
        throw std::invalid_argument("oracle evolve: times must start at 0");
    }
    if (rho0.rows() != dim_ || rho0.cols() != dim_) {
        throw std::invalid_argument("oracle evolve: density matrix dimension mismatch");
    }

    if (have_spectral_) {
        const Eigen::Index n2 = static_cast<Eigen::Index>(dim_) * dim_;
        const Eigen::VectorXcd rho_vec = Eigen::Map<const Eigen::VectorXcd>(rho0.data(), n2);
        const Eigen::VectorXcd w = eigvecs_lu_.solve(rho_vec);
        std::vector<Sample> samples;
        samples.reserve(times_s.size());
        for (double t : times_s) {
            Mat rho(dim_, dim_);
            if (t == 0.0) {
                rho = rho0;
            } else {
                Eigen::VectorXcd scaled(n2);
                for (Eigen::Index i = 0; i < n2; ++i) {
                    scaled(i) = w(i) * std::exp(eigvals_(i) * t);
                }
                const Eigen::VectorXcd v = eigvecs_ * scaled;
                rho = Eigen::Map<const Mat>(v.data(), dim_, dim_);
            }
            samples.push_back(analyze(t, rho, opt));
        }
        return samples;
    }

    using state_type = std::vector<double>;  // interleaved re/im
    const std::size_t n = static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_);
    state_type y(2 * n);
    Eigen::Map<Mat>(reinterpret_cast<cd*>(y.data()), dim_, dim_) = rho0;

    const Eigen::Index n2 = static_cast<Eigen::Index>(n);
    auto sys = [this, n2](const state_type& x, state_type& dxdt, double) {
        Eigen::Map<const Eigen::VectorXcd> v(reinterpret_cast<const cd*>(x.data()), n2);
        Eigen::Map<Eigen::VectorXcd> out(reinterpret_cast<cd*>(dxdt.data()), n2);
        out.noalias() = superop_ * v;
    };

    // fastest rate bounds the first step
    double fastest = kTwoPi * 1.0;
    fastest = std::max(fastest, 2.0 * kappa_ * (2.0 * nbar_c_ + 1.0));
    fastest = std::max(fastest, gamma1_ * (2.0 * nbar_s_ + 1.0) + pump_ + gamma2_);
    fastest = std::max(fastest, hamiltonian_.cwiseAbs().maxCoeff() * 4.0);
    const double dt0 = 0.05 / fastest;

    std::vector<Sample> samples;
    samples.reserve(times_s.size());
    auto stepper = odeint::make_controlled(opt.abs_tol, opt.rel_tol,
                                           odeint::runge_kutta_dopri5<state_type>());
    state_type work = y;
    odeint::integrate_times(
        stepper, sys, work, times_s.begin(), times_s.end(), dt0,
        [&](const state_type& x, double t) {
            Eigen::Map<const Mat> rho(reinterpret_cast<const cd*>(x.data()), dim_, dim_);
            samples.push_back(analyze(t, rho, opt));
        });
    return samples;
}

}  // namespace nvsim
