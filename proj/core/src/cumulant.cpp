#include "nvsim/cumulant.hpp"

#include <boost/numeric/odeint.hpp>
#include <boost/numeric/ublas/matrix.hpp>
#include <boost/numeric/ublas/vector.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nvsim {

namespace {

using ublas_vec = boost::numeric::ublas::vector<double>;
using ublas_mat = boost::numeric::ublas::matrix<double>;

// Pre-reduced coefficients, nondimensionalized to the 1/kappa time unit and
// with the photon number scaled by nbar_c + 1.
struct Reduced {
    double kappa, gamma1, v, gamma2;   // plain rates, 1/s
    double nbar_s, nbar_c;
    double G;        // 2 pi g
    double delta;    // 2 pi (nu_0 - nu_c)
    double N;
    double a_s;      // (gamma1 + v)(2 nbar_s + 1)
    double gamma_t;  // kappa + (gamma1(2 nbar_s + 1) + v + gamma2)/2
    double nscale;   // nbar_c + 1

    explicit Reduced(const SystemParams& p) {
        kappa = p.kappa_hz;
        gamma1 = p.gamma1_hz;
        v = p.pump_hz;
        gamma2 = p.gamma2_hz;
        nbar_s = p.nbar_spin();
        nbar_c = p.nbar_cavity();
        G = kTwoPi * p.g_hz;
        delta = kTwoPi * (p.spin_freq_hz - p.cavity_freq_hz);
        N = p.spin_count;
        a_s = (gamma1 + v) * (2.0 * nbar_s + 1.0);
        gamma_t = kappa + 0.5 * (gamma1 * (2.0 * nbar_s + 1.0) + v + gamma2);
        nscale = nbar_c + 1.0;
    }

    // y = [sigma_z, n/nscale, Re C, Im C, E], tau = kappa * t
    void rhs(const ublas_vec& y, ublas_vec& dydt) const {
        const double s = y[0];
        const double n = y[1] * nscale;
        const double cr = y[2];
        const double ci = y[3];
        const double E = y[4];
        const double B = 0.5 * (s + 1.0) + (N - 1.0) * E + s * n;
        const double inv_k = 1.0 / kappa;
        dydt[0] = (-a_s * s + (v - gamma1) - 4.0 * G * ci) * inv_k;
        dydt[1] = (2.0 * kappa * (nbar_c - n) + 2.0 * G * N * ci) * inv_k / nscale;
        dydt[2] = (-gamma_t * cr + delta * ci) * inv_k;
        dydt[3] = (-delta * cr - gamma_t * ci + G * B) * inv_k;
        dydt[4] = (2.0 * G * s * ci - (gamma1 + v) * E) * inv_k;
    }

    void jacobian(const ublas_vec& y, ublas_mat& J, ublas_vec& dfdt) const {
        const double s = y[0];
        const double n = y[1] * nscale;
        const double ci = y[3];
        const double inv_k = 1.0 / kappa;
        J.clear();
        J(0, 0) = -a_s * inv_k;
        J(0, 3) = -4.0 * G * inv_k;
        J(1, 1) = -2.0;  // -2 kappa / kappa
        J(1, 3) = 2.0 * G * N * inv_k / nscale;
        J(2, 2) = -gamma_t * inv_k;
        J(2, 3) = delta * inv_k;
        J(3, 0) = G * (0.5 + n) * inv_k;
        J(3, 1) = G * s * inv_k * nscale;
        J(3, 2) = -delta * inv_k;
        J(3, 3) = -gamma_t * inv_k;
        J(3, 4) = G * (N - 1.0) * inv_k;
        J(4, 0) = 2.0 * G * ci * inv_k;
        J(4, 3) = 2.0 * G * s * inv_k;
        J(4, 4) = -(gamma1 + v) * inv_k;
        for (std::size_t i = 0; i < dfdt.size(); ++i) dfdt[i] = 0.0;
    }
};

CumulantState unpack(const ublas_vec& y, double nscale) {
    CumulantState s;
    s.sigma_z = y[0];
    s.photon_number = y[1] * nscale;
    s.coherence = {y[2], y[3]};
    s.spin_excitation = y[4];
    return s;
}

void check_invariants(const ublas_vec& y, double nscale, double tol, double t_s) {
    auto fail = [&](const char* what, double value) {
        std::ostringstream os;
        os << "cumulant integrate: invariant violated at t = " << t_s << " s: "
           << what << " = " << value;
        throw std::runtime_error(os.str());
    };
    if (y[0] < -1.0 - tol || y[0] > 1.0 + tol) fail("sigma_z", y[0]);
    if (y[1] * nscale < -tol * nscale) fail("photon_number", y[1] * nscale);
    // cross-spin coherence: bounded by 1 above and by the singlet value -1/2
    // below (it runs negative whenever the inversion is negative)
    if (y[4] < -0.5 - tol || y[4] > 1.0 + tol) fail("spin_excitation", y[4]);
}

}  // namespace

CumulantState thermal_initial_state(const SystemParams& p) {
    CumulantState s;
    s.sigma_z = 0.0;
    s.photon_number = p.nbar_cavity();
    s.coherence = {0.0, 0.0};
    s.spin_excitation = 0.0;
    return s;
}

CumulantState cumulant_rhs(const CumulantState& s, const SystemParams& p) {
    const Reduced r(p);
    ublas_vec y(5), dydt(5);
    y[0] = s.sigma_z;
    y[1] = s.photon_number / r.nscale;
    y[2] = s.coherence.real();
    y[3] = s.coherence.imag();
    y[4] = s.spin_excitation;
    r.rhs(y, dydt);
    CumulantState d;
    d.sigma_z = dydt[0] * r.kappa;
    d.photon_number = dydt[1] * r.kappa * r.nscale;
    d.coherence = {dydt[2] * r.kappa, dydt[3] * r.kappa};
    d.spin_excitation = dydt[4] * r.kappa;
    return d;
}

Trajectory integrate(const CumulantState& initial, const SystemParams& p,
                     const SamplingGrid& grid, const IntegrationOptions& opt) {
    namespace odeint = boost::numeric::odeint;
    if (!(grid.t_end_s > 0)) throw std::invalid_argument("integrate: t_end must be > 0");
    if (grid.samples < 2) throw std::invalid_argument("integrate: need at least 2 samples");

    const Reduced r(p);
    const double tau_end = grid.t_end_s * r.kappa;

    // sample times (tau units), t = 0 always first
    std::vector<double> taus(static_cast<std::size_t>(grid.samples));
    taus[0] = 0.0;
    if (grid.log_spacing) {
        const double t1 = tau_end * 1e-6;
        const double ratio = std::pow(tau_end / t1, 1.0 / (grid.samples - 2 > 0 ? grid.samples - 2 : 1));
        double t = t1;
        for (int i = 1; i < grid.samples; ++i) {
            taus[static_cast<std::size_t>(i)] = std::min(t, tau_end);
            t *= ratio;
        }
        taus.back() = tau_end;
    } else {
        for (int i = 1; i < grid.samples; ++i) {
            taus[static_cast<std::size_t>(i)] = tau_end * i / (grid.samples - 1);
        }
    }

    ublas_vec y(5);
    y[0] = initial.sigma_z;
    y[1] = initial.photon_number / r.nscale;
    y[2] = initial.coherence.real();
    y[3] = initial.coherence.imag();
    y[4] = initial.spin_excitation;

    auto sys = [&r](const ublas_vec& x, ublas_vec& dxdt, double) { r.rhs(x, dxdt); };
    auto jac = [&r](const ublas_vec& x, ublas_mat& J, double, ublas_vec& dfdt) {
        r.jacobian(x, J, dfdt);
    };

    const double fastest =
        std::max({r.a_s, 2.0 * r.kappa, r.gamma_t, std::abs(r.delta),
                  r.G * std::sqrt(std::max(1.0, 2.0 * r.N))});
    double dt0 = opt.initial_dt_s > 0 ? opt.initial_dt_s * r.kappa
                                      : 0.01 * r.kappa / fastest;
    dt0 = std::min(dt0, tau_end / 100.0);

    auto stepper = odeint::make_dense_output(opt.abs_tol, opt.rel_tol,
                                             odeint::rosenbrock4<double>());
    stepper.initialize(y, 0.0, dt0);

    Trajectory traj;
    traj.params = p;
    traj.times_s.reserve(taus.size());
    traj.states.reserve(taus.size());
    traj.times_s.push_back(0.0);
    traj.states.push_back(initial);  // first sample is the initial condition, exactly

    std::size_t next = 1;
    const double dt_floor = tau_end * 1e-15;
    while (next < taus.size()) {
        stepper.do_step(std::make_pair(sys, jac));
        if (opt.check_invariants) {
            check_invariants(stepper.current_state(), r.nscale, opt.invariant_tol,
                             stepper.current_time() / r.kappa);
        }
        if (!(stepper.current_time_step() > dt_floor)) {
            std::ostringstream os;
            os << "cumulant integrate: step size underflow at t = "
               << stepper.current_time() / r.kappa << " s";
            throw std::runtime_error(os.str());
        }
        while (next < taus.size() && taus[next] <= stepper.current_time()) {
            ublas_vec yi(5);
            stepper.calc_state(taus[next], yi);
            traj.times_s.push_back(taus[next] / r.kappa);
            traj.states.push_back(unpack(yi, r.nscale));
            ++next;
        }
    }
    return traj;
}

SteadyState steady_state(const SystemParams& p, double initial_inversion,
                         double initial_photons) {
    const double g1 = p.gamma1_hz;
    const double v = p.pump_hz;
    if (g1 + v <= 0.0) {
        throw std::invalid_argument("steady_state: gamma1 + pump must be > 0");
    }
    const double nbar_s = p.nbar_spin();
    const double nbar_c = p.nbar_cavity();
    const double N = p.spin_count;
    const double kappa = p.kappa_hz;

    SteadyState out;
    out.sigma_z = ((v - g1) - (4.0 * kappa / N) * (initial_photons - nbar_c)) /
                  ((v + g1) * (2.0 * nbar_s + 1.0));
    out.photon_number =
        nbar_c - (N * (g1 + v) / (4.0 * kappa)) *
                     (initial_inversion * (1.0 + 2.0 * nbar_s) - (v - g1) / (v + g1));
    return out;
}

SteadyState steady_state(const SystemParams& p) {
    return steady_state(p, 0.0, p.nbar_cavity());
}

SteadyState steady_state_consistent(const SystemParams& p) {
    const double sz = steady_state(p, 0.0, p.nbar_cavity()).sigma_z;
    SteadyState out = steady_state(p, sz, p.nbar_cavity());
    out.sigma_z = sz;
    return out;
}

}  // namespace nvsim
