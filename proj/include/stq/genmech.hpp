#pragma once

#include <Eigen/Dense>
#include <functional>

#include "stq/report.hpp"

namespace stq {
namespace genmech {

using Vec = Eigen::VectorXd;

// Lagrangian of a finite-dimensional system parametrized by x^1 instead of
// t: L1(q, q', x^1) with q' = d q / d x^1.  Analytic partials are optional;
// central differences stand in when they are absent.
struct XLagrangian {
    int dim = 1;
    std::function<double(const Vec&, const Vec&, double)> value;
    std::function<Vec(const Vec&, const Vec&, double)> dq;    // dL/dq
    std::function<Vec(const Vec&, const Vec&, double)> dqp;   // dL/dq'
};

struct XPhaseState {
    Vec q;
    Vec p;      // p_(1) = dL1/dq'
    double x1 = 0.0;
};

struct XHamiltonian {
    int dim = 1;
    std::function<double(const Vec&, const Vec&, double)> value;
    std::function<Vec(const Vec&, const Vec&, double)> dq;
    std::function<Vec(const Vec&, const Vec&, double)> dp;
};

// Scalar phase-space function f(q, p, x^1) with partials, for bracket tests.
struct PhaseFunction {
    std::function<double(const Vec&, const Vec&, double)> value;
    std::function<Vec(const Vec&, const Vec&, double)> dq;
    std::function<Vec(const Vec&, const Vec&, double)> dp;
    std::function<double(const Vec&, const Vec&, double)> dx1;   // explicit parameter dependence
};

// p_(1) = dL1/dq' and H1 = p_(1) q' - L1 at the given point.  Throws on a
// singular Legendre Hessian d^2 L1 / dq'^2.
std::pair<XPhaseState, double> legendre(const XLagrangian& lag, const Vec& q, const Vec& qp, double x1);

// Invert p = dL1/dq' for q' by Newton iteration from the supplied guess.
Vec invert_legendre(const XLagrangian& lag, const Vec& q, const Vec& p, double x1, const Vec& qp_guess);

// One RK4 step of dq/dx^1 = dH1/dp, dp/dx^1 = -dH1/dq.
XPhaseState hamilton_step(const XHamiltonian& h, const XPhaseState& s, double step);

std::vector<XPhaseState> integrate(const XHamiltonian& h, XPhaseState s, double step, int steps);

double poisson_bracket(const XHamiltonian& h, const PhaseFunction& f, const XPhaseState& s);

// Residual of dL1/dq - d/dx^1 (dL1/dq') along a uniformly sampled
// trajectory; the outer derivative uses a central stencil.
ResidualReport euler_lagrange_residual(const XLagrangian& lag, const std::vector<XPhaseState>& traj,
                                       double step);

// canned models
XLagrangian quadratic_lagrangian();                      // L1 = q'^2 / 2
XHamiltonian harmonic_hamiltonian();                     // H1 = (p^2 + q^2) / 2
// Free relativistic worldline with t parametrized by x^1 (|dx/dt| < 1, so
// t' > 1): L1 = -m sqrt(t'^2 - 1), H1 = -sqrt(p^2 - m^2) with p < -m.
XLagrangian relativistic_time_lagrangian(double m);
XHamiltonian relativistic_x_hamiltonian(double m);
XHamiltonian standard_relativistic_hamiltonian(double m);   // H = sqrt(p^2 + m^2), t-flow oracle

}  // namespace genmech
}  // namespace stq
