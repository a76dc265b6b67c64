#include "stq/genmech.hpp"

#include <cmath>
#include <stdexcept>

namespace stq {
namespace genmech {

namespace {

constexpr double fd_eps = 1e-6;

Vec fd_grad_q(const std::function<double(const Vec&, const Vec&, double)>& f, const Vec& q,
              const Vec& qp, double x1)
{
    Vec g(q.size());
    for (int i = 0; i < q.size(); ++i) {
        const double scale = std::max(1.0, std::abs(q(i)));
        Vec qa = q, qb = q;
        qa(i) += fd_eps * scale;
        qb(i) -= fd_eps * scale;
        g(i) = (f(qa, qp, x1) - f(qb, qp, x1)) / (2.0 * fd_eps * scale);
    }
    return g;
}

Vec fd_grad_qp(const std::function<double(const Vec&, const Vec&, double)>& f, const Vec& q,
               const Vec& qp, double x1)
{
    Vec g(qp.size());
    for (int i = 0; i < qp.size(); ++i) {
        const double scale = std::max(1.0, std::abs(qp(i)));
        Vec a = qp, b = qp;
        a(i) += fd_eps * scale;
        b(i) -= fd_eps * scale;
        g(i) = (f(q, a, x1) - f(q, b, x1)) / (2.0 * fd_eps * scale);
    }
    return g;
}

Vec lag_dq(const XLagrangian& lag, const Vec& q, const Vec& qp, double x1)
{
    return lag.dq ? lag.dq(q, qp, x1) : fd_grad_q(lag.value, q, qp, x1);
}

Vec lag_dqp(const XLagrangian& lag, const Vec& q, const Vec& qp, double x1)
{
    return lag.dqp ? lag.dqp(q, qp, x1) : fd_grad_qp(lag.value, q, qp, x1);
}

Eigen::MatrixXd legendre_hessian(const XLagrangian& lag, const Vec& q, const Vec& qp, double x1)
{
    const int n = static_cast<int>(qp.size());
    Eigen::MatrixXd h(n, n);
    for (int i = 0; i < n; ++i) {
        const double scale = std::max(1.0, std::abs(qp(i)));
        Vec a = qp, b = qp;
        a(i) += fd_eps * scale;
        b(i) -= fd_eps * scale;
        h.col(i) = (lag_dqp(lag, q, a, x1) - lag_dqp(lag, q, b, x1)) / (2.0 * fd_eps * scale);
    }
    return h;
}

}  // namespace

std::pair<XPhaseState, double> legendre(const XLagrangian& lag, const Vec& q, const Vec& qp, double x1)
{
    const Eigen::MatrixXd hess = legendre_hessian(lag, q, qp, x1);
    const double det = hess.determinant();
    if (!std::isfinite(det) || std::abs(det) < 1e-10)
        throw std::runtime_error("legendre: singular Hessian d2L/dq'2, transform undefined");

    XPhaseState s;
    s.q = q;
    s.p = lag_dqp(lag, q, qp, x1);
    s.x1 = x1;
    const double h1 = s.p.dot(qp) - lag.value(q, qp, x1);
    return {s, h1};
}

Vec invert_legendre(const XLagrangian& lag, const Vec& q, const Vec& p, double x1, const Vec& qp_guess)
{
    Vec qp = qp_guess;
    for (int it = 0; it < 60; ++it) {
        const Vec r = lag_dqp(lag, q, qp, x1) - p;
        if (r.cwiseAbs().maxCoeff() < 1e-13) break;
        const Eigen::MatrixXd hess = legendre_hessian(lag, q, qp, x1);
        qp -= hess.fullPivLu().solve(r);
    }
    return qp;
}

XPhaseState hamilton_step(const XHamiltonian& h, const XPhaseState& s, double step)
{
    auto rhs = [&](const Vec& q, const Vec& p, double x1, Vec& dq, Vec& dp) {
        dq = h.dp(q, p, x1);
        dp = -h.dq(q, p, x1);
    };

    Vec k1q, k1p, k2q, k2p, k3q, k3p, k4q, k4p;
    rhs(s.q, s.p, s.x1, k1q, k1p);
    rhs(s.q + 0.5 * step * k1q, s.p + 0.5 * step * k1p, s.x1 + 0.5 * step, k2q, k2p);
    rhs(s.q + 0.5 * step * k2q, s.p + 0.5 * step * k2p, s.x1 + 0.5 * step, k3q, k3p);
    rhs(s.q + step * k3q, s.p + step * k3p, s.x1 + step, k4q, k4p);

    XPhaseState out;
    out.q = s.q + (step / 6.0) * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    out.p = s.p + (step / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    out.x1 = s.x1 + step;
    if (!out.q.allFinite() || !out.p.allFinite())
        throw std::runtime_error("hamilton_step: non-finite state, step rejected");
    return out;
}

std::vector<XPhaseState> integrate(const XHamiltonian& h, XPhaseState s, double step, int steps)
{
    std::vector<XPhaseState> traj;
    traj.reserve(static_cast<std::size_t>(steps) + 1);
    traj.push_back(s);
    for (int n = 0; n < steps; ++n) {
        s = hamilton_step(h, s, step);
        traj.push_back(s);
    }
    return traj;
}

double poisson_bracket(const XHamiltonian& h, const PhaseFunction& f, const XPhaseState& s)
{
    const Vec fq = f.dq(s.q, s.p, s.x1);
    const Vec fp = f.dp(s.q, s.p, s.x1);
    const Vec hq = h.dq(s.q, s.p, s.x1);
    const Vec hp = h.dp(s.q, s.p, s.x1);
    return fq.dot(hp) - fp.dot(hq);
}

ResidualReport euler_lagrange_residual(const XLagrangian& lag, const std::vector<XPhaseState>& traj,
                                       double step)
{
    // recover q' from the Hamiltonian trajectory via the Legendre inverse,
    // then check dL/dq = d/dx^1 (dL/dq') with a central stencil on p(x^1)
    ResidualReport rep;
    rep.scenario = "euler-lagrange";
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < traj.size(); ++j) {
        const XPhaseState& s = traj[j];
        const Vec dp_dx = (traj[j + 1].p - traj[j - 1].p) / (2.0 * step);
        Vec qp_guess = (traj[j + 1].q - traj[j - 1].q) / (2.0 * step);
        const Vec qp = invert_legendre(lag, s.q, s.p, s.x1, qp_guess);
        const Vec lhs = lag_dq(lag, s.q, qp, s.x1);
        worst = std::max(worst, (lhs - dp_dx).cwiseAbs().maxCoeff());
    }
    rep.note("max_residual", worst, "stationary-action equation along the x^1 parameter");
    return rep;
}

XLagrangian quadratic_lagrangian()
{
    XLagrangian lag;
    lag.dim = 1;
    lag.value = [](const Vec&, const Vec& qp, double) { return 0.5 * qp.squaredNorm(); };
    lag.dq = [](const Vec& q, const Vec&, double) { return Vec::Zero(q.size()).eval(); };
    lag.dqp = [](const Vec&, const Vec& qp, double) { return qp; };
    return lag;
}

XHamiltonian harmonic_hamiltonian()
{
    XHamiltonian h;
    h.dim = 1;
    h.value = [](const Vec& q, const Vec& p, double) { return 0.5 * (p.squaredNorm() + q.squaredNorm()); };
    h.dq = [](const Vec& q, const Vec&, double) { return q; };
    h.dp = [](const Vec&, const Vec& p, double) { return p; };
    return h;
}

XLagrangian relativistic_time_lagrangian(double m)
{
    XLagrangian lag;
    lag.dim = 1;
    lag.value = [m](const Vec&, const Vec& qp, double) {
        const double tp = qp(0);
        if (tp <= 1.0) throw std::domain_error("relativistic worldline: t' <= 1 leaves the validity domain");
        return -m * std::sqrt(tp * tp - 1.0);
    };
    lag.dq = [](const Vec& q, const Vec&, double) { return Vec::Zero(q.size()).eval(); };
    lag.dqp = [m](const Vec&, const Vec& qp, double) {
        const double tp = qp(0);
        Vec g(1);
        g(0) = -m * tp / std::sqrt(tp * tp - 1.0);
        return g;
    };
    return lag;
}

XHamiltonian relativistic_x_hamiltonian(double m)
{
    XHamiltonian h;
    h.dim = 1;
    h.value = [m](const Vec&, const Vec& p, double) {
        return -std::sqrt(p(0) * p(0) - m * m);
    };
    h.dq = [](const Vec& q, const Vec&, double) { return Vec::Zero(q.size()).eval(); };
    h.dp = [m](const Vec&, const Vec& p, double) {
        Vec g(1);
        g(0) = -p(0) / std::sqrt(p(0) * p(0) - m * m);
        return g;
    };
    return h;
}

XHamiltonian standard_relativistic_hamiltonian(double m)
{
    XHamiltonian h;
    h.dim = 1;
    h.value = [m](const Vec&, const Vec& p, double) { return std::sqrt(p(0) * p(0) + m * m); };
    h.dq = [](const Vec& q, const Vec&, double) { return Vec::Zero(q.size()).eval(); };
    h.dp = [m](const Vec&, const Vec& p, double) {
        Vec g(1);
        g(0) = p(0) / std::sqrt(p(0) * p(0) + m * m);
        return g;
    };
    return h;
}

}  // namespace genmech
}  // namespace stq
