#include "stq/evolve.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "stq/spectral.hpp"

namespace stq {

namespace {

// exp(-i B dt), by eigendecomposition when the eigenbasis is well
// conditioned, otherwise by a scaling-and-squaring matrix exponential.
Eigen::MatrixXcd step_propagator(const Eigen::MatrixXcd& block, double dt, bool& fallback)
{
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(block);
    const Eigen::MatrixXcd& v = es.eigenvectors();
    const double cond_proxy = 1.0 / std::abs(v.determinant());
    if (es.info() == Eigen::Success && std::isfinite(cond_proxy) && cond_proxy < 1e8) {
        Eigen::VectorXcd phases = (-iunit * dt * es.eigenvalues().array()).exp();
        fallback = false;
        return v * phases.asDiagonal() * v.inverse();
    }
    fallback = true;
    Eigen::MatrixXcd a = -iunit * dt * block;
    return a.exp();
}

Trajectory evolve_spectral(const EvolutionRun& run)
{
    const LatticeSpec& lat = run.initial.lattice;
    const int comps = run.initial.components;
    const std::size_t sites = lat.sites();

    AxisField amp = run.initial;
    fft_all(amp, true);

    // per-bin propagators and the evanescent filter
    std::vector<Eigen::MatrixXcd> props(sites);
    std::vector<bool> keep(sites, true);
    Trajectory traj;
    for (std::size_t s = 0; s < sites; ++s) {
        std::vector<int> bins = lat.unflatten(s);
        std::array<double, 4> p = run.ham.transverse;
        for (int a = 0; a < lat.rank(); ++a)
            p[static_cast<std::size_t>(lat.axes[static_cast<std::size_t>(a)].coord)] =
                lat.lower_wavenumber(a, bins[static_cast<std::size_t>(a)]);

        if (run.evanescent == EvanescentPolicy::filter && !run.ham.propagating(p)) {
            keep[s] = false;
            continue;
        }
        bool fb = false;
        props[s] = step_propagator(run.ham.momentum_block(p), run.step, fb);
        if (fb) ++traj.expm_fallbacks;
    }

    for (std::size_t s = 0; s < sites; ++s)
        if (!keep[s])
            for (int c = 0; c < comps; ++c) amp.at(s, c) = cplx{0.0, 0.0};

    traj.axis = run.ham.axis;
    traj.step = run.step;
    traj.slices.reserve(static_cast<std::size_t>(run.steps) + 1);

    auto emit = [&](const AxisField& a) {
        AxisField pos = a;
        fft_all(pos, false);
        traj.slices.push_back(std::move(pos));
    };
    emit(amp);

    Eigen::VectorXcd v(comps), w(comps);
    for (int n = 0; n < run.steps; ++n) {
        for (std::size_t s = 0; s < sites; ++s) {
            if (!keep[s]) continue;
            for (int c = 0; c < comps; ++c) v(c) = amp.at(s, c);
            w = props[s] * v;
            for (int c = 0; c < comps; ++c) amp.at(s, c) = w(c);
        }
        emit(amp);
    }
    return traj;
}

Trajectory evolve_rk4(const EvolutionRun& run)
{
    Trajectory traj;
    traj.axis = run.ham.axis;
    traj.step = run.step;
    traj.slices.reserve(static_cast<std::size_t>(run.steps) + 1);
    traj.slices.push_back(run.initial);

    const cplx mi = -iunit;
    AxisField psi = run.initial;
    const double h = run.step;
    for (int n = 0; n < run.steps; ++n) {
        AxisField k1 = mi * run.ham.apply(psi);
        AxisField k2 = mi * run.ham.apply(psi + cplx{0.5 * h, 0.0} * k1);
        AxisField k3 = mi * run.ham.apply(psi + cplx{0.5 * h, 0.0} * k2);
        AxisField k4 = mi * run.ham.apply(psi + cplx{h, 0.0} * k3);
        k1 *= cplx{h / 6.0, 0.0};
        k2 *= cplx{h / 3.0, 0.0};
        k3 *= cplx{h / 3.0, 0.0};
        k4 *= cplx{h / 6.0, 0.0};
        psi += k1; psi += k2; psi += k3; psi += k4;
        if (!psi.finite()) throw std::runtime_error("evolve: rk4 step produced non-finite values");
        traj.slices.push_back(psi);
    }
    return traj;
}

}  // namespace

Trajectory evolve(const EvolutionRun& run)
{
    if (run.initial.lattice.has_coord(run.ham.axis))
        throw std::invalid_argument("evolve: initial data must live on the hypersurface orthogonal to the evolution axis");
    if (run.initial.components != run.ham.components())
        throw std::invalid_argument("evolve: component count does not match the equation family");
    return run.method == EvolveMethod::spectral_exponential ? evolve_spectral(run) : evolve_rk4(run);
}

AxisField Trajectory::combined() const
{
    const AxisField& first = slices.front();
    LatticeSpec full = first.lattice;
    const int n = static_cast<int>(slices.size()) - 1;
    full.axes.insert(full.axes.begin(), Axis{axis, n, step * n});

    AxisField out = AxisField::zeros(full, first.components);
    const std::size_t sub = first.lattice.sites();
    for (int j = 0; j < n; ++j)
        for (std::size_t s = 0; s < sub; ++s)
            for (int c = 0; c < first.components; ++c)
                out.at(static_cast<std::size_t>(j) * sub + s, c) = slices[static_cast<std::size_t>(j)].at(s, c);
    return out;
}

BlockEigen block_eigensystem(const GeneralizedHamiltonian& ham, const std::array<double, 4>& p_lower)
{
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ham.momentum_block(p_lower));
    return BlockEigen{es.eigenvalues(), es.eigenvectors()};
}

}  // namespace stq
