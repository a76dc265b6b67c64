#include "stq/observable.hpp"

#include "stq/spectral.hpp"

namespace stq {

ObservableSpec coordinate_observable(int coord)
{
    ObservableSpec o;
    o.name = "x" + std::to_string(coord);
    o.apply = [coord](const AxisField& f, double) {
        const int a = f.lattice.axis_of(coord);
        if (a < 0) throw std::invalid_argument("coordinate_observable: lattice does not sample coordinate " + std::to_string(coord));
        AxisField out = f;
        for (std::size_t s = 0; s < f.lattice.sites(); ++s) {
            const double x = f.lattice.coordinate(a, f.lattice.unflatten(s)[static_cast<std::size_t>(a)]);
            for (int c = 0; c < f.components; ++c) out.at(s, c) *= x;
        }
        return out;
    };
    return o;
}

ObservableSpec wavenumber_observable(int coord)
{
    ObservableSpec o;
    o.name = "p" + std::to_string(coord);
    o.apply = [coord](const AxisField& f, double) {
        const int a = f.lattice.axis_of(coord);
        if (a < 0) throw std::invalid_argument("wavenumber_observable: lattice does not sample coordinate " + std::to_string(coord));
        AxisField d = spectral_derivative(f, a, 1);
        d *= iunit;
        return d;
    };
    return o;
}

ObservableSpec matrix_observable(const std::string& name, const Eigen::MatrixXcd& m)
{
    ObservableSpec o;
    o.name = name;
    o.apply = [m](const AxisField& f, double) {
        AxisField out = AxisField::zeros(f.lattice, f.components);
        Eigen::VectorXcd v(f.components), w(f.components);
        for (std::size_t s = 0; s < f.lattice.sites(); ++s) {
            for (int c = 0; c < f.components; ++c) v(c) = f.at(s, c);
            w = m * v;
            for (int c = 0; c < f.components; ++c) out.at(s, c) = w(c);
        }
        return out;
    };
    return o;
}

Eigen::MatrixXcd evolution_metric(const GeneralizedHamiltonian& ham)
{
    if (ham.family == Family::kg_two_component) {
        // indefinite products: tau3 for the standard t-form, tau2 for the
        // spatial-axis split
        return ham.axis == 0 ? build_tau_basis().tau3 : build_tau_basis().tau2;
    }
    if (ham.axis == 0) return Eigen::MatrixXcd::Identity(4, 4);
    // Along x^j the conserved current is psi^+ alpha_j psi, and H_j is
    // pseudo-Hermitian with respect to alpha_j.
    return build_gamma_basis().alpha[static_cast<std::size_t>(ham.axis - 1)];
}

cplx slice_inner(const Eigen::MatrixXcd& metric, const AxisField& a, const AxisField& b)
{
    int coord = 0;
    while (a.lattice.has_coord(coord)) ++coord;
    return indefinite_inner(metric, a, b, coord);
}

cplx expectation(const Eigen::MatrixXcd& metric, const AxisField& psi, const ObservableSpec& obs, double s)
{
    const cplx num = slice_inner(metric, psi, obs.apply(psi, s));
    const cplx den = slice_inner(metric, psi, psi);
    return num / den;
}

namespace {

// unnormalized expectations; the runs conserve (psi, M psi)
cplx raw_expect(const Eigen::MatrixXcd& metric, const AxisField& psi, const AxisField& fpsi)
{
    return slice_inner(metric, psi, fpsi);
}

struct SideSeries {
    std::vector<double> lhs_re, lhs_im, rhs_re, rhs_im;
};

double ehrenfest_max_residual(const EvolutionRun& run, const ObservableSpec& obs, const Eigen::MatrixXcd& metric)
{
    const Trajectory traj = evolve(run);
    const int n = static_cast<int>(traj.slices.size());
    std::vector<cplx> fexp(static_cast<std::size_t>(n));
    std::vector<cplx> rhs(static_cast<std::size_t>(n));

    for (int j = 0; j < n; ++j) {
        const AxisField& psi = traj.slices[static_cast<std::size_t>(j)];
        const double s = run.step * j;
        fexp[static_cast<std::size_t>(j)] = raw_expect(metric, psi, obs.apply(psi, s));

        cplx r{0.0, 0.0};
        if (obs.dcoord) r += raw_expect(metric, psi, obs.dcoord(psi, s));
        const AxisField hpsi = run.ham.apply(psi);
        const AxisField fh = obs.apply(hpsi, s);
        const AxisField hf = run.ham.apply(obs.apply(psi, s));
        r += iunit * (raw_expect(metric, psi, hf) - raw_expect(metric, psi, fh));
        rhs[static_cast<std::size_t>(j)] = r;
    }

    // d<F>/ds with the 4th-order central stencil
    double worst = 0.0;
    const double h = run.step;
    for (int j = 2; j < n - 2; ++j) {
        const cplx lhs = (-fexp[static_cast<std::size_t>(j + 2)] + 8.0 * fexp[static_cast<std::size_t>(j + 1)] -
                          8.0 * fexp[static_cast<std::size_t>(j - 1)] + fexp[static_cast<std::size_t>(j - 2)]) /
                         (12.0 * h);
        worst = std::max(worst, std::abs(lhs - rhs[static_cast<std::size_t>(j)]));
    }
    return worst;
}

}  // namespace

ResidualReport ehrenfest_residual(const EvolutionRun& run, const ObservableSpec& obs)
{
    const Eigen::MatrixXcd metric = evolution_metric(run.ham);
    ResidualReport rep;
    rep.scenario = "ehrenfest:" + obs.name;
    const double worst = ehrenfest_max_residual(run, obs, metric);
    rep.note("max_residual", worst, "expectation-value evolution identity along axis " + std::to_string(run.ham.axis));
    return rep;
}

double ehrenfest_convergence_slope(const EvolutionRun& run, const ObservableSpec& obs, int refinements)
{
    const Eigen::MatrixXcd metric = evolution_metric(run.ham);
    std::vector<double> lh, lr;
    EvolutionRun r = run;
    for (int k = 0; k < refinements; ++k) {
        const double res = ehrenfest_max_residual(r, obs, metric);
        lh.push_back(std::log(r.step));
        lr.push_back(std::log(std::max(res, 1e-300)));
        r.step *= 0.5;
        r.steps *= 2;
    }
    // least squares slope
    double mh = 0.0, mr = 0.0;
    for (std::size_t i = 0; i < lh.size(); ++i) { mh += lh[i]; mr += lr[i]; }
    mh /= lh.size();
    mr /= lr.size();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < lh.size(); ++i) {
        num += (lh[i] - mh) * (lr[i] - mr);
        den += (lh[i] - mh) * (lh[i] - mh);
    }
    return num / den;
}

UncertaintyResult uncertainty_product(const EvolutionRun& run, const ObservableSpec& obs, int slice)
{
    const Eigen::MatrixXcd metric = evolution_metric(run.ham);
    const Trajectory traj = evolve(run);
    const int j = slice < 0 ? static_cast<int>(traj.slices.size()) / 2 : slice;
    const AxisField& psi = traj.slices[static_cast<std::size_t>(j)];
    const double s = run.step * j;

    const cplx den = slice_inner(metric, psi, psi);

    const AxisField fpsi = obs.apply(psi, s);
    const cplx fbar = slice_inner(metric, psi, fpsi) / den;
    const cplx f2 = slice_inner(metric, psi, obs.apply(fpsi, s)) / den;
    const double varf = std::max(0.0, (f2 - fbar * fbar).real());

    const AxisField hpsi = run.ham.apply(psi);
    const cplx hbar = slice_inner(metric, psi, hpsi) / den;
    const cplx h2 = slice_inner(metric, psi, run.ham.apply(hpsi)) / den;
    const double varh = std::max(0.0, (h2 - hbar * hbar).real());

    // d<F>/dx^mu per slice: <dF/ds> + i <[H, F]>
    cplx rate{0.0, 0.0};
    if (obs.dcoord) rate += slice_inner(metric, psi, obs.dcoord(psi, s)) / den;
    rate += iunit * (slice_inner(metric, psi, run.ham.apply(fpsi)) - slice_inner(metric, psi, obs.apply(hpsi, s))) / den;

    UncertaintyResult out;
    out.delta_f = std::sqrt(varf);
    out.delta_h = std::sqrt(varh);
    out.rate = std::abs(rate);
    const double scale = std::max({out.delta_f, std::abs(fbar), 1e-30});
    if (out.rate <= 1e-9 * scale) {
        out.defined = false;   // stationary observable: delta_x undefined
        return out;
    }
    out.defined = true;
    out.delta_x = out.delta_f / out.rate;
    out.product = out.delta_x * out.delta_h;
    return out;
}

}  // namespace stq
