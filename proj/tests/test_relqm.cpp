#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stq/observable.hpp"
#include "stq/spectral.hpp"
#include "stq/spectrum_shift.hpp"
#include "stq/waves.hpp"

using namespace stq;

namespace {

double det_uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

AxisField smooth_scalar(const LatticeSpec& lat, std::mt19937_64& rng, int bandwidth)
{
    AxisField f = AxisField::zeros(lat, 1);
    const double l = lat.axes[0].extent;
    for (int q = -bandwidth; q <= bandwidth; ++q) {
        const cplx a{det_uniform(rng, -1, 1), det_uniform(rng, -1, 1)};
        for (std::size_t s = 0; s < lat.sites(); ++s)
            f.at(s, 0) += a * std::exp(iunit * (2.0 * pi * q / l) * lat.coordinate(0, static_cast<int>(s)));
    }
    return f;
}

}  // namespace

TEST_CASE("two-component split: linear identities and round-trip")
{
    const double m = 1.7;
    LatticeSpec lat = lattice_1d(1, 64, 8.0);

    AxisField zero = AxisField::zeros(lat, 1);
    AxisField z2 = kg_to_two_component(zero, zero, m, 1);
    CHECK(max_abs(z2) == 0.0);

    std::mt19937_64 rng(3);
    AxisField phi = smooth_scalar(lat, rng, 9);
    AxisField dphi = spectral_derivative(phi, 0, 1);
    AxisField psi = kg_to_two_component(phi, dphi, m, 1);

    // varphi + chi = i phi, exactly
    double worst = 0.0;
    for (std::size_t s = 0; s < lat.sites(); ++s)
        worst = std::max(worst, std::abs(psi.at(s, 0) + psi.at(s, 1) - iunit * phi.at(s, 0)));
    CHECK(worst <= 1e-13 * std::max(1.0, max_abs(phi)));

    auto [phi2, dphi2] = two_component_to_kg(psi, m);
    CHECK(max_abs_diff(phi2, phi) <= 1e-12);
    CHECK(max_abs_diff(dphi2, dphi) <= 1e-12);

    CHECK_THROWS_AS(kg_to_two_component(phi, dphi, 0.0, 1), std::invalid_argument);
}

TEST_CASE("two-component split: on-shell plane wave round-trip")
{
    const CommensurateFamily fam = commensurate_modes_1p1();
    LatticeSpec lat = lattice_1d(1, 64, fam.box);
    AxisField phi = kg_wave_sum(fam.mass, fam.modes, lat);
    AxisField psi = kg_two_component_wave_sum(fam.mass, fam.modes, lat);
    auto [phi2, dphi2] = two_component_to_kg(psi, fam.mass);
    CHECK(max_abs_diff(phi2, phi) <= 1e-12 * max_abs(phi));
    // and the derivative line matches the spectral derivative of phi
    AxisField dphi = spectral_derivative(phi, 0, 1);
    CHECK(max_abs_diff(dphi2, dphi) <= 1e-9 * max_abs(dphi));
}

TEST_CASE("dirac H_0 on a constant spinor is beta m")
{
    const GammaBasis gb = build_gamma_basis();
    GeneralizedHamiltonian h{Family::dirac, 0, 2.3, {}};
    LatticeSpec lat = lattice_1d(1, 16, 4.0);
    AxisField u = AxisField::zeros(lat, 4);
    const Eigen::Vector4cd v{cplx{0.3, 0.0}, cplx{0.1, -0.2}, cplx{0.0, 0.9}, cplx{-0.4, 0.0}};
    for (std::size_t s = 0; s < lat.sites(); ++s)
        for (int c = 0; c < 4; ++c) u.at(s, c) = v(c);

    AxisField hu = h.apply(u);
    const Eigen::Vector4cd want = 2.3 * (gb.beta * v);
    double worst = 0.0;
    for (std::size_t s = 0; s < lat.sites(); ++s)
        for (int c = 0; c < 4; ++c) worst = std::max(worst, std::abs(hu.at(s, c) - want(c)));
    CHECK(worst <= 1e-13);
}

TEST_CASE("dirac momentum block along x^1: doubly degenerate +/- sqrt spectrum")
{
    GeneralizedHamiltonian h{Family::dirac, 1, 1.1, {}};
    const std::array<double, 4> p{2.9, 0.0, 0.7, -0.4};   // p0^2 > p2^2 + p3^2 + m^2
    const double want = std::sqrt(p[0] * p[0] - p[2] * p[2] - p[3] * p[3] - 1.1 * 1.1);

    BlockEigen be = block_eigensystem(h, p);
    std::vector<double> ev;
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(be.values(i).imag()) <= 1e-12);
        ev.push_back(be.values(i).real());
    }
    std::sort(ev.begin(), ev.end());
    CHECK(ev[0] == doctest::Approx(-want).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(-want).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(want).epsilon(1e-12));
    CHECK(ev[3] == doctest::Approx(want).epsilon(1e-12));
    CHECK(h.propagating(p));
    CHECK(!h.propagating({1.0, 0.0, 0.7, -0.4}));
}

TEST_CASE("two-component eigen-relation i d_1 psi = H_1 psi on shell")
{
    const CommensurateFamily fam = commensurate_modes_1p1();
    LatticeSpec lat = lattice_2d(0, 64, fam.box, 1, 64, fam.box);
    AxisField psi = kg_two_component_wave_sum(fam.mass, fam.modes, lat);

    GeneralizedHamiltonian h{Family::kg_two_component, 1, fam.mass, {}};
    AxisField hpsi = h.apply(psi);
    AxisField id1 = iunit * spectral_derivative(psi, lat.axis_of(1), 1);
    CHECK(max_abs_diff(hpsi, id1) <= 1e-10 * std::max(1.0, max_abs(psi)));
}

TEST_CASE("single-mode eigen-relation: apply_H returns p_1 times the mode")
{
    const CommensurateFamily fam = commensurate_modes_1p1();
    const OnShellMode mode = fam.modes[1];
    LatticeSpec lat = lattice_1d(0, 64, fam.box);
    AxisField psi = kg_two_component_wave_sum(fam.mass, {mode}, lat);

    GeneralizedHamiltonian h{Family::kg_two_component, 1, fam.mass, {}};
    AxisField hpsi = h.apply(psi);
    AxisField want = cplx{-mode.p1, 0.0} * psi;   // i d_1 eigenvalue is the lower-index p_1
    CHECK(max_abs_diff(hpsi, want) <= 1e-10 * max_abs(psi));
}

TEST_CASE("pseudo-hermiticity: tau2 succeeds, tau3 fails on momentum blocks")
{
    const TauBasis tb = build_tau_basis();
    GeneralizedHamiltonian h{Family::kg_two_component, 1, 1.3, {}};
    std::mt19937_64 rng(19);
    double worst2 = 0.0, best3 = 1e300;
    for (int trial = 0; trial < 25; ++trial) {
        std::array<double, 4> p{0.0, 0.0, det_uniform(rng, -2, 2), det_uniform(rng, -2, 2)};
        p[0] = std::sqrt(p[2] * p[2] + p[3] * p[3] + 1.3 * 1.3) + det_uniform(rng, 0.2, 3.0);
        const Eigen::MatrixXcd b = h.momentum_block(p);
        worst2 = std::max(worst2, pseudo_hermiticity_residual(tb.tau2, b));
        best3 = std::min(best3, pseudo_hermiticity_residual(tb.tau3, b));
    }
    CHECK(worst2 <= 1e-12);
    CHECK(best3 > 1e-3);
}

TEST_CASE("spectral evolution of an eigenstate is a pure phase")
{
    const CommensurateFamily fam = commensurate_modes_1p1();
    const OnShellMode mode = fam.modes[2];
    LatticeSpec lat = lattice_1d(1, 64, fam.box);
    const GammaBasis gb = build_gamma_basis();
    AxisField psi = dirac_wave_sum(gb, fam.mass, {mode}, lat);

    EvolutionRun run;
    run.ham = GeneralizedHamiltonian{Family::dirac, 0, fam.mass, {}};
    run.initial = psi;
    run.steps = 5;
    run.step = 0.013;
    Trajectory traj = evolve(run);

    const cplx phase = std::exp(-iunit * mode.energy * (run.step * run.steps));
    AxisField want = phase * psi;
    CHECK(max_abs_diff(traj.slices.back(), want) <= 1e-12 * max_abs(psi));
}

TEST_CASE("dual-axis evolution reproduces the closed-form superposition")
{
    const GammaBasis gb = build_gamma_basis();
    const CommensurateFamily fam = commensurate_modes_1p1();
    const int n = 64;
    LatticeSpec xlat = lattice_1d(1, n, fam.box);
    LatticeSpec tlat = lattice_1d(0, n, fam.box);
    LatticeSpec full = lattice_2d(0, n, fam.box, 1, n, fam.box);

    AxisField exact = dirac_wave_sum(gb, fam.mass, fam.modes, full);
    const double scale = std::sqrt(std::norm(l2_inner(exact, exact)));

    // t-evolution from the t = 0 slice
    EvolutionRun trun;
    trun.ham = GeneralizedHamiltonian{Family::dirac, 0, fam.mass, {}};
    trun.initial = dirac_wave_sum(gb, fam.mass, fam.modes, xlat);
    trun.steps = n;
    trun.step = fam.box / n;
    AxisField tfield = evolve(trun).combined();
    const double terr = std::abs(std::sqrt(std::norm(l2_inner(tfield - exact, tfield - exact))) / scale);
    CHECK(terr <= 1e-10);

    // x^1-evolution from the x^1 = 0 slice; initial data sampled from the
    // same closed form
    EvolutionRun xrun;
    xrun.ham = GeneralizedHamiltonian{Family::dirac, 1, fam.mass, {}};
    xrun.initial = dirac_wave_sum(gb, fam.mass, fam.modes, tlat);
    xrun.steps = n;
    xrun.step = fam.box / n;
    AxisField xfield_tx = evolve(xrun).combined();   // axes ordered (x^1, t)

    // compare on the common grid: transpose to (t, x^1)
    double xerr = 0.0;
    double norm2 = 0.0;
    for (int jt = 0; jt < n; ++jt)
        for (int jx = 0; jx < n; ++jx)
            for (int c = 0; c < 4; ++c) {
                const cplx a = xfield_tx.at(static_cast<std::size_t>(jx) * n + jt, c);
                const cplx b = exact.at(static_cast<std::size_t>(jt) * n + jx, c);
                xerr += std::norm(a - b);
                norm2 += std::norm(b);
            }
    CHECK(std::sqrt(xerr / norm2) <= 1e-8);
}

TEST_CASE("ehrenfest: identity and momentum observables are exactly stationary")
{
    const GammaBasis gb = build_gamma_basis();
    LatticeSpec xlat = lattice_1d(1, 128, 32.0);
    EvolutionRun run;
    run.ham = GeneralizedHamiltonian{Family::dirac, 0, 1.0, {}};
    run.initial = dirac_packet(gb, xlat, 1.0, 16.0, 2.0, 0.8);
    run.steps = 24;
    run.step = 0.03;

    ObservableSpec ident = matrix_observable("identity", Eigen::MatrixXcd::Identity(4, 4));
    ResidualReport r1 = ehrenfest_residual(run, ident);
    CHECK(r1.checks[0].value <= 1e-10);

    ObservableSpec mom = wavenumber_observable(1);
    ResidualReport r2 = ehrenfest_residual(run, mom);
    CHECK(r2.checks[0].value <= 1e-10);
}

TEST_CASE("ehrenfest: coordinate observable residual converges at order >= 2")
{
    const GammaBasis gb = build_gamma_basis();
    LatticeSpec xlat = lattice_1d(1, 128, 32.0);
    EvolutionRun run;
    run.ham = GeneralizedHamiltonian{Family::dirac, 0, 1.0, {}};
    run.initial = dirac_packet(gb, xlat, 1.0, 16.0, 2.0, 0.8);
    run.steps = 8;
    run.step = 0.1;
    run.method = EvolveMethod::rk4;

    const double slope = ehrenfest_convergence_slope(run, coordinate_observable(1), 3);
    CHECK(slope >= 1.7);
}

TEST_CASE("uncertainty: eigenstate hits the undefined branch")
{
    const GammaBasis gb = build_gamma_basis();
    const CommensurateFamily fam = commensurate_modes_1p1();
    LatticeSpec xlat = lattice_1d(1, 64, fam.box);
    EvolutionRun run;
    run.ham = GeneralizedHamiltonian{Family::dirac, 0, fam.mass, {}};
    run.initial = dirac_wave_sum(gb, fam.mass, {fam.modes[0]}, xlat);
    run.steps = 6;
    run.step = 0.01;

    UncertaintyResult u = uncertainty_product(run, wavenumber_observable(1));
    CHECK(!u.defined);
}

TEST_CASE("uncertainty: packet products stay above one half")
{
    const GammaBasis gb = build_gamma_basis();
    LatticeSpec xlat = lattice_1d(1, 128, 32.0);
    EvolutionRun run;
    run.ham = GeneralizedHamiltonian{Family::dirac, 0, 1.0, {}};
    run.initial = dirac_packet(gb, xlat, 1.0, 16.0, 1.4, 0.9);
    run.steps = 10;
    run.step = 0.02;

    UncertaintyResult u = uncertainty_product(run, coordinate_observable(1));
    CHECK(u.defined);
    CHECK(u.product >= 0.5 - 1e-9);

    // spatial evolution axis: time operator against H_1
    LatticeSpec tlat = lattice_1d(0, 128, 48.0);
    EvolutionRun xrun;
    xrun.ham = GeneralizedHamiltonian{Family::dirac, 1, 1.0, {}};
    xrun.initial = dirac_right_mover(gb, tlat, 1.0, 2.4, 0.35);
    xrun.steps = 10;
    xrun.step = 0.02;
    UncertaintyResult ux = uncertainty_product(xrun, coordinate_observable(0));
    CHECK(ux.defined);
    CHECK(ux.product >= 0.5 - 1e-9);
}

TEST_CASE("indefinite norm is conserved along the spatial evolution axis")
{
    const TauBasis tb = build_tau_basis();
    LatticeSpec tlat = lattice_1d(0, 128, 48.0);
    EvolutionRun run;
    run.ham = GeneralizedHamiltonian{Family::kg_two_component, 1, 1.0, {}};
    run.initial = kg_right_mover(tlat, 1.0, 2.2, 0.3);
    run.steps = 40;
    run.step = 0.05;
    Trajectory traj = evolve(run);

    const cplx n0 = indefinite_inner(Eigen::MatrixXcd(tb.tau2), traj.slices[0], traj.slices[0], 1);
    double worst = 0.0;
    for (const AxisField& sl : traj.slices) {
        const cplx n = indefinite_inner(Eigen::MatrixXcd(tb.tau2), sl, sl, 1);
        worst = std::max(worst, std::abs(n - n0));
    }
    CHECK(worst <= 1e-8 * std::abs(n0));

    // the ordinary product is conserved along t for the Dirac family
    const GammaBasis gb = build_gamma_basis();
    LatticeSpec xlat = lattice_1d(1, 128, 32.0);
    EvolutionRun drun;
    drun.ham = GeneralizedHamiltonian{Family::dirac, 0, 1.0, {}};
    drun.initial = dirac_packet(gb, xlat, 1.0, 16.0, 2.0, 0.7);
    drun.steps = 40;
    drun.step = 0.02;
    Trajectory dtraj = evolve(drun);
    const cplx d0 = l2_inner(dtraj.slices[0], dtraj.slices[0]);
    double dworst = 0.0;
    for (const AxisField& sl : dtraj.slices) dworst = std::max(dworst, std::abs(l2_inner(sl, sl) - d0));
    CHECK(dworst <= 1e-10 * std::abs(d0));
}

TEST_CASE("substituting i d_mu for the generator collapses the evolution identity")
{
    // i [p_hat_1, F] equals -(d_1 F) as operators, so the substituted
    // equation carries no dynamical content; asserted on evaluated arrays.
    LatticeSpec lat = lattice_1d(1, 128, 16.0);
    std::mt19937_64 rng(23);
    const double carrier = det_uniform(rng, 0.5, 1.5);
    AxisField psi = AxisField::zeros(lat, 1);
    for (std::size_t s = 0; s < lat.sites(); ++s) {
        const double x = lat.coordinate(0, static_cast<int>(s));
        psi.at(s, 0) = std::exp(-0.5 * (x - 8.0) * (x - 8.0)) * std::exp(iunit * carrier * x);
    }

    auto commutator_with_p = [&](const ObservableSpec& f, const AxisField& v) {
        AxisField pf = iunit * spectral_derivative(f.apply(v, 0.0), 0, 1);
        AxisField fp = f.apply(iunit * spectral_derivative(v, 0, 1), 0.0);
        return iunit * (pf - fp);
    };

    // F = x^1 multiplication: d_1 F = identity
    ObservableSpec x1 = coordinate_observable(1);
    AxisField lhs = commutator_with_p(x1, psi);
    AxisField want = cplx{-1.0, 0.0} * psi;
    CHECK(max_abs_diff(lhs, want) <= 1e-10 * max_abs(psi));

    // F = sin(2 pi x / L) multiplication: d_1 F = (2 pi / L) cos(...)
    const double k = 2.0 * pi / 16.0;
    ObservableSpec trig;
    trig.name = "sin";
    trig.apply = [k](const AxisField& f, double) {
        AxisField out = f;
        for (std::size_t s = 0; s < f.lattice.sites(); ++s) {
            const double x = f.lattice.coordinate(0, static_cast<int>(s));
            for (int c = 0; c < f.components; ++c) out.at(s, c) *= std::sin(k * x);
        }
        return out;
    };
    AxisField lhs2 = commutator_with_p(trig, psi);
    AxisField want2 = psi;
    for (std::size_t s = 0; s < lat.sites(); ++s) {
        const double x = lat.coordinate(0, static_cast<int>(s));
        want2.at(s, 0) *= -k * std::cos(k * x);
    }
    CHECK(max_abs_diff(lhs2, want2) <= 1e-9 * max_abs(psi));
}

TEST_CASE("spectrum shift: exact bin relabeling for commensurate pairs")
{
    LatticeSpec tlat = lattice_1d(0, 64, 2.0 * pi);
    const double unit = 1.0;   // 2 pi / extent

    AxisField psi = time_eigenvector(tlat, 2.0 * unit);
    ResidualReport same = spectrum_shift_demo(psi, 0.0);
    CHECK(same.pass());
    CHECK(same.checks[0].value <= 1e-20);

    ResidualReport shifted = spectrum_shift_demo(psi, 1.0 * unit);
    CHECK(shifted.pass());
    bool saw_bin = false;
    for (const Check& c : shifted.checks)
        if (c.name == "shifted_bin_value") {
            CHECK(c.value == doctest::Approx(1.0));
            saw_bin = true;
        }
    CHECK(saw_bin);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        const int ne = static_cast<int>(det_uniform(rng, -20, 20));
        const int na = static_cast<int>(det_uniform(rng, -10, 10));
        AxisField p = time_eigenvector(tlat, ne * unit);
        ResidualReport r = spectrum_shift_demo(p, na * unit);
        CHECK(r.pass());
    }

    // incommensurate: leakage reported, no gate
    ResidualReport leak = spectrum_shift_demo(psi, 0.37);
    CHECK(leak.pass());
    CHECK(leak.checks[0].name == "leakage_fraction");
    CHECK(leak.checks[0].value > 1e-6);
}
