#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stq/diracfield.hpp"
#include "stq/kgfield.hpp"

using namespace stq;
using namespace stq::fock;

namespace {

double det_uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// quantization along x^1: hypersurface wave numbers (k0, k2, k3), all modes
// above the shell, symmetric under k -> -k
ModeLattice small_kg_lattice()
{
    return make_mode_lattice(1, 0.5, {2.0 * pi, 2.0 * pi, 2.0 * pi},
                             {{2, 0, 0}, {-2, 0, 0}, {3, 1, 0}, {-3, -1, 0}});
}

DiracModeSet small_dirac_modes()
{
    return make_dirac_modes(1.0, {2.0 * pi, 2.0 * pi, 2.0 * pi}, {{1, 0, 0}, {-1, 0, 0}});
}

}  // namespace

TEST_CASE("ladder algebra: bosonic commutators below the cutoff")
{
    FockRep rep(Statistics::boson, 2, 3);
    const SpMat proj = rep.protected_projector(1);
    SpMat ident = rep.id();
    for (int k = 0; k < 2; ++k) {
        const SpMat comm = SpMat(rep.lower(k) * rep.raise(k)) - SpMat(rep.raise(k) * rep.lower(k));
        CHECK(projected_max_abs_diff(comm, ident, proj) <= 1e-14);
    }
    // distinct modes commute exactly
    const SpMat cross = SpMat(rep.lower(0) * rep.raise(1)) - SpMat(rep.raise(1) * rep.lower(0));
    CHECK(max_abs(cross) == 0.0);
    const SpMat lowlow = SpMat(rep.lower(0) * rep.lower(1)) - SpMat(rep.lower(1) * rep.lower(0));
    CHECK(max_abs(lowlow) == 0.0);
}

TEST_CASE("ladder algebra: fermionic anticommutators are exact")
{
    FockRep rep(Statistics::fermion, 5, 1);
    SpMat ident = rep.id();
    for (int k = 0; k < 5; ++k)
        for (int l = 0; l < 5; ++l) {
            const SpMat anti = SpMat(rep.lower(k) * rep.raise(l)) + SpMat(rep.raise(l) * rep.lower(k));
            if (k == l)
                CHECK(max_abs(SpMat(anti - ident)) == 0.0);
            else
                CHECK(max_abs(anti) == 0.0);
            const SpMat cc = SpMat(rep.lower(k) * rep.lower(l)) + SpMat(rep.lower(l) * rep.lower(k));
            CHECK(max_abs(cc) == 0.0);
        }
}

TEST_CASE("scalar field at a point: vacuum expectations and adjoint consistency")
{
    ModeLattice modes = small_kg_lattice();
    FockRep rep(Statistics::boson, 2 * static_cast<int>(modes.count()), 2);

    const std::array<double, 4> x{0.3, 0.7, -0.2, 0.1};
    const std::array<double, 4> y{-0.4, 0.7, 0.9, 0.0};

    const SpMat phi_x = kg_phi(modes, rep, x).matrix();
    CHECK(std::abs(phi_x.coeff(0, 0)) == 0.0);   // <0|phi|0> = 0

    // <0|phi(x) phi^+(y)|0> equals the direct mode sum
    const SpMat prod = SpMat(phi_x * kg_phi_dag(modes, rep, y).matrix());
    cplx want{0.0, 0.0};
    for (std::size_t k = 0; k < modes.count(); ++k)
        want += kg_mode_function(modes, k, x) * std::conj(kg_mode_function(modes, k, y));
    CHECK(std::abs(prod.coeff(0, 0) - want) <= 1e-14);

    // phi(x)^H equals the independently built phi^+(x)
    const SpMat adj = phi_x.adjoint();
    const SpMat direct = kg_phi_dag(modes, rep, x).matrix();
    CHECK(max_abs(SpMat(adj - direct)) <= 1e-14);
}

TEST_CASE("equal-surface commutators against the lattice delta")
{
    ModeLattice modes = small_kg_lattice();
    FockRep rep(Statistics::boson, 2 * static_cast<int>(modes.count()), 2);

    // coincident points: i K / V on the protected subspace
    const std::array<double, 4> x{0.2, 0.5, 0.1, -0.3};
    ResidualReport same = kg_equal_surface_commutators(modes, rep, x, x);
    CHECK(same.pass());

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        std::array<double, 4> a{det_uniform(rng, -1, 1), 0.4, det_uniform(rng, -1, 1), det_uniform(rng, -1, 1)};
        std::array<double, 4> b{det_uniform(rng, -1, 1), 0.4, det_uniform(rng, -1, 1), det_uniform(rng, -1, 1)};
        ResidualReport r = kg_equal_surface_commutators(modes, rep, a, b);
        CHECK(r.pass());
    }

    CHECK_THROWS_AS(kg_equal_surface_commutators(modes, rep, {0, 0.1, 0, 0}, {0, 0.2, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("scalar hamiltonian: positivity and the two constructions")
{
    // the acceptance-scale configuration: 3 modes, nmax = 4
    ModeLattice modes = make_mode_lattice(1, 0.5, {2.0 * pi, 2.0 * pi, 2.0 * pi},
                                          {{2, 0, 0}, {3, 1, 0}, {3, -1, 0}});
    FockRep rep(Statistics::boson, 6, 4);
    CHECK(rep.dim() == 15625);

    ResidualReport r = kg_hamiltonian_report(modes, rep);
    INFO(r.checks[0].name, " ", r.checks[0].value);
    CHECK(r.pass());

    // recorded offset between the constructions is tiny for the symmetric split
    for (const Check& c : r.checks)
        if (c.name == "identity_offset") CHECK(std::abs(c.value) <= 1e-9);
}

TEST_CASE("scalar heisenberg equations for both the expansion axis and another axis")
{
    ModeLattice modes = small_kg_lattice();
    FockRep rep(Statistics::boson, 2 * static_cast<int>(modes.count()), 2);

    const std::array<double, 4> x{0.15, -0.4, 0.8, 0.25};
    ResidualReport along = kg_heisenberg_residual(modes, rep, x, 1);
    CHECK(along.pass());
    ResidualReport across = kg_heisenberg_residual(modes, rep, x, 0);
    CHECK(across.pass());
    ResidualReport lateral = kg_heisenberg_residual(modes, rep, x, 2);
    CHECK(lateral.pass());
}

TEST_CASE("single-mode scalar against hand-built two-oscillator matrices")
{
    ModeLattice modes = make_mode_lattice(1, 0.5, {2.0 * pi, 2.0 * pi, 2.0 * pi}, {{2, 0, 0}});
    FockRep rep(Statistics::boson, 2, 2);

    const std::array<double, 4> x{0.0, 0.0, 0.0, 0.0};
    const SpMat phi = kg_phi(modes, rep, x).matrix();
    const cplx u = kg_mode_function(modes, 0, x);

    // phi = u a + conj(u) b^+ on the 9-dimensional two-oscillator space
    const SpMat want = SpMat(u * rep.lower(0)) + SpMat(std::conj(u) * rep.raise(1));
    CHECK(max_abs(SpMat(phi - want)) == 0.0);

    const double w = modes.modes[0].w;
    const SpMat h = kg_h_modesum(modes, rep, 1);
    CHECK(std::abs(h.coeff(0, 0) - cplx{w, 0.0}) <= 1e-14);   // vacuum at the zero point
    // one particle: occupancy 1 in slot 0 -> state index 3 (base 3 digits)
    CHECK(std::abs(h.coeff(3, 3) - cplx{2.0 * w, 0.0}) <= 1e-14);
}

TEST_CASE("dirac field: anticommutators at equal time")
{
    const GammaBasis gb = build_gamma_basis();
    DiracModeSet modes = small_dirac_modes();
    FockRep rep = make_dirac_rep(modes);
    CHECK(rep.dim() == 256);

    const std::array<double, 4> x{0.7, 0.3, -0.8, 0.2};
    ResidualReport same = dirac_car_report(modes, rep, gb, x, x);
    CHECK(same.pass());

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 3; ++trial) {
        std::array<double, 4> a{0.5, det_uniform(rng, -2, 2), det_uniform(rng, -2, 2), det_uniform(rng, -2, 2)};
        std::array<double, 4> b{0.5, det_uniform(rng, -2, 2), det_uniform(rng, -2, 2), det_uniform(rng, -2, 2)};
        ResidualReport r = dirac_car_report(modes, rep, gb, a, b);
        CHECK(r.pass());
    }
}

TEST_CASE("single-mode dirac check against hand-built two-level matrices")
{
    const GammaBasis gb = build_gamma_basis();
    DiracModeSet modes = make_dirac_modes(1.0, {2.0 * pi, 2.0 * pi, 2.0 * pi}, {{0, 0, 0}});
    FockRep rep = make_dirac_rep(modes);
    CHECK(rep.dim() == 16);

    const std::array<double, 4> x{0.0, 0.0, 0.0, 0.0};
    const double norm = 1.0 / std::sqrt(2.0 * modes.entries[0].energy * modes.volume());
    for (int alpha = 0; alpha < 4; ++alpha) {
        const SpMat psi = dirac_psi(modes, rep, gb, x, alpha).matrix();
        SpMat want(static_cast<int>(rep.dim()), static_cast<int>(rep.dim()));
        for (int s = 0; s < 2; ++s) {
            const Eigen::Vector4cd u = dirac_u(gb, modes.entries[0].pbar, modes.mass, s);
            const Eigen::Vector4cd v = dirac_v(gb, modes.entries[0].pbar, modes.mass, s);
            want += SpMat(norm * u(alpha) * rep.lower(s)) + SpMat(norm * v(alpha) * rep.raise(2 + s));
        }
        CHECK(max_abs(SpMat(psi - want)) <= 1e-14);
    }
}

TEST_CASE("dirac hamiltonian constructions for mu = 0 and mu = 1")
{
    const GammaBasis gb = build_gamma_basis();
    DiracModeSet modes = small_dirac_modes();
    FockRep rep = make_dirac_rep(modes);

    ResidualReport r0 = dirac_hamiltonian_report(modes, rep, gb, 0);
    INFO("mu=0");
    CHECK(r0.pass());
    // the mu = 0 offset is the negative energy sum
    for (const Check& c : r0.checks)
        if (c.name == "identity_offset") CHECK(c.value < 0.0);

    ResidualReport r1 = dirac_hamiltonian_report(modes, rep, gb, 1);
    INFO("mu=1");
    CHECK(r1.pass());
}

TEST_CASE("dirac heisenberg equation and the c-number contrast")
{
    const GammaBasis gb = build_gamma_basis();
    DiracModeSet modes = small_dirac_modes();
    FockRep rep = make_dirac_rep(modes);

    const std::array<double, 4> x{0.4, -0.6, 0.1, 0.9};
    for (int mu : {0, 1, 2}) {
        ResidualReport r = dirac_heisenberg_residual(modes, rep, gb, x, mu);
        CHECK(r.pass());
    }
    ResidualReport c = cnumber_substitution_contrast(modes, rep, gb, x, 0);
    CHECK(c.pass());
}

TEST_CASE("vacuum sector of the contrast: both sides vanish on the vacuum block")
{
    const GammaBasis gb = build_gamma_basis();
    DiracModeSet modes = small_dirac_modes();
    FockRep rep = make_dirac_rep(modes);

    const SpMat h = dirac_h_modesum(modes, rep, 0);
    const std::array<double, 4> x{0.0, 0.2, 0.0, 0.0};
    const SpMat psi = dirac_psi(modes, rep, gb, x, 1).matrix();
    const SpMat comm = SpMat(h * psi) - SpMat(psi * h);
    // vacuum-to-vacuum element of both the commutator and d psi vanish
    CHECK(std::abs(comm.coeff(0, 0)) == 0.0);
    CHECK(std::abs(dirac_dpsi(modes, rep, gb, x, 1, 0).matrix().coeff(0, 0)) == 0.0);
}
