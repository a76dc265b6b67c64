#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stq/gamma.hpp"
#include "stq/inner.hpp"
#include "stq/lattice.hpp"
#include "stq/spectral.hpp"

using namespace stq;

namespace {

double det_uniform(std::mt19937_64& rng, double lo, double hi)
{
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

AxisField gaussian_1d(const LatticeSpec& lat, double center, double sigma, double k = 0.0)
{
    AxisField f = AxisField::zeros(lat, 1);
    for (std::size_t s = 0; s < lat.sites(); ++s) {
        const double x = lat.coordinate(0, static_cast<int>(s));
        const double g = std::exp(-0.5 * (x - center) * (x - center) / (sigma * sigma));
        f.at(s, 0) = g * std::exp(iunit * k * x);
    }
    return f;
}

}  // namespace

TEST_CASE("clifford algebra of the gamma basis")
{
    const GammaBasis gb = build_gamma_basis();
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            Eigen::Matrix4cd anti = gb.gamma[mu] * gb.gamma[nu] + gb.gamma[nu] * gb.gamma[mu];
            Eigen::Matrix4cd expect = Eigen::Matrix4cd::Zero();
            if (mu == nu) expect = 2.0 * metric(mu) * Eigen::Matrix4cd::Identity();
            CHECK((anti - expect).cwiseAbs().maxCoeff() <= 1e-14);
        }
    }
    CHECK((gb.gamma[0] * gb.gamma[0] + gb.gamma[0] * gb.gamma[0] - 2.0 * Eigen::Matrix4cd::Identity())
              .cwiseAbs()
              .maxCoeff() <= 1e-14);
    CHECK((gb.gamma[1] * gb.gamma[2] + gb.gamma[2] * gb.gamma[1]).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("beta, alpha and spin tensor structure")
{
    const GammaBasis gb = build_gamma_basis();
    CHECK((gb.beta * gb.beta - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    for (int j = 0; j < 3; ++j)
        CHECK((gb.alpha[j] * gb.alpha[j] - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            CHECK((gb.spin[mu][nu] + gb.spin[nu][mu]).cwiseAbs().maxCoeff() <= 1e-14);

    // S^{12} eigenvalues +/- 1/2, doubly degenerate
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(gb.spin[1][2]);
    std::vector<double> ev;
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(es.eigenvalues()(i).imag()) <= 1e-14);
        ev.push_back(es.eigenvalues()(i).real());
    }
    std::sort(ev.begin(), ev.end());
    CHECK(ev[0] == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(ev[1] == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(ev[2] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(ev[3] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("tau matrices: involution and nilpotency")
{
    const TauBasis tb = build_tau_basis();
    CHECK((tb.tau2 * tb.tau2 - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((tb.tau3 * tb.tau3 - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((tb.nilpotent() * tb.nilpotent()).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(tb.tau2(0, 1) == cplx{0.0, -1.0});
    CHECK(tb.tau2(1, 0) == cplx{0.0, 1.0});
    CHECK(tb.tau3(0, 0) == cplx{1.0, 0.0});
    CHECK(tb.tau3(1, 1) == cplx{-1.0, 0.0});
}

TEST_CASE("spectral derivative on constants and single modes")
{
    LatticeSpec lat = lattice_1d(1, 64, 2.0 * pi);
    AxisField c = AxisField::zeros(lat, 1);
    for (auto& z : c.values) z = cplx{2.5, -1.0};
    CHECK(max_abs(spectral_derivative(c, 0, 1)) <= 1e-13);
    CHECK(max_abs(spectral_derivative(c, 0, 2)) <= 1e-13);

    // i d_1 e^{-i p1 x} = p1 e^{-i p1 x}
    const double p1 = 5.0;   // commensurate: 2 pi * 5 / (2 pi)
    AxisField mode = AxisField::zeros(lat, 1);
    for (std::size_t s = 0; s < lat.sites(); ++s)
        mode.at(s, 0) = std::exp(-iunit * p1 * lat.coordinate(0, static_cast<int>(s)));
    AxisField id1 = iunit * spectral_derivative(mode, 0, 1);
    AxisField expect = cplx{p1, 0.0} * mode;
    CHECK(max_abs_diff(id1, expect) <= 1e-12);
}

TEST_CASE("spectral derivative matches the central-difference oracle at second order")
{
    // |spectral - central| should shrink like h^2 on a smooth packet
    std::vector<double> errs;
    for (int n : {64, 128, 256}) {
        LatticeSpec lat = lattice_1d(1, n, 16.0);
        AxisField g = gaussian_1d(lat, 8.0, 0.9, 3.0);
        AxisField sd = spectral_derivative(g, 0, 1);
        const double h = lat.axes[0].spacing();
        double err = 0.0;
        for (int j = 0; j < n; ++j) {
            const int jp = (j + 1) % n;
            const int jm = (j + n - 1) % n;
            const cplx cd = (g.at(jp, 0) - g.at(jm, 0)) / (2.0 * h);
            err = std::max(err, std::abs(cd - sd.at(j, 0)));
        }
        errs.push_back(err);
    }
    CHECK(errs[1] < errs[0]);
    CHECK(errs[2] < errs[1]);
    const double slope = std::log2(errs[0] / errs[2]) / 2.0;
    CHECK(slope >= 1.7);
}

TEST_CASE("twice first derivative agrees with second derivative")
{
    LatticeSpec lat = lattice_1d(2, 128, 12.0);
    std::mt19937_64 rng(7);
    AxisField f = AxisField::zeros(lat, 1);
    // random band-limited data
    for (int q = -10; q <= 10; ++q) {
        const cplx a{det_uniform(rng, -1, 1), det_uniform(rng, -1, 1)};
        for (std::size_t s = 0; s < lat.sites(); ++s)
            f.at(s, 0) += a * std::exp(iunit * (2.0 * pi * q / 12.0) * lat.coordinate(0, static_cast<int>(s)));
    }
    AxisField d2a = spectral_derivative(spectral_derivative(f, 0, 1), 0, 1);
    AxisField d2b = spectral_derivative(f, 0, 2);
    CHECK(max_abs_diff(d2a, d2b) <= 1e-10 * std::max(1.0, max_abs(d2b)));
}

TEST_CASE("spectral derivative rejects non-power-of-two axes")
{
    LatticeSpec lat = lattice_1d(1, 48, 2.0 * pi);
    AxisField f = AxisField::zeros(lat, 1);
    CHECK_THROWS_AS(spectral_derivative(f, 0, 1), std::invalid_argument);
}

TEST_CASE("hypersurface inner product: norm, disjoint supports, metric adjoint")
{
    LatticeSpec lat = lattice_1d(1, 256, 32.0);
    const double sigma = 1.3;
    AxisField g = gaussian_1d(lat, 16.0, sigma);
    // analytic L2 normalization of exp(-x^2/2s^2): (pi s^2)^{-1/4} per dimension
    const double norm = std::pow(pi * sigma * sigma, -0.25);
    g *= cplx{norm, 0.0};
    const cplx n = indefinite_inner(std::nullopt, g, g, 0);   // t = const surface, integrate x^1
    CHECK(std::abs(n - cplx{1.0, 0.0}) <= 1e-10);

    AxisField a = AxisField::zeros(lat, 1);
    AxisField b = AxisField::zeros(lat, 1);
    a.at(3, 0) = cplx{1.0, 2.0};
    b.at(200, 0) = cplx{-4.0, 1.0};
    CHECK(std::abs(indefinite_inner(std::nullopt, a, b, 0)) == 0.0);

    // <psi|M|phi> = conj(<phi|M^+|psi>)
    std::mt19937_64 rng(11);
    LatticeSpec lat2 = lattice_1d(0, 16, 4.0);
    AxisField psi = AxisField::zeros(lat2, 2);
    AxisField phi = AxisField::zeros(lat2, 2);
    for (std::size_t s = 0; s < lat2.sites(); ++s)
        for (int c = 0; c < 2; ++c) {
            psi.at(s, c) = cplx{det_uniform(rng, -1, 1), det_uniform(rng, -1, 1)};
            phi.at(s, c) = cplx{det_uniform(rng, -1, 1), det_uniform(rng, -1, 1)};
        }
    Eigen::MatrixXcd m(2, 2);
    m << cplx{0.3, 0.1}, cplx{-1.0, 0.4}, cplx{0.0, 2.0}, cplx{0.7, -0.3};
    const cplx lhs = indefinite_inner(m, psi, phi, 1);
    const cplx rhs = std::conj(indefinite_inner(Eigen::MatrixXcd(m.adjoint()), phi, psi, 1));
    CHECK(std::abs(lhs - rhs) <= 1e-13);
}

TEST_CASE("two-component metric value is recorded, not asserted")
{
    // psi with chi = varphi: psi^+ tau2 psi integrates to something purely real
    const TauBasis tb = build_tau_basis();
    LatticeSpec lat = lattice_1d(0, 64, 8.0);
    AxisField psi = AxisField::zeros(lat, 2);
    for (std::size_t s = 0; s < lat.sites(); ++s) {
        const double x = lat.coordinate(0, static_cast<int>(s));
        const cplx v = std::exp(-0.25 * (x - 4.0) * (x - 4.0)) * std::exp(iunit * x);
        psi.at(s, 0) = v;
        psi.at(s, 1) = v;
    }
    const cplx val = indefinite_inner(Eigen::MatrixXcd(tb.tau2), psi, psi, 1);
    CHECK(std::abs(val.imag()) <= 1e-12);   // tau2 hermitian => real quadratic form
    // equal components make psi^+ tau2 psi vanish pointwise
    CHECK(std::abs(val) <= 1e-12);
}

TEST_CASE("lattice flatten/unflatten round-trip and slicing")
{
    LatticeSpec lat = lattice_2d(0, 8, 4.0, 1, 16, 8.0);
    for (std::size_t s : {std::size_t{0}, std::size_t{17}, std::size_t{127}}) {
        CHECK(lat.flatten(lat.unflatten(s)) == s);
    }
    AxisField f = AxisField::zeros(lat, 2);
    for (std::size_t s = 0; s < lat.sites(); ++s) f.at(s, 0) = static_cast<double>(s);
    AxisField sl = slice_field(f, 0, 3);
    CHECK(sl.lattice.rank() == 1);
    CHECK(sl.lattice.axes[0].coord == 1);
    for (int j = 0; j < 16; ++j) CHECK(sl.at(static_cast<std::size_t>(j), 0) == cplx{static_cast<double>(3 * 16 + j), 0.0});
}
