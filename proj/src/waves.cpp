#include "stq/waves.hpp"

#include "stq/spectral.hpp"

namespace stq {

CommensurateFamily commensurate_modes_1p1(int count)
{
    // n^2 - k^2 = 45 for (23,22), (9,6), (7,2); doubled so the smallest
    // energy clears the mass by more than 1/2.
    static const std::array<std::array<int, 2>, 3> base{{{23, 22}, {9, 6}, {7, 2}}};
    CommensurateFamily fam;
    fam.box = pi;
    fam.mass = std::sqrt(180.0);
    const std::array<cplx, 3> coeffs{cplx{0.6, 0.1}, cplx{-0.3, 0.45}, cplx{0.35, -0.2}};
    for (int i = 0; i < count && i < 3; ++i) {
        OnShellMode m;
        m.energy = 2.0 * base[static_cast<std::size_t>(i)][0];
        m.p1 = 2.0 * base[static_cast<std::size_t>(i)][1];
        m.spin = i % 2;
        m.coeff = coeffs[static_cast<std::size_t>(i)];
        fam.modes.push_back(m);
    }
    return fam;
}

namespace {

cplx mode_phase(const OnShellMode& m, double t, double x)
{
    return std::exp(-iunit * (m.energy * t - m.p1 * x));
}

void coords_of_site(const LatticeSpec& lat, std::size_t s, double& t, double& x)
{
    t = 0.0;
    x = 0.0;
    const std::vector<int> idx = lat.unflatten(s);
    for (int a = 0; a < lat.rank(); ++a) {
        const double v = lat.coordinate(a, idx[static_cast<std::size_t>(a)]);
        if (lat.axes[static_cast<std::size_t>(a)].coord == 0) t = v;
        if (lat.axes[static_cast<std::size_t>(a)].coord == 1) x = v;
    }
}

}  // namespace

AxisField dirac_wave_sum(const GammaBasis& gb, double m, const std::vector<OnShellMode>& modes,
                         const LatticeSpec& lat)
{
    AxisField f = AxisField::zeros(lat, 4);
    std::vector<Eigen::Vector4cd> spinors;
    for (const OnShellMode& mo : modes)
        spinors.push_back(dirac_u(gb, {mo.p1, 0.0, 0.0}, m, mo.spin));

    for (std::size_t s = 0; s < lat.sites(); ++s) {
        double t, x;
        coords_of_site(lat, s, t, x);
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const cplx ph = modes[i].coeff * mode_phase(modes[i], t, x);
            for (int c = 0; c < 4; ++c) f.at(s, c) += ph * spinors[i](c);
        }
    }
    return f;
}

AxisField kg_wave_sum(double m, const std::vector<OnShellMode>& modes, const LatticeSpec& lat)
{
    (void)m;
    AxisField f = AxisField::zeros(lat, 1);
    for (std::size_t s = 0; s < lat.sites(); ++s) {
        double t, x;
        coords_of_site(lat, s, t, x);
        for (const OnShellMode& mo : modes) f.at(s, 0) += mo.coeff * mode_phase(mo, t, x);
    }
    return f;
}

AxisField kg_two_component_wave_sum(double m, const std::vector<OnShellMode>& modes, const LatticeSpec& lat)
{
    AxisField f = AxisField::zeros(lat, 2);
    for (std::size_t s = 0; s < lat.sites(); ++s) {
        double t, x;
        coords_of_site(lat, s, t, x);
        for (const OnShellMode& mo : modes) {
            // d_1 phi = +i p1 phi for the e^{+i p1 x} dependence, so the
            // split of the scalar mode has amplitudes (i -+ p1/m)/2 with
            // p_lower = -p1.
            const cplx ph = mo.coeff * mode_phase(mo, t, x);
            const double plow = -mo.p1;
            f.at(s, 0) += 0.5 * (iunit - plow / m) * ph;
            f.at(s, 1) += 0.5 * (iunit + plow / m) * ph;
        }
    }
    return f;
}

AxisField dirac_packet(const GammaBasis& gb, const LatticeSpec& xlat, double m, double center,
                       double sigma, double kbar, int spin)
{
    const Eigen::Vector4cd u = dirac_u(gb, {kbar, 0.0, 0.0}, m, spin);
    AxisField f = AxisField::zeros(xlat, 4);
    for (std::size_t s = 0; s < xlat.sites(); ++s) {
        const double x = xlat.coordinate(0, static_cast<int>(s));
        const cplx env = std::exp(-0.25 * (x - center) * (x - center) / (sigma * sigma)) *
                         std::exp(iunit * kbar * x);
        for (int c = 0; c < 4; ++c) f.at(s, c) = env * u(c);
    }
    return f;
}

AxisField dirac_right_mover(const GammaBasis& gb, const LatticeSpec& tlat, double m, double e_center,
                            double e_sigma, int spin)
{
    AxisField amp = AxisField::zeros(tlat, 4);
    const int n = tlat.axes[0].points;
    for (int q = 0; q < n; ++q) {
        const double p0 = tlat.lower_wavenumber(0, q);   // i d_t eigenvalue of this bin
        if (p0 <= m) continue;                           // populate only the propagating shell
        const double p1 = std::sqrt(p0 * p0 - m * m);
        const double g = std::exp(-0.25 * (p0 - e_center) * (p0 - e_center) / (e_sigma * e_sigma));
        if (g < 1e-14) continue;
        const Eigen::Vector4cd u = dirac_u(gb, {p1, 0.0, 0.0}, m, spin);
        for (int c = 0; c < 4; ++c) amp.at(static_cast<std::size_t>(q), c) = g * u(c) / std::sqrt(2.0 * p0);
    }
    fft_all(amp, false);
    return amp;
}

AxisField kg_right_mover(const LatticeSpec& tlat, double m, double e_center, double e_sigma)
{
    AxisField amp = AxisField::zeros(tlat, 2);
    const int n = tlat.axes[0].points;
    for (int q = 0; q < n; ++q) {
        const double p0 = tlat.lower_wavenumber(0, q);
        if (p0 <= m) continue;
        const double p1 = std::sqrt(p0 * p0 - m * m);
        const double g = std::exp(-0.25 * (p0 - e_center) * (p0 - e_center) / (e_sigma * e_sigma));
        if (g < 1e-14) continue;
        const double plow = -p1;
        amp.at(static_cast<std::size_t>(q), 0) = 0.5 * (iunit - plow / m) * g;
        amp.at(static_cast<std::size_t>(q), 1) = 0.5 * (iunit + plow / m) * g;
    }
    fft_all(amp, false);
    return amp;
}

}  // namespace stq
