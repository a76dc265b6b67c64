#include "stq/gamma.hpp"

namespace stq {

namespace {

Eigen::Matrix2cd pauli(int j)
{
    Eigen::Matrix2cd s;
    switch (j) {
        case 0: s << 0, 1, 1, 0; break;
        case 1: s << 0, -iunit, iunit, 0; break;
        default: s << 1, 0, 0, -1; break;
    }
    return s;
}

}  // namespace

GammaBasis build_gamma_basis()
{
    GammaBasis gb;
    const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();

    gb.gamma[0].setZero();
    gb.gamma[0].topLeftCorner<2, 2>() = id2;
    gb.gamma[0].bottomRightCorner<2, 2>() = -id2;

    for (int j = 0; j < 3; ++j) {
        Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
        g.topRightCorner<2, 2>() = pauli(j);
        g.bottomLeftCorner<2, 2>() = -pauli(j);
        gb.gamma[static_cast<std::size_t>(j + 1)] = g;
    }

    gb.beta = gb.gamma[0];
    for (int j = 0; j < 3; ++j)
        gb.alpha[static_cast<std::size_t>(j)] = gb.gamma[0] * gb.gamma[static_cast<std::size_t>(j + 1)];

    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const Eigen::Matrix4cd& a = gb.gamma[static_cast<std::size_t>(mu)];
            const Eigen::Matrix4cd& b = gb.gamma[static_cast<std::size_t>(nu)];
            gb.spin[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
                0.25 * iunit * (a * b - b * a);
        }

    return gb;
}

TauBasis build_tau_basis()
{
    TauBasis tb;
    tb.tau2 << 0, -iunit, iunit, 0;
    tb.tau3 << 1, 0, 0, -1;
    return tb;
}

Eigen::Vector4cd dirac_u(const GammaBasis&, const std::array<double, 3>& pbar, double m, int s)
{
    const double e = dirac_energy(pbar, m);
    Eigen::Vector2cd chi = Eigen::Vector2cd::Zero();
    chi(s) = 1.0;
    Eigen::Matrix2cd sp = Eigen::Matrix2cd::Zero();
    for (int j = 0; j < 3; ++j) sp += pbar[static_cast<std::size_t>(j)] * pauli(j);

    Eigen::Vector4cd u;
    u.head<2>() = chi;
    u.tail<2>() = sp * chi / (e + m);
    return std::sqrt(e + m) * u;
}

Eigen::Vector4cd dirac_v(const GammaBasis&, const std::array<double, 3>& pbar, double m, int s)
{
    const double e = dirac_energy(pbar, m);
    Eigen::Vector2cd chi = Eigen::Vector2cd::Zero();
    chi(s) = 1.0;
    Eigen::Matrix2cd sp = Eigen::Matrix2cd::Zero();
    for (int j = 0; j < 3; ++j) sp += pbar[static_cast<std::size_t>(j)] * pauli(j);

    Eigen::Vector4cd v;
    v.head<2>() = sp * chi / (e + m);
    v.tail<2>() = chi;
    return std::sqrt(e + m) * v;
}

}  // namespace stq
