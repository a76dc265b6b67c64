#pragma once

#include <Eigen/Dense>

#include "stq/core.hpp"

namespace stq {

// Dirac matrices in the standard Dirac-Pauli representation together with
// the derived alpha/beta matrices and the 4D spin tensor
// S^{mu nu} = (i/4)[gamma^mu, gamma^nu].
struct GammaBasis {
    std::array<Eigen::Matrix4cd, 4> gamma;                 // gamma^mu (upper index)
    std::array<Eigen::Matrix4cd, 3> alpha;                 // alpha_j = gamma^0 gamma^j
    Eigen::Matrix4cd beta;                                 // gamma^0
    std::array<std::array<Eigen::Matrix4cd, 4>, 4> spin;   // S^{mu nu}

    // gamma_mu = g_{mu mu} gamma^mu
    Eigen::Matrix4cd gamma_lower(int mu) const { return metric(mu) * gamma[static_cast<std::size_t>(mu)]; }
};

GammaBasis build_gamma_basis();

// The 2x2 matrices of the two-component wave-equation split.
struct TauBasis {
    Eigen::Matrix2cd tau2;   // [[0,-i],[i,0]]
    Eigen::Matrix2cd tau3;   // [[1,0],[0,-1]]
    Eigen::Matrix2cd nilpotent() const { return tau3 + iunit * tau2; }   // squares to zero
};

TauBasis build_tau_basis();

// Plane-wave Dirac spinors, normalized to u^+ u = 2E.  pbar carries the
// upper-index spatial momentum, spin s in {0,1}.  u solves
// (gamma^nu p_nu - m) u = 0 for the e^{-i p.x} mode, v the charge conjugate.
Eigen::Vector4cd dirac_u(const GammaBasis& gb, const std::array<double, 3>& pbar, double m, int s);
Eigen::Vector4cd dirac_v(const GammaBasis& gb, const std::array<double, 3>& pbar, double m, int s);

inline double dirac_energy(const std::array<double, 3>& pbar, double m)
{
    return std::sqrt(pbar[0] * pbar[0] + pbar[1] * pbar[1] + pbar[2] * pbar[2] + m * m);
}

}  // namespace stq
