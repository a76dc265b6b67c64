#pragma once

#include <Eigen/Dense>

#include "stq/gamma.hpp"
#include "stq/lattice.hpp"

namespace stq {

enum class Family { kg_two_component, dirac };

// Generator H_mu of evolution along the coordinate axis mu via
// i d_mu psi = H_mu psi.  Two action modes:
//  * momentum_block: given the wave numbers conjugate to the hypersurface
//    coordinates, H_mu is a small constant matrix per mode.
//  * apply: position-lattice action through spectral derivatives; coordinates
//    not sampled by the lattice fall back to the fixed transverse wave
//    numbers below.
struct GeneralizedHamiltonian {
    Family family = Family::dirac;
    int axis = 0;
    double mass = 1.0;
    std::array<double, 4> transverse{};   // lower-index wave numbers p_nu, used for nu != axis off-lattice

    int components() const { return family == Family::dirac ? 4 : 2; }

    // p_lower[nu] is the eigenvalue of i d_nu on the mode; the entry at nu = axis is ignored.
    Eigen::MatrixXcd momentum_block(const std::array<double, 4>& p_lower) const;

    AxisField apply(const AxisField& psi) const;

    // True when the block at these wave numbers has a real spectrum
    // (propagating mode); spatial axes admit evanescent modes otherwise.
    bool propagating(const std::array<double, 4>& p_lower) const;
};

// Two-component form of the second-order scalar wave equation along axis el.
// phi/dphi are the scalar field and its el-derivative on the same lattice.
AxisField kg_to_two_component(const AxisField& phi, const AxisField& dphi, double m, int el);
std::pair<AxisField, AxisField> two_component_to_kg(const AxisField& psi, double m);

// max-entry residual of  M B - B^+ M  over a set of momentum blocks; zero
// means B is pseudo-Hermitian with respect to M.
double pseudo_hermiticity_residual(const Eigen::MatrixXcd& metric, const Eigen::MatrixXcd& block);

}  // namespace stq
