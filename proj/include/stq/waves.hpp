#pragma once

#include "stq/gamma.hpp"
#include "stq/hamiltonian.hpp"

namespace stq {

// One on-shell 1+1D mode, e^{-i(E t - p1 x^1)} with E = sqrt(p1^2 + m^2).
struct OnShellMode {
    double energy = 0.0;
    double p1 = 0.0;   // upper-index spatial momentum
    int spin = 0;      // Dirac spinor label, ignored for scalars
    cplx coeff{1.0, 0.0};
};

// Integer mode family commensurate with a T = L = pi box on both axes:
// (E, p1) = 2 * {(23,22), (9,6), (7,2)}, m^2 = E^2 - p1^2 = 180 for each.
// Every mode is exactly representable on power-of-two lattices over either
// axis, which makes the dual-axis propagation oracles exact.
struct CommensurateFamily {
    double mass;
    double box;   // both extents
    std::vector<OnShellMode> modes;
};
CommensurateFamily commensurate_modes_1p1(int count = 3);

// Closed-form Dirac plane-wave superposition on any lattice carrying
// coordinates from {0,1}; coordinates absent from the lattice sit at 0.
AxisField dirac_wave_sum(const GammaBasis& gb, double m, const std::vector<OnShellMode>& modes,
                         const LatticeSpec& lat);

// Same superposition for the scalar field (components = 1).
AxisField kg_wave_sum(double m, const std::vector<OnShellMode>& modes, const LatticeSpec& lat);

// Two-component closed form of the same scalar superposition (the axis-1
// first-order split applied mode by mode).
AxisField kg_two_component_wave_sum(double m, const std::vector<OnShellMode>& modes, const LatticeSpec& lat);

// Gaussian spinor packet on a spatial lattice (t-evolution initial data):
// envelope exp(-(x-x0)^2 / 4 sigma^2) e^{i kbar x} times the positive-energy
// spinor at the carrier momentum.
AxisField dirac_packet(const GammaBasis& gb, const LatticeSpec& xlat, double m, double center,
                       double sigma, double kbar, int spin = 0);

// Right-moving packet on a t-lattice (x^1-evolution initial data): every
// populated frequency bin carries the on-shell spinor of the p1 > 0 branch.
// Bins below the mass shell stay empty.
AxisField dirac_right_mover(const GammaBasis& gb, const LatticeSpec& tlat, double m, double e_center,
                            double e_sigma, int spin = 0);

// Scalar counterpart in the two-component representation.
AxisField kg_right_mover(const LatticeSpec& tlat, double m, double e_center, double e_sigma);

}  // namespace stq
