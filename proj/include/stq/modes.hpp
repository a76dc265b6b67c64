#pragma once

#include <array>
#include <vector>

#include "stq/core.hpp"
#include "stq/lattice.hpp"

namespace stq {
namespace fock {

// One admitted plane-wave mode of a quantization along axis mu: the three
// wave numbers conjugate to the hypersurface coordinates plus the on-shell
// frequency w_mu > 0.  p_lower collects the i d_nu eigenvalues of the mode
// function e^{-i p.x}, with p_mu = +w.
struct Mode {
    std::array<int, 3> index{};        // integer labels on the hypersurface axes
    std::array<double, 4> p_lower{};
    double w = 0.0;
};

// Finite mode set for quantizing a field of mass m along axis mu, with the
// hypersurface box fixing the wave-number quantum per axis.
struct ModeLattice {
    int axis = 0;
    double mass = 0.0;
    std::array<double, 3> box{};        // extents of the hypersurface axes, ascending coordinate order
    std::vector<Mode> modes;
    double w_min = 0.0;

    std::array<int, 3> surface_coords() const;
    double volume() const { return box[0] * box[1] * box[2]; }
    std::size_t count() const { return modes.size(); }

    // Smallest exact integration lattice over the hypersurface: per axis,
    // enough points that all occurring index differences and sums are
    // distinguished, so discrete mode orthogonality is exact.
    LatticeSpec surface_lattice() const;

    // sum_k e^{+i k . d} / V over the admitted modes (hypersurface part only)
    cplx lattice_delta(const std::array<double, 4>& dx) const;
};

// Builds the mode set from integer index triples; every index triple must
// sit on the propagating shell (real w > 0), otherwise this throws.
ModeLattice make_mode_lattice(int axis, double mass, const std::array<double, 3>& box,
                              const std::vector<std::array<int, 3>>& indices);

}  // namespace fock
}  // namespace stq
