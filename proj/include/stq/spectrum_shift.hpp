#pragma once

#include "stq/lattice.hpp"
#include "stq/report.hpp"

namespace stq {

// Multiplying an i d_t eigenvector e^{-iEt} by e^{i alpha t} shifts its
// frequency content from the bin at E to the bin at E - alpha: relabeling
// the zero-energy reference surface, not a spectrum contradiction.  For
// commensurate (E, alpha) the shift is an exact bin move and off-bin power
// is asserted; otherwise leakage is reported without a gate.
ResidualReport spectrum_shift_demo(const AxisField& psi_e, double alpha);

// i d_t eigenvector with eigenvalue e on a 1D t-lattice.
AxisField time_eigenvector(const LatticeSpec& tlat, double e);

}  // namespace stq
