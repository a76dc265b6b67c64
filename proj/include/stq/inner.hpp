#pragma once

#include <Eigen/Dense>
#include <optional>

#include "stq/lattice.hpp"

namespace stq {

// Hypersurface scalar product  <psi|phi> = integral over the hypersurface
// orthogonal to surface_coord of psi^+ M phi, conjugate-linear in psi.
// If the fields carry a lattice axis for surface_coord it is held fixed at
// `slice`; otherwise the fields are already hypersurface data and every
// axis is integrated.  M = identity when absent.
cplx indefinite_inner(const std::optional<Eigen::MatrixXcd>& metric, const AxisField& psi,
                      const AxisField& phi, int surface_coord, int slice = 0);

// Plain L2 product over all lattice axes.
cplx l2_inner(const AxisField& psi, const AxisField& phi);

}  // namespace stq
