#pragma once

#include "stq/hamiltonian.hpp"

namespace stq {

enum class EvolveMethod { spectral_exponential, rk4 };
enum class EvanescentPolicy { filter, keep };

struct EvolutionRun {
    GeneralizedHamiltonian ham;
    AxisField initial;   // hypersurface data, lattice must not carry ham.axis
    int steps = 0;
    double step = 0.0;
    EvolveMethod method = EvolveMethod::spectral_exponential;
    // Spatial evolution axes have evanescent momentum blocks (imaginary
    // spectrum); by default those bins are projected out of the data.
    EvanescentPolicy evanescent = EvanescentPolicy::filter;
};

struct Trajectory {
    int axis = 0;
    double step = 0.0;
    std::vector<AxisField> slices;   // steps + 1 entries, slice 0 = initial
    int expm_fallbacks = 0;          // blocks evolved by expm instead of eigendecomposition

    // Assemble the full field with the evolution coordinate attached as a
    // (leading) lattice axis; requires steps * step to close one extent.
    AxisField combined() const;
};

Trajectory evolve(const EvolutionRun& run);

// Eigen-decomposition of a momentum block; used by block-level tests.
struct BlockEigen {
    Eigen::VectorXcd values;
    Eigen::MatrixXcd vectors;
};
BlockEigen block_eigensystem(const GeneralizedHamiltonian& ham, const std::array<double, 4>& p_lower);

}  // namespace stq
