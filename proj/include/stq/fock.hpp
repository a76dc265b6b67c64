#pragma once

#include <Eigen/Sparse>

#include "stq/core.hpp"

namespace stq {
namespace fock {

using SpMat = Eigen::SparseMatrix<cplx>;

enum class Statistics { boson, fermion };

// Truncated occupation-number space over a fixed list of oscillator /
// fermionic slots.  Bosonic slots hold 0..nmax quanta; fermionic slots are
// Jordan-Wigner ordered by slot index, so anticommutation rules hold exactly
// on the whole space.  Bosonic commutators hold below the occupancy cutoff.
class FockRep {
  public:
    FockRep(Statistics stats, int slots, int nmax);

    Statistics statistics() const { return stats_; }
    int slots() const { return slots_; }
    int nmax() const { return nmax_; }
    std::size_t dim() const { return dim_; }

    const SpMat& lower(int slot) const { return lower_[static_cast<std::size_t>(slot)]; }
    const SpMat& raise(int slot) const { return raise_[static_cast<std::size_t>(slot)]; }
    SpMat number(int slot) const { return raise(slot) * lower(slot); }
    SpMat id() const;

    int occupancy(std::size_t state, int slot) const;

    // Diagonal projector onto states whose occupancies all sit at least
    // `margin` below the cutoff; identities touched by truncation artifacts
    // are asserted behind it.  Fermions have no truncation, so margin 0.
    SpMat protected_projector(int margin) const;

  private:
    Statistics stats_;
    int slots_;
    int nmax_;
    std::size_t dim_;
    std::vector<SpMat> lower_, raise_;
};

double max_abs(const SpMat& m);
// max |entry| of  P (a - b) P
double projected_max_abs_diff(const SpMat& a, const SpMat& b, const SpMat& proj);

}  // namespace fock
}  // namespace stq
