#pragma once

#include "stq/gamma.hpp"
#include "stq/hamiltonian.hpp"
#include "stq/kgfield.hpp"

namespace stq {
namespace fock {

// Spinor field quantized on the ordinary t = const hypersurface over a
// finite spatial momentum lattice.  Slot layout per momentum mode:
// (particle s=0, particle s=1, antiparticle s=0, antiparticle s=1), modes
// in lexicographic index order; four slots per mode, occupancy <= 1.
struct DiracModeSet {
    struct Entry {
        std::array<int, 3> index{};
        std::array<double, 3> pbar{};   // upper-index spatial momentum
        double energy = 0.0;
    };

    double mass = 0.0;
    std::array<double, 3> box{};   // spatial extents
    std::vector<Entry> entries;

    double volume() const { return box[0] * box[1] * box[2]; }
    std::size_t count() const { return entries.size(); }
    int slots() const { return 4 * static_cast<int>(entries.size()); }

    LatticeSpec spatial_lattice() const;
    // (1/V) sum_p e^{+i pbar . dbar}
    cplx lattice_delta(const std::array<double, 3>& dbar) const;

    // lower-index wave numbers of the e^{-i p x} particle mode
    std::array<double, 4> p_lower(std::size_t k) const;
};

DiracModeSet make_dirac_modes(double mass, const std::array<double, 3>& box,
                              const std::vector<std::array<int, 3>>& indices);

FockRep make_dirac_rep(const DiracModeSet& modes);

// psi_alpha(x) over the fermionic rep; x is a full spacetime point.
FieldOperator dirac_psi(const DiracModeSet& modes, const FockRep& rep, const GammaBasis& gb,
                        const std::array<double, 4>& x, int alpha);
FieldOperator dirac_psi_dag(const DiracModeSet& modes, const FockRep& rep, const GammaBasis& gb,
                            const std::array<double, 4>& x, int alpha);
FieldOperator dirac_dpsi(const DiracModeSet& modes, const FockRep& rep, const GammaBasis& gb,
                         const std::array<double, 4>& x, int alpha, int nu);

// canonical anticommutation checks at equal time
ResidualReport dirac_car_report(const DiracModeSet& modes, const FockRep& rep, const GammaBasis& gb,
                                const std::array<double, 4>& x, const std::array<double, 4>& y);

// normal-ordered mode form  sum_{p,s} p_mu (c^+c + d^+d)
SpMat dirac_h_modesum(const DiracModeSet& modes, const FockRep& rep, int mu);
// spatial integral of psi^+ H_mu psi with the generalized single-particle block
SpMat dirac_h_integral(const DiracModeSet& modes, const FockRep& rep, const GammaBasis& gb, int mu);
// spatial integral of psi^+ (i d_mu) psi
SpMat dirac_p_integral(const DiracModeSet& modes, const FockRep& rep, const GammaBasis& gb, int mu);

// the two H_mu constructions, their recorded identity offset, the momentum
// identity, and single-particle eigenvalues
ResidualReport dirac_hamiltonian_report(const DiracModeSet& modes, const FockRep& rep,
                                        const GammaBasis& gb, int mu);

// d_mu psi = i [H_mu, psi] entrywise
ResidualReport dirac_heisenberg_residual(const DiracModeSet& modes, const FockRep& rep,
                                         const GammaBasis& gb, const std::array<double, 4>& x, int mu);

// operator-level commutator with the momentum integral agrees with the
// Hamiltonian one; substituting the c-number eigenvalue instead kills the
// commutator while d_mu psi stays nonzero
ResidualReport cnumber_substitution_contrast(const DiracModeSet& modes, const FockRep& rep,
                                             const GammaBasis& gb, const std::array<double, 4>& x, int mu);

}  // namespace fock
}  // namespace stq
