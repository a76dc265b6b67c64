#pragma once

#include <map>

#include "stq/fock.hpp"
#include "stq/modes.hpp"
#include "stq/report.hpp"

namespace stq {
namespace fock {

// Field operators are kept symbolic as ladder-term sums; elementary pair
// products are cached so hypersurface integrals cost coefficient arithmetic
// plus one sparse assembly at the end.
struct LadderTerm {
    int op = 0;   // 2 * slot + (0 = lower, 1 = raise)
    cplx coeff{0.0, 0.0};
};

struct FieldOperator {
    const FockRep* rep = nullptr;
    std::vector<LadderTerm> terms;

    SpMat matrix() const;
};

class PairCache {
  public:
    explicit PairCache(const FockRep& rep) : rep_(&rep) {}
    const SpMat& product(int op_a, int op_b);
    const SpMat& elementary(int op) const;

  private:
    const FockRep* rep_;
    std::map<std::pair<int, int>, SpMat> cache_;
};

SpMat operator_product(const FieldOperator& a, const FieldOperator& b, PairCache& cache);
SpMat operator_commutator(const FieldOperator& a, const FieldOperator& b, PairCache& cache);
SpMat operator_anticommutator(const FieldOperator& a, const FieldOperator& b, PairCache& cache);

// Accumulates weight * A(x) B(x) over integration sites at coefficient level.
class ProductAccumulator {
  public:
    void add(const FieldOperator& a, const FieldOperator& b, cplx weight);
    SpMat materialize(PairCache& cache) const;

  private:
    std::map<std::pair<int, int>, cplx> coeff_;
};

// ---- complex scalar field quantized along modes.axis ----
// slot layout: particle ladder a_k -> slot 2k, antiparticle b_k -> slot 2k+1

// u_k(x) = e^{-i p.x} / sqrt(2 w V)
cplx kg_mode_function(const ModeLattice& modes, std::size_t k, const std::array<double, 4>& x);

FieldOperator kg_phi(const ModeLattice& modes, const FockRep& rep, const std::array<double, 4>& x);
FieldOperator kg_phi_dag(const ModeLattice& modes, const FockRep& rep, const std::array<double, 4>& x);
// analytic d_nu of the above
FieldOperator kg_dphi(const ModeLattice& modes, const FockRep& rep, const std::array<double, 4>& x, int nu);
FieldOperator kg_dphi_dag(const ModeLattice& modes, const FockRep& rep, const std::array<double, 4>& x, int nu);
// canonical conjugate pi_nu = d_nu phi^+
inline FieldOperator kg_pi(const ModeLattice& modes, const FockRep& rep, const std::array<double, 4>& x, int nu)
{
    return kg_dphi_dag(modes, rep, x, nu);
}

// H_nu as the mode sum  sum_k p_nu(k) (a^+a + b^+b + 1);
// for nu = modes.axis this is the positive frequency-weighted form.
SpMat kg_h_modesum(const ModeLattice& modes, const FockRep& rep, int nu);

// H_mu from the hypersurface integral of the energy-momentum density
// pi_mu d_mu phi + pi_mu^+ d_mu phi^+ - g_mumu Gamma over the exact
// integration lattice, evaluated at x^mu = 0.
SpMat kg_h_integral(const ModeLattice& modes, const FockRep& rep);

// positivity of the mode-sum Hamiltonian plus agreement of the two
// constructions up to a recorded multiple of the identity
ResidualReport kg_hamiltonian_report(const ModeLattice& modes, const FockRep& rep);

// equal-surface commutators against the lattice delta
ResidualReport kg_equal_surface_commutators(const ModeLattice& modes, const FockRep& rep,
                                            const std::array<double, 4>& x, const std::array<double, 4>& y);

// d_nu phi = i [H_nu, phi] and d_nu pi_nu = i [H_nu, pi_nu] as matrices
ResidualReport kg_heisenberg_residual(const ModeLattice& modes, const FockRep& rep,
                                      const std::array<double, 4>& x, int nu);

}  // namespace fock
}  // namespace stq
