#pragma once

#include <functional>
#include <optional>

#include "stq/evolve.hpp"
#include "stq/inner.hpp"
#include "stq/report.hpp"

namespace stq {

// Linear operator F on hypersurface fields.  `apply` receives the value of
// the evolution coordinate so explicitly coordinate-dependent observables
// (and equation-of-motion substitutions) can use it; `dcoord` is dF/dx^mu
// and is null when the flag is false.
struct ObservableSpec {
    std::string name;
    bool explicit_dep = false;
    std::function<AxisField(const AxisField&, double)> apply;
    std::function<AxisField(const AxisField&, double)> dcoord;
};

// multiplication by the coordinate sampled on the lattice axis for `coord`
ObservableSpec coordinate_observable(int coord);
// i d_coord, eigenvalue p_coord on e^{-i p x} modes
ObservableSpec wavenumber_observable(int coord);
// constant component-space matrix (spin matrices and friends)
ObservableSpec matrix_observable(const std::string& name, const Eigen::MatrixXcd& m);

// Expectation-value machinery under a component-space metric M:
//   <F> = (psi, M F psi) / (psi, M psi).
// The metric that makes i d_mu psi = H_mu psi self-adjoint (and the norm
// conserved) depends on family and axis.
Eigen::MatrixXcd evolution_metric(const GeneralizedHamiltonian& ham);

cplx slice_inner(const Eigen::MatrixXcd& metric, const AxisField& a, const AxisField& b);
cplx expectation(const Eigen::MatrixXcd& metric, const AxisField& psi, const ObservableSpec& obs, double s);

// Residual of  d<F>/dx^mu = <dF/dx^mu> + i <[H_mu, F]>  along a trajectory;
// left side by a 4th-order central stencil across slices, right side exact
// per slice.  Returns the max residual over interior slices.
ResidualReport ehrenfest_residual(const EvolutionRun& run, const ObservableSpec& obs);

// Least-squares slope of log(residual) against log(step) for a step-halving
// sequence starting from run.step with run.steps doubling accordingly.
double ehrenfest_convergence_slope(const EvolutionRun& run, const ObservableSpec& obs, int refinements);

struct UncertaintyResult {
    bool defined = false;        // false when <dF/dx^mu> is numerically stationary
    double delta_h = 0.0;
    double delta_f = 0.0;
    double rate = 0.0;           // |<dF/dx^mu>|
    double delta_x = 0.0;        // delta_f / rate
    double product = 0.0;        // delta_x * delta_h
};

UncertaintyResult uncertainty_product(const EvolutionRun& run, const ObservableSpec& obs, int slice = -1);

}  // namespace stq
