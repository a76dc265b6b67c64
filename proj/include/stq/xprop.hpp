#pragma once

#include "stq/diracfield.hpp"
#include "stq/report.hpp"

namespace stq {
namespace xprop {

// Two spacetime points and a pair of Lorentz indices for a vacuum
// two-point evaluation; ordering happens along `axis`.
struct OrderedPairSample {
    std::array<double, 4> x{};
    std::array<double, 4> y{};
    int mu = 0;
    int nu = 0;
};

enum class EvanescentMode { exclude, include_decaying };

// Half-offset wave-number grid over the three hypersurface axes: per axis
// the k values are (j + 1/2) dk for j in [-n/2, n/2), dk = 2 pi / box.
// The offset keeps every mode off the w = 0 shell, so the sum is a clean
// midpoint rule for the continuum integral.
struct ModeGrid {
    int per_axis = 32;
    double box = 32.0;
    double mgamma = 0.0;   // optional mass regulator for the w -> 0 shell
    EvanescentMode policy = EvanescentMode::include_decaying;
};

struct PropagatorValue {
    cplx value{0.0, 0.0};
    std::string method;
    std::size_t modes_used = 0;
};

// Feynman-gauge vacuum expectation of the x^1-ordered product via the mode
// sum; evanescent columns enter with the decaying branch or are skipped,
// per policy.
PropagatorValue x1_ordered_two_point(const OrderedPairSample& s, const ModeGrid& grid);

// Same construction ordered along t (the standard form, used as oracle).
PropagatorValue t_ordered_two_point(const OrderedPairSample& s, const ModeGrid& grid);

// Massless position-space evaluation of the covariant momentum integral,
//   g_{mu nu} / (4 pi^2 ((x-y)^2 - i eps)),
// valid off the light cone.  eps keeps the branch explicit; the default
// returns the eps -> 0 limit.
PropagatorValue closed_form_feynman(const OrderedPairSample& s, double eps = 0.0);

// Direct numerical quadrature of the defining integral on its absolutely
// convergent rotated contour, for equal-time spacelike separations; used to
// validate the closed form before it serves as an oracle.
PropagatorValue feynman_quadrature_equal_time(double r, double lambda = 0.0);

// Analytic complement of the spectral window: the part of the radial
// representation integral the windowed sums leave out.  Adding it to the
// real part of either ordered sum completes that sum to the full integral,
// up to its own lattice and quadrature error.  Computed from the
// representation integrand only, never from the closed form.
double window_tail_completion(const OrderedPairSample& s, const ModeGrid& grid);

struct EquivalenceOptions {
    int samples = 20;
    std::uint64_t seed = 2026;
    ModeGrid reference{64, 32.0, 0.0, EvanescentMode::include_decaying};
    int refinements = 1;     // per_axis halvings below the reference
    double pair_tolerance = 0.02;
    int pair_allowed_failures = 2;
    double closed_form_tolerance = 0.05;
};

// ordered-sum equivalence across >= 20 spacelike separations, with one grid
// refinement and the closed-form cross-check
ResidualReport propagator_equivalence_suite(const EquivalenceOptions& opt);

// ---- interaction-picture definitions (first order only) ----
// The coupling density e psibar gamma^mu psi A_mu on the tensor product of
// a small fermion Fock space and a four-polarization photon mode space, and
// the first-order term of the ordered evolution expansion.  Definitional
// machinery: no amplitudes are computed from it.
struct InteractionOperators {
    fock::SpMat h_int;          // integrated over the shared spatial cell at fixed x^1
    fock::SpMat s_first_order;  // -i sum_x cell * H_int(x) over the slab
    std::size_t dim = 0;
};

InteractionOperators first_order_interaction(double coupling);

}  // namespace xprop
}  // namespace stq
