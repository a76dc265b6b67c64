#pragma once

#include "stq/evolve.hpp"
#include "stq/report.hpp"

namespace stq {
namespace verify {

// Free-spinor angular-momentum suite: commutator identities of the
// t-generator with coordinates, derivatives and alpha matrices on a
// band-limited packet, plus conservation of all six <J^{mu nu}> along the
// evolution, with J^{mu nu} = i x^mu d^nu - i x^nu d^mu + S^{mu nu}.
struct AngularMomentumOptions {
    int points = 64;        // per spatial axis, power of two for the spectral ops
    double extent = 30.0;
    double mass = 2.5;   // heavy: dispersion branch points sit at |Im k| = m,
                         // so evolved tails stay below the wrap at e^{-m L/2}
    std::array<double, 3> carrier{0.5, 0.3, 0.2};
    double sigma_k = 0.40;  // momentum-space packet width
    int steps = 1000;
    double step = 0.004;
};
ResidualReport angular_momentum_suite(const AngularMomentumOptions& opt);

// Point particles with common charge; positions/momenta at a shared t.
struct Particle {
    std::array<double, 4> x{};
    std::array<double, 4> p{};   // p^mu, on-shell with p0 > 0
};
struct ParticleSystem {
    double charge = 1.0;
    double rest_mass = 1.0;
    std::vector<Particle> particles;
};

struct MomentResult {
    Eigen::Matrix4d moment;             // M^{mu nu}
    Eigen::Matrix4d angular_momentum;   // L^{mu nu}
    ResidualReport report;
};

// The moment tensor of the point-particle current against (e/2m) L^{mu nu};
// exact for a single particle with m the relativistic mass.  For several
// particles the residual under each mass candidate is recorded, not gated.
MomentResult em_moment_identity(const ParticleSystem& sys);

// Orbit average of the symmetrized tensor sum x^mu p^nu + x^nu p^mu over a
// closed kinematic orbit; the 4D-integral identity behind the moment
// expansion collapses to this on worldline averages.
ResidualReport closed_orbit_symmetry(double radius, double momentum, double rest_mass, int samples);

// Hypersurface Noether constancy: G_l(slice) as the integral of T_{ll}
// over the complementary axis of a 2D scalar solution, checked slice to
// slice along both axes; a deliberately broken solution must trip it.
ResidualReport hypersurface_conservation(const AxisField& phi, double mass, int l, double gate);

}  // namespace verify
}  // namespace stq
