#include "stq/modes.hpp"

#include <cmath>
#include <stdexcept>

namespace stq {
namespace fock {

std::array<int, 3> ModeLattice::surface_coords() const
{
    std::array<int, 3> c{};
    int j = 0;
    for (int nu = 0; nu < 4; ++nu)
        if (nu != axis) c[static_cast<std::size_t>(j++)] = nu;
    return c;
}

LatticeSpec ModeLattice::surface_lattice() const
{
    const std::array<int, 3> coords = surface_coords();
    LatticeSpec lat;
    for (int a = 0; a < 3; ++a) {
        int maxidx = 0;
        for (const Mode& m : modes)
            maxidx = std::max(maxidx, std::abs(m.index[static_cast<std::size_t>(a)]));
        // index sums reach 2*maxidx; points > 4*maxidx keeps all pairwise
        // sums and differences off the aliasing wheel
        const int points = std::max(4, 4 * maxidx + 1);
        lat.axes.push_back(Axis{coords[static_cast<std::size_t>(a)], points, box[static_cast<std::size_t>(a)]});
    }
    return lat;
}

cplx ModeLattice::lattice_delta(const std::array<double, 4>& dx) const
{
    const std::array<int, 3> coords = surface_coords();
    std::vector<cplx> terms;
    terms.reserve(modes.size());
    for (const Mode& m : modes) {
        double phase = 0.0;
        for (int a = 0; a < 3; ++a) {
            const int nu = coords[static_cast<std::size_t>(a)];
            phase += m.p_lower[static_cast<std::size_t>(nu)] * dx[static_cast<std::size_t>(nu)];
        }
        terms.push_back(std::exp(iunit * phase));
    }
    return pairwise_sum(terms) / volume();
}

ModeLattice make_mode_lattice(int axis, double mass, const std::array<double, 3>& box,
                              const std::vector<std::array<int, 3>>& indices)
{
    ModeLattice ml;
    ml.axis = axis;
    ml.mass = mass;
    ml.box = box;
    ml.w_min = std::numeric_limits<double>::infinity();

    std::array<int, 3> coords{};
    int j = 0;
    for (int nu = 0; nu < 4; ++nu)
        if (nu != axis) coords[static_cast<std::size_t>(j++)] = nu;

    for (const std::array<int, 3>& idx : indices) {
        Mode m;
        m.index = idx;
        double s = 0.0;
        for (int a = 0; a < 3; ++a) {
            const int nu = coords[static_cast<std::size_t>(a)];
            const double k = 2.0 * pi * idx[static_cast<std::size_t>(a)] / box[static_cast<std::size_t>(a)];
            m.p_lower[static_cast<std::size_t>(nu)] = k;
            s += metric(nu) * k * k;
        }
        // on-shell: g^{mu mu} w^2 + s = m^2
        const double w2 = (mass * mass - s) / metric(axis);
        if (w2 <= 0.0)
            throw std::invalid_argument("make_mode_lattice: index triple off the propagating shell (w^2 <= 0)");
        m.w = std::sqrt(w2);
        m.p_lower[static_cast<std::size_t>(axis)] = m.w;
        ml.w_min = std::min(ml.w_min, m.w);
        ml.modes.push_back(m);
    }
    return ml;
}

}  // namespace fock
}  // namespace stq
