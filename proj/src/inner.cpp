#include "stq/inner.hpp"

namespace stq {

namespace {

cplx accumulate_product(const std::optional<Eigen::MatrixXcd>& metric, const AxisField& psi,
                        const AxisField& phi, const std::vector<std::size_t>& sites, double measure)
{
    const int c = psi.components;
    std::vector<cplx> terms;
    terms.reserve(sites.size());
    if (metric) {
        const Eigen::MatrixXcd& m = *metric;
        for (std::size_t s : sites) {
            cplx acc{0.0, 0.0};
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < c; ++j)
                    acc += std::conj(psi.at(s, i)) * m(i, j) * phi.at(s, j);
            terms.push_back(acc);
        }
    } else {
        for (std::size_t s : sites) {
            cplx acc{0.0, 0.0};
            for (int i = 0; i < c; ++i) acc += std::conj(psi.at(s, i)) * phi.at(s, i);
            terms.push_back(acc);
        }
    }
    return measure * pairwise_sum(terms);
}

}  // namespace

cplx indefinite_inner(const std::optional<Eigen::MatrixXcd>& metric, const AxisField& psi,
                      const AxisField& phi, int surface_coord, int slice)
{
    if (!psi.same_shape(phi)) throw std::invalid_argument("indefinite_inner: field shapes differ");
    if (metric && (metric->rows() != psi.components || metric->cols() != psi.components))
        throw std::invalid_argument("indefinite_inner: metric dimension does not match components");

    const LatticeSpec& lat = psi.lattice;
    const int fixed = lat.axis_of(surface_coord);

    double measure = 1.0;
    for (int a = 0; a < lat.rank(); ++a)
        if (a != fixed) measure *= lat.axes[static_cast<std::size_t>(a)].spacing();

    std::vector<std::size_t> sites;
    if (fixed < 0) {
        sites.resize(lat.sites());
        for (std::size_t s = 0; s < sites.size(); ++s) sites[s] = s;
    } else {
        LatticeSpec sub = lat;
        sub.axes.erase(sub.axes.begin() + fixed);
        sites.reserve(sub.sites());
        for (std::size_t s = 0; s < sub.sites(); ++s) {
            std::vector<int> idx = sub.unflatten(s);
            idx.insert(idx.begin() + fixed, slice);
            sites.push_back(lat.flatten(idx));
        }
    }
    return accumulate_product(metric, psi, phi, sites, measure);
}

cplx l2_inner(const AxisField& psi, const AxisField& phi)
{
    // integrate every axis: pick a coordinate the lattice does not carry
    int coord = 0;
    while (psi.lattice.has_coord(coord)) ++coord;
    return indefinite_inner(std::nullopt, psi, phi, coord);
}

}  // namespace stq
