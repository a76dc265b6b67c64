#include "stq/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace stq {

std::size_t LatticeSpec::sites() const
{
    std::size_t n = 1;
    for (const Axis& a : axes) n *= static_cast<std::size_t>(a.points);
    return n;
}

int LatticeSpec::axis_of(int coord) const
{
    for (int a = 0; a < rank(); ++a)
        if (axes[static_cast<std::size_t>(a)].coord == coord) return a;
    return -1;
}

std::size_t LatticeSpec::stride(int a) const
{
    std::size_t s = 1;
    for (int b = rank() - 1; b > a; --b) s *= static_cast<std::size_t>(axes[static_cast<std::size_t>(b)].points);
    return s;
}

double LatticeSpec::volume() const
{
    double v = 1.0;
    for (const Axis& a : axes) v *= a.extent;
    return v;
}

std::vector<int> LatticeSpec::unflatten(std::size_t site) const
{
    std::vector<int> idx(static_cast<std::size_t>(rank()));
    for (int a = rank() - 1; a >= 0; --a) {
        const int n = axes[static_cast<std::size_t>(a)].points;
        idx[static_cast<std::size_t>(a)] = static_cast<int>(site % static_cast<std::size_t>(n));
        site /= static_cast<std::size_t>(n);
    }
    return idx;
}

std::size_t LatticeSpec::flatten(const std::vector<int>& idx) const
{
    std::size_t site = 0;
    for (int a = 0; a < rank(); ++a)
        site = site * static_cast<std::size_t>(axes[static_cast<std::size_t>(a)].points) +
               static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
    return site;
}

double LatticeSpec::dft_wavenumber(int a, int q) const
{
    const Axis& ax = axes[static_cast<std::size_t>(a)];
    const int signed_q = (2 * q < ax.points) ? q : q - ax.points;
    return 2.0 * pi * signed_q / ax.extent;
}

LatticeSpec lattice_1d(int coord, int points, double extent)
{
    return LatticeSpec{{Axis{coord, points, extent}}};
}

LatticeSpec lattice_2d(int coord0, int n0, double l0, int coord1, int n1, double l1)
{
    return LatticeSpec{{Axis{coord0, n0, l0}, Axis{coord1, n1, l1}}};
}

AxisField AxisField::zeros(const LatticeSpec& lat, int comps)
{
    AxisField f;
    f.lattice = lat;
    f.components = comps;
    f.values.assign(lat.sites() * static_cast<std::size_t>(comps), cplx{0.0, 0.0});
    return f;
}

bool AxisField::finite() const
{
    return std::all_of(values.begin(), values.end(), [](const cplx& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

bool AxisField::same_shape(const AxisField& other) const
{
    if (components != other.components || lattice.rank() != other.lattice.rank()) return false;
    for (int a = 0; a < lattice.rank(); ++a) {
        const Axis& x = lattice.axes[static_cast<std::size_t>(a)];
        const Axis& y = other.lattice.axes[static_cast<std::size_t>(a)];
        if (x.coord != y.coord || x.points != y.points || x.extent != y.extent) return false;
    }
    return true;
}

AxisField& AxisField::operator+=(const AxisField& other)
{
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
    return *this;
}

AxisField& AxisField::operator-=(const AxisField& other)
{
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= other.values[i];
    return *this;
}

AxisField& AxisField::operator*=(cplx s)
{
    for (cplx& z : values) z *= s;
    return *this;
}

AxisField operator+(AxisField a, const AxisField& b) { a += b; return a; }
AxisField operator-(AxisField a, const AxisField& b) { a -= b; return a; }
AxisField operator*(cplx s, AxisField a) { a *= s; return a; }

double max_abs(const AxisField& f)
{
    double m = 0.0;
    for (const cplx& z : f.values) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const AxisField& a, const AxisField& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

AxisField slice_field(const AxisField& f, int a, int slice)
{
    LatticeSpec sub = f.lattice;
    sub.axes.erase(sub.axes.begin() + a);
    AxisField out = AxisField::zeros(sub, f.components);

    const std::size_t nsub = sub.sites();
    for (std::size_t s = 0; s < nsub; ++s) {
        std::vector<int> idx = sub.unflatten(s);
        idx.insert(idx.begin() + a, slice);
        const std::size_t src = f.lattice.flatten(idx);
        for (int c = 0; c < f.components; ++c) out.at(s, c) = f.at(src, c);
    }
    return out;
}

}  // namespace stq
