#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "stq/core.hpp"

namespace stq {

// One periodic lattice axis.  coord labels which spacetime coordinate
// (0 = t .. 3 = x^3) the axis samples; x_j = j * spacing, j in [0, points).
struct Axis {
    int coord = 0;
    int points = 0;
    double extent = 0.0;

    double spacing() const { return extent / points; }
    bool power_of_two() const { return points > 0 && (points & (points - 1)) == 0; }
};

struct LatticeSpec {
    std::vector<Axis> axes;   // row-major storage, last axis fastest

    std::size_t sites() const;
    int rank() const { return static_cast<int>(axes.size()); }
    // position of the axis sampling a given coordinate, -1 if absent
    int axis_of(int coord) const;
    bool has_coord(int coord) const { return axis_of(coord) >= 0; }
    // storage stride (in sites) of axis a
    std::size_t stride(int a) const;
    double volume() const;

    std::vector<int> unflatten(std::size_t site) const;
    std::size_t flatten(const std::vector<int>& idx) const;
    double coordinate(int a, int j) const { return axes[static_cast<std::size_t>(a)].spacing() * j; }

    // Signed DFT frequency of bin q on axis a, in the e^{+i kappa x} sense.
    double dft_wavenumber(int a, int q) const;
    // Wave number as it appears in a e^{-i p x} mode: p = -kappa.
    double lower_wavenumber(int a, int q) const { return -dft_wavenumber(a, q); }
};

LatticeSpec lattice_1d(int coord, int points, double extent);
LatticeSpec lattice_2d(int coord0, int n0, double l0, int coord1, int n1, double l1);

// Multi-component complex field sampled on a lattice; values[site * C + c].
struct AxisField {
    LatticeSpec lattice;
    int components = 1;
    std::vector<cplx> values;

    static AxisField zeros(const LatticeSpec& lat, int comps);

    cplx& at(std::size_t site, int c) { return values[site * static_cast<std::size_t>(components) + static_cast<std::size_t>(c)]; }
    const cplx& at(std::size_t site, int c) const { return values[site * static_cast<std::size_t>(components) + static_cast<std::size_t>(c)]; }

    bool finite() const;
    bool same_shape(const AxisField& other) const;

    AxisField& operator+=(const AxisField& other);
    AxisField& operator-=(const AxisField& other);
    AxisField& operator*=(cplx s);
};

AxisField operator+(AxisField a, const AxisField& b);
AxisField operator-(AxisField a, const AxisField& b);
AxisField operator*(cplx s, AxisField a);

double max_abs(const AxisField& f);
double max_abs_diff(const AxisField& a, const AxisField& b);

// Extract the hypersurface field at index `slice` along lattice axis a.
AxisField slice_field(const AxisField& f, int a, int slice);

}  // namespace stq
