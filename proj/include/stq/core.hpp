#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace stq {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx iunit{0.0, 1.0};

// Metric diag(+1,-1,-1,-1), natural units.  Index raising/lowering is a sign
// flip on the spatial components: p_0 = p^0, p_j = -p^j.
inline constexpr std::array<double, 4> metric_diag{1.0, -1.0, -1.0, -1.0};

inline constexpr double metric(int mu) { return metric_diag[static_cast<std::size_t>(mu)]; }

// Order-fixed pairwise reduction; keeps large mode sums deterministic and
// roundoff-flat regardless of how callers batch their terms.
template <typename T>
T pairwise_sum(std::span<const T> v)
{
    if (v.size() <= 8) {
        T acc{};
        for (const T& x : v) acc += x;
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v)
{
    return pairwise_sum(std::span<const T>(v.data(), v.size()));
}

}  // namespace stq
