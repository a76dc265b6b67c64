#include "stq/spectral.hpp"

#include <fftw3.h>

#include <mutex>

namespace stq {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

}  // namespace

void fft_axis(AxisField& f, int a, bool forward)
{
    const int n = f.lattice.axes[static_cast<std::size_t>(a)].points;
    const std::size_t stride = f.lattice.stride(a) * static_cast<std::size_t>(f.components);
    const std::size_t total = f.values.size();
    const std::size_t block = stride * static_cast<std::size_t>(n);

    std::vector<cplx> line(static_cast<std::size_t>(n));
    fftw_plan plan;
    {
        // one reusable plan per call; FFTW_UNALIGNED keeps execute_dft valid
        // for any line buffer
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(line.data()),
                                reinterpret_cast<fftw_complex*>(line.data()),
                                forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    }

    // Lines along axis a start at every offset whose axis-a index is zero.
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (int j = 0; j < n; ++j) line[static_cast<std::size_t>(j)] = f.values[base + off + static_cast<std::size_t>(j) * stride];
            fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(line.data()),
                             reinterpret_cast<fftw_complex*>(line.data()));
            const double scale = forward ? 1.0 / n : 1.0;
            for (int j = 0; j < n; ++j) f.values[base + off + static_cast<std::size_t>(j) * stride] = scale * line[static_cast<std::size_t>(j)];
        }
    }
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

void fft_all(AxisField& f, bool forward)
{
    for (int a = 0; a < f.lattice.rank(); ++a) fft_axis(f, a, forward);
}

AxisField spectral_derivative(const AxisField& f, int a, int order)
{
    const Axis& ax = f.lattice.axes[static_cast<std::size_t>(a)];
    if (!ax.power_of_two())
        throw std::invalid_argument("spectral_derivative: axis " + std::to_string(a) + " is not a power-of-two axis");
    if (order != 1 && order != 2) throw std::invalid_argument("spectral_derivative: order must be 1 or 2");

    AxisField g = f;
    fft_axis(g, a, true);

    const int n = ax.points;
    const std::size_t stride = f.lattice.stride(a) * static_cast<std::size_t>(f.components);
    const std::size_t block = stride * static_cast<std::size_t>(n);
    for (std::size_t base = 0; base < g.values.size(); base += block) {
        for (int q = 0; q < n; ++q) {
            const double kappa = g.lattice.dft_wavenumber(a, q);
            cplx factor;
            if (order == 1)
                factor = (2 * q == n) ? cplx{0.0, 0.0} : iunit * kappa;   // drop Nyquist
            else
                factor = -kappa * kappa;
            for (std::size_t off = 0; off < stride; ++off)
                g.values[base + off + static_cast<std::size_t>(q) * stride] *= factor;
        }
    }

    fft_axis(g, a, false);
    return g;
}

}  // namespace stq
