#pragma once

#include "stq/lattice.hpp"

namespace stq {

// In-place DFT along lattice axis a, applied per component.
// forward: F_q = (1/n) sum_j f_j e^{-2 pi i j q / n}   (so f_j = sum_q F_q e^{+i kappa_q x_j})
// backward is the unnormalized inverse.
void fft_axis(AxisField& f, int a, bool forward);

// Transform over every lattice axis.
void fft_all(AxisField& f, bool forward);

// Exact derivative of the band-limited interpolant along the coordinate
// sampled by lattice axis a.  order is 1 or 2; the Nyquist bin is dropped
// for odd orders.  Requires a power-of-two axis.
AxisField spectral_derivative(const AxisField& f, int a, int order);

}  // namespace stq
