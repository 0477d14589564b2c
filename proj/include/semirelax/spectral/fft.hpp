#pragma once

#include <complex>
#include <span>

#include "semirelax/spectral/grid.hpp"

namespace semirelax::spectral {

using cplx = std::complex<double>;

// Thin wrappers over FFTW. Plans are created once per shape with
// FFTW_ESTIMATE and cached behind a mutex, so repeated transforms of the same
// shape are bitwise reproducible and safe to call from several threads.

/// Unnormalised forward DFT (exponent sign -1) over the grid's cube, in place.
void dft_forward(const Grid& grid, std::span<cplx> data);
/// Unnormalised backward DFT (exponent sign +1), in place.
void dft_backward(const Grid& grid, std::span<cplx> data);

/// DST-II of staggered samples: Y_m = 2 sum_j x_j sin(pi (j+1/2)(m+1)/n).
void dst_forward(std::span<double> data);
/// DST-III, the inverse of dst_forward up to a factor 2n.
void dst_backward(std::span<double> data);

}  // namespace semirelax::spectral
