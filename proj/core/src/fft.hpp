#pragma once

#include <complex>
#include <span>

namespace fbl::detail {

/// Unnormalized in-place multidimensional DFT on an n^dims array
/// (sign -1: forward, e^{-2πi k·m/n}; sign +1: backward).
void fft_inplace(std::span<std::complex<double>> data, int n, int dims, int sign);

}  // namespace fbl::detail
