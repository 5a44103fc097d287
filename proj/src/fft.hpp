#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace tfmult::detail {

enum class FftSign { forward = -1, backward = 1 };

/// Unnormalized in-place DFT over a row-major array with `dim` axes of
/// length n each: X_k = sum_j x_j e^{sign 2 pi i j.k / n}.
void fft_inplace(std::span<std::complex<double>> data, int dim, std::size_t n,
                 FftSign sign);

}  // namespace tfmult::detail
