#pragma once

#include <complex>
#include <span>

namespace pw {

// In-place forward DFT, X[j] = sum_n x[n] e^{-2 pi i j n / N}, N a power of two.
void fft_forward(std::span<std::complex<double>> x);

} // namespace pw
