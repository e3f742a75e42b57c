#pragma once

#include <cstdint>

#include "pwapprox/spectrum.hpp"

namespace pw {

// f^ = 1 on the whole band [-pi, pi].
Spectrum make_constant(const SpectralGrid& grid);

// f^(w) = max(0, 1 - |w|/sigma), band sigma.
Spectrum make_triangle(const SpectralGrid& grid, double sigma = kPi);

// Independent seeded values at every in-band node (rough spectrum; models a
// generic worst-case-ish signal with no time decay).
Spectrum make_bandlimited_random(const SpectralGrid& grid, std::uint64_t seed, double sigma);

// Smooth random spectrum: a C-infinity bump taper times a random trigonometric
// polynomial. Evaluable at arbitrary frequencies, which makes refined-grid
// quadrature oracles meaningful.
cdouble smooth_random_value(std::uint64_t seed, double sigma, int degree, double omega);
Spectrum make_smooth_random(const SpectralGrid& grid, std::uint64_t seed, double sigma,
                            int degree = 12);

} // namespace pw
