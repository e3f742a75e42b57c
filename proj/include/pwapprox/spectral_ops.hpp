#pragma once

#include <span>

#include "pwapprox/spectrum.hpp"

namespace pw {

// Fills out[m] = exp(i * omega_m * t). Shared by every frequency-domain sum so
// that identical quantities are produced by identical floating-point paths.
void phase_row(const SpectralGrid& grid, double t, std::span<cdouble> out);

// f(t) = (1/2pi) sum_m values[m] e^{i omega_m t} dOmega  (left-endpoint rule).
cdouble eval_signal(const Spectrum& spec, double t);

// Same sum against a precomputed phase row (hot-loop form).
cdouble eval_signal(const Spectrum& spec, std::span<const cdouble> phase);

// (1/2pi) sum |f^|   resp.  sqrt((1/2pi) sum |f^|^2).
double pw1_norm(const Spectrum& spec);
double pw2_norm(const Spectrum& spec);

// Pointwise product f^ * h^ on a shared grid; band is preserved.
Spectrum apply_system(const TransferFunction& T, const Spectrum& spec);

// h^(omega) = -i sign(omega); sign(0) = 0.
TransferFunction hilbert_transfer(const SpectralGrid& grid);

// Indicator of [-cutoff, cutoff], 0 < cutoff <= pi.
TransferFunction lowpass_transfer(const SpectralGrid& grid, double cutoff);

TransferFunction identity_transfer(const SpectralGrid& grid);

} // namespace pw
