#include "pwapprox/spectral_ops.hpp"

#include <cmath>

namespace pw {

void phase_row(const SpectralGrid& grid, double t, std::span<cdouble> out) {
    // Rotation recurrence with a fresh sincos anchor every 64 nodes; the
    // accumulated drift stays below 1e-14 while avoiding per-node libm calls.
    const std::size_t M = grid.size();
    const double step_angle = grid.spacing() * t;
    const cdouble step{std::cos(step_angle), std::sin(step_angle)};
    cdouble cur{1.0, 0.0};
    for (std::size_t m = 0; m < M; ++m) {
        if ((m & 63u) == 0u) {
            const double ph = grid.node(m) * t;
            cur = cdouble{std::cos(ph), std::sin(ph)};
        }
        out[m] = cur;
        cur *= step;
    }
}

cdouble eval_signal(const Spectrum& spec, std::span<const cdouble> phase) {
    cdouble acc{0.0, 0.0};
    const std::size_t M = spec.grid.size();
    for (std::size_t m = 0; m < M; ++m) acc += spec.values[m] * phase[m];
    return acc / static_cast<double>(M);
}

cdouble eval_signal(const Spectrum& spec, double t) {
    if (!std::isfinite(t)) throw InputError("eval_signal: t must be finite");
    std::vector<cdouble> phase(spec.grid.size());
    phase_row(spec.grid, t, phase);
    return eval_signal(spec, std::span<const cdouble>(phase));
}

double pw1_norm(const Spectrum& spec) {
    double acc = 0.0;
    for (const cdouble& v : spec.values) acc += std::abs(v);
    return acc / static_cast<double>(spec.grid.size());
}

double pw2_norm(const Spectrum& spec) {
    double acc = 0.0;
    for (const cdouble& v : spec.values) acc += std::norm(v);
    return std::sqrt(acc / static_cast<double>(spec.grid.size()));
}

Spectrum apply_system(const TransferFunction& T, const Spectrum& spec) {
    if (!(T.grid == spec.grid)) throw InputError("apply_system: grid mismatch");
    std::vector<cdouble> out(spec.values.size());
    for (std::size_t m = 0; m < out.size(); ++m) out[m] = spec.values[m] * T.values[m];
    return Spectrum(spec.grid, std::move(out), spec.band);
}

TransferFunction hilbert_transfer(const SpectralGrid& grid) {
    std::vector<cdouble> v(grid.size());
    for (std::size_t m = 0; m < v.size(); ++m) {
        const double w = grid.node(m);
        const double s = w > 0.0 ? 1.0 : (w < 0.0 ? -1.0 : 0.0);
        v[m] = cdouble{0.0, -s};
    }
    return TransferFunction(grid, std::move(v));
}

TransferFunction lowpass_transfer(const SpectralGrid& grid, double cutoff) {
    if (!(cutoff > 0.0) || cutoff > kPi + 1e-15)
        throw InputError("lowpass_transfer: cutoff must lie in (0, pi]");
    std::vector<cdouble> v(grid.size());
    for (std::size_t m = 0; m < v.size(); ++m)
        v[m] = std::abs(grid.node(m)) <= cutoff ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
    return TransferFunction(grid, std::move(v));
}

TransferFunction identity_transfer(const SpectralGrid& grid) {
    return TransferFunction(grid, std::vector<cdouble>(grid.size(), cdouble{1.0, 0.0}));
}

} // namespace pw
