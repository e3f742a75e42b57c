#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pwapprox/spectrum.hpp"

namespace pw {

enum class SamplingRule { equidistant, kadec };

// Complete interpolating sequence t_k, |k| <= window. The equidistant rule is
// t_k = k; the kadec rule perturbs each integer by a seeded uniform offset
// delta_k in [-delta, delta], delta < 1/4, with delta_0 = 0.
struct SamplingSequence {
    SamplingRule rule = SamplingRule::equidistant;
    double delta = 0.0;
    std::uint64_t seed = 0;
    int window = 512; // K

    bool is_equidistant() const noexcept { return rule == SamplingRule::equidistant; }
};

// t_k for |k| <= window; RangeError otherwise.
double sequence_point(const SamplingSequence& seq, int k);

// Offset rule without the window restriction (the sequence is defined for all
// k; the window only bounds what callers may address directly).
double sequence_point_unchecked(const SamplingSequence& seq, std::int64_t k);

struct GeneratingFunctionConfig {
    int n_prod = 0;                         // 0 = auto: max(4*window, 256)
    int tail_orders = 32;                   // z-powers kept in the perturbation tail
    std::int64_t tail_cutoff = 1 << 20;     // summation bound for tail coefficients
};

// Truncated zero product z * prod (1 - z/t_k)(1 - z/t_{-k}) with an analytic
// equidistant tail (gamma ratio) and a power-series tail for the kadec
// perturbation. Valid on |z| <= n_prod/2; doubling n_prod inside that disc
// moves values by less than 1e-8 relative.
class GeneratingFunction {
public:
    explicit GeneratingFunction(SamplingSequence seq, GeneratingFunctionConfig cfg = {});

    std::complex<double> value(std::complex<double> z) const;
    double value(double z) const;

    // phi'(t_k) by analytic removal of the vanishing factor.
    double derivative_at(int k) const;

    // phi_k(t) = phi(t) / (phi'(t_k) (t - t_k)), evaluated divide-free so that
    // phi_k(t_k) = 1 and phi_k(t_l) = 0 hold exactly. Equidistant sequences
    // take the closed-form sinc path.
    double reconstruction(int k, double t) const;

    double validated_radius() const noexcept { return 0.5 * static_cast<double>(n_prod_); }
    int n_prod() const noexcept { return n_prod_; }
    const SamplingSequence& sequence() const noexcept { return seq_; }

private:
    // Product over pairs 1..n_prod with one factor (1 - z/t_skip) removed;
    // skip = 0 removes the leading z instead.
    double removed_factor_product(double z, int skip) const;
    double tail_log(double z) const;
    std::complex<double> tail_log(std::complex<double> z) const;
    void check_radius(double abs_z) const;

    SamplingSequence seq_;
    int n_prod_;
    std::vector<double> t_pos_;        // t_k, k = 1..n_prod
    std::vector<double> t_neg_;        // t_{-k}
    std::vector<double> tail_coeff_;   // P_j, j = 1..tail_orders (kadec only)
    double two_log_gamma_np1_;         // 2 lgamma(n_prod + 1)
};

// Fourier transform of phi_k as a Spectrum: sum_{|n|<=L} phi_k(n) e^{-i n w}.
// Equidistant sequences use the exact e^{-i w k}.
Spectrum phi_hat_k(const GeneratingFunction& gf, int k, const SpectralGrid& grid, int L);

// Reconstruction spectra for |k| <= K plus the sampling points, built once and
// shared by the approximation engines and diagnostics.
struct ReconstructionBank {
    SamplingSequence seq;
    SpectralGrid grid;
    int K;
    int L;
    std::vector<double> points;    // t_k at index k + K
    std::vector<Spectrum> rows;    // phi_hat_k at index k + K

    const Spectrum& row(int k) const;
    double point(int k) const;
};

ReconstructionBank build_bank(const SamplingSequence& seq, const SpectralGrid& grid, int L = 512,
                              GeneratingFunctionConfig cfg = {});

struct RieszEstimate {
    double lower = 0.0;                 // A
    double upper = 0.0;                 // B
    std::vector<double> eigenvalues;    // ascending, one entry per basis row
};

// Finite-section Riesz bounds: extreme eigenvalues of the Gram matrix
// G_{jk} = (1/2pi) int phi_hat_j conj(phi_hat_k), |j|,|k| <= n_max.
RieszEstimate riesz_bounds_estimate(const ReconstructionBank& bank, int n_max);

// Gram matrix entries (row-major, dimension 2*n_max+1) for export.
std::vector<cdouble> gram_matrix(const ReconstructionBank& bank, int n_max);

} // namespace pw
