#pragma once

#include <span>
#include <vector>

#include "pwapprox/engines.hpp"
#include "pwapprox/sampling.hpp"
#include "pwapprox/walsh.hpp"

namespace pw {

struct KernelConfig {
    // Uniform refinement of the w1 quadrature. refine = 1 integrates on the
    // bank's grid nodes, which is the rule the adversarial-transfer identity
    // holds on exactly; larger factors resolve the kernel's zero crossings.
    int refine = 1;
};

// (1/2pi) int | sum_{|k|<=N} e^{i w t_k} phi^_k(w1) | dw1.
double kernel_l1(const ReconstructionBank& bank, double omega, int N, KernelConfig cfg = {});

// Lebesgue constant of the Dirichlet kernel D_N(x) = sum_{|k|<=N} e^{ikx}:
// (1/2pi) int |D_N|, integrated exactly between consecutive zeros of D_N
// (Gauss-Legendre panels). Accurate to ~1e-12.
double dirichlet_lebesgue(int N);

// Same integrand on the plain grid rule; comparator for grid-matched checks.
double dirichlet_lebesgue_on_grid(int N, const SpectralGrid& grid);

// (1/2pi) int | sum_{k=0}^{U} theta^_k(w) theta^_k(w1) | dw1 with
// U = 2^N - 1 (classical) or 2^N (inclusive). Exact on dyadic grids.
double walsh_dyadic_kernel_l1(const WalshSystem& sys, double omega, int N,
                              DyadicLimit limit = DyadicLimit::classical);

// Phase-conjugating extremal transfer function from the kernel at (omega, t, N):
// g^(w1) = exp(-i arg(e^{i w1 t} sum_k e^{i w t_k} phi^_k(w1))), g^ = 1 where
// the kernel vanishes. Unimodular, sup_norm pinned to 1.
TransferFunction adversarial_transfer(const ReconstructionBank& bank, double omega, double t,
                                      int N);

// |sum_k e^{i w t_k} (T phi_k)(t)| achieved by a transfer function; equals
// kernel_l1 when T is the adversarial transfer built at the same (omega, t, N).
double achieved_kernel_value(const TransferFunction& T, const ReconstructionBank& bank,
                             double omega, double t, int N);

struct WorstCase {
    double value = 0.0;
    double argmax_omega = 0.0;
};

// max over grid nodes |w1| <= sigma of |sum_k e^{i w1 t_k} (T phi_k)(t)|,
// the operator-norm proxy for the worst unit-norm signal.
WorstCase worst_case_signal_value(const TransferFunction& T, const ReconstructionBank& bank,
                                  int N, double t, double sigma);

struct GrowthFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0; // RMS
    std::size_t points_used = 0;
};

// Least squares of values against ln N, restricted to points with ln N >= 1.
GrowthFit growth_fit(std::span<const double> stages, std::span<const double> values);

} // namespace pw
