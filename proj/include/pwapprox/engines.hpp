#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pwapprox/sampling.hpp"
#include "pwapprox/spectral_ops.hpp"
#include "pwapprox/walsh.hpp"

namespace pw {

// 2^N summands (indices 0 .. 2^N - 1) versus the literal 0 .. 2^N.
enum class DyadicLimit { classical, inclusive };

struct ApproxResult {
    int stage = 0;        // N
    double t = 0.0;
    cdouble value{0.0, 0.0};
    cdouble reference{0.0, 0.0};
    double abs_error = 0.0;
};

// sum_{|k|<=N} f(t_k) (T phi_k)(t); reference is the direct frequency-domain
// evaluation of (Tf)(t).
ApproxResult sampling_system_approx(const Spectrum& f, const TransferFunction& T,
                                    const ReconstructionBank& bank, int N, double t);

// (1/a) sum_{|k|<=N} f(k/a) h_T(t - k/a), a >= 1.
ApproxResult shannon_oversampled(const Spectrum& f, const TransferFunction& T, double a, int N,
                                 double t);

// sum_{n=0}^{N} c_n(f) (T theta_n)(t) over a tabulated measurement system.
ApproxResult functional_system_approx(const Spectrum& f, const TransferFunction& T,
                                      const MeasurementSystem& sys, std::size_t N, double t);

// Dyadic Walsh processes: engine A measures at time 0 and reconstructs at t;
// engine B puts t into the measurement functionals and reconstructs at 0.
ApproxResult walsh_dyadic_approx_a(const Spectrum& f, const TransferFunction& T,
                                   const WalshSystem& sys, int N, double t,
                                   DyadicLimit limit = DyadicLimit::classical);
ApproxResult walsh_dyadic_approx_b(const Spectrum& f, const TransferFunction& T,
                                   const WalshSystem& sys, int N, double t,
                                   DyadicLimit limit = DyadicLimit::classical);

struct SupErrorRow {
    int stage = 0;
    double sup_error = 0.0;
    ApproxResult worst; // result at the argmax grid time
};

using EngineFn = std::function<ApproxResult(int stage, double t)>;

// Per stage, the maximum abs_error over the time grid (strictly increasing
// grid required). Cells run in parallel into preassigned slots.
std::vector<SupErrorRow> sup_error_scan(const EngineFn& engine, std::span<const int> stages,
                                        std::span<const double> t_grid);

std::vector<double> uniform_time_grid(double t_min, double t_max, std::size_t count);

} // namespace pw
