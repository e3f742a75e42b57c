// Timing comparison of the serial and OpenMP lanes of the hot kernels.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "pwapprox/diagnostics.hpp"
#include "pwapprox/engines.hpp"
#include "pwapprox/runtime.hpp"
#include "pwapprox/signals.hpp"

using namespace pw;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

template <class F>
void bench(const char* name, F&& body) {
    pw::runtime::set_threads(1);
    auto t0 = clock_type::now();
    const double serial_result = body();
    const double serial_ms = ms_since(t0);

    pw::runtime::set_threads(8);
    t0 = clock_type::now();
    const double parallel_result = body();
    const double parallel_ms = ms_since(t0);

    std::printf("%-28s serial %9.1f ms   omp %9.1f ms   speedup %5.2fx   |diff| %g\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                std::abs(serial_result - parallel_result));
}

} // namespace

int main() {
    const SpectralGrid grid(4096);
    const SamplingSequence kadec{SamplingRule::kadec, 0.1, 1, 64};

    bench("bank build (kadec, K=64)", [&] {
        const ReconstructionBank bank = build_bank(kadec, grid, 512);
        return bank.row(5).values[100].real();
    });

    const ReconstructionBank bank = build_bank(kadec, grid, 512);
    bench("kernel_l1 sweep (refine 4)", [&] {
        double acc = 0.0;
        for (int N : {16, 32, 64}) acc += kernel_l1(bank, 0.5, N, {4});
        return acc;
    });

    bench("dirichlet_lebesgue(8192)", [] { return dirichlet_lebesgue(8192); });

    bench("gram matrix (n_max=32)", [&] {
        const auto g = gram_matrix(bank, 32);
        return g[10].real();
    });

    const Spectrum f = make_triangle(grid);
    const TransferFunction T = hilbert_transfer(grid);
    const WalshSystem sys(grid, 1u << 8);
    bench("walsh engine sweep (N<=8)", [&] {
        const std::vector<double> ts = uniform_time_grid(-4, 4, 65);
        const int stages[] = {6, 7, 8};
        const auto rows = sup_error_scan(
            [&](int N, double t) { return walsh_dyadic_approx_a(f, T, sys, N, t); }, stages, ts);
        return rows.back().sup_error;
    });

    return 0;
}
