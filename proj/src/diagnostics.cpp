#include "pwapprox/diagnostics.hpp"

#include <cmath>

#include "pwapprox/kernels.hpp"
#include "pwapprox/spectral_ops.hpp"

namespace pw {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr double kGlNode[16] = {
    -0.98940093499164993260, -0.94457502307323257608, -0.86563120238783174388,
    -0.75540440835500303390, -0.61787624440264374845, -0.45801677765722738634,
    -0.28160355077925891323, -0.09501250983763744019, 0.09501250983763744019,
    0.28160355077925891323,  0.45801677765722738634,  0.61787624440264374845,
    0.75540440835500303390,  0.86563120238783174388,  0.94457502307323257608,
    0.98940093499164993260};
constexpr double kGlWeight[16] = {
    0.02715245941175409485, 0.06225352393864789286, 0.09515851168249278481,
    0.12462897125553387205, 0.14959598881657673208, 0.16915651939500253819,
    0.18260341504492358887, 0.18945061045506849629, 0.18945061045506849629,
    0.18260341504492358887, 0.16915651939500253819, 0.14959598881657673208,
    0.12462897125553387205, 0.09515851168249278481, 0.06225352393864789286,
    0.02715245941175409485};

double dirichlet_abs(int N, double x) {
    // |sin((N + 1/2) x) / sin(x / 2)|, stable away from x = 0 mod 2 pi.
    return std::abs(std::sin((static_cast<double>(N) + 0.5) * x) / std::sin(0.5 * x));
}

void check_probe_frequency(double omega) {
    if (!(omega >= -kPi && omega <= kPi))
        throw InputError("probe frequency must lie in [-pi, pi]");
}

// sum_{|k|<=N} e^{i w t_k} phi^_k at one quadrature node, refine = 1 path.
cdouble kernel_sum_at_node(const ReconstructionBank& bank, std::span<const cdouble> phase,
                           int N, std::size_t m) {
    cdouble s{0.0, 0.0};
    for (int k = -N; k <= N; ++k)
        s += phase[static_cast<std::size_t>(k + N)] * bank.row(k).values[m];
    return s;
}

std::vector<cdouble> sequence_phases(const ReconstructionBank& bank, double omega, int N) {
    std::vector<cdouble> phase(static_cast<std::size_t>(2 * N) + 1);
    for (int k = -N; k <= N; ++k) {
        const double ph = omega * bank.point(k);
        phase[static_cast<std::size_t>(k + N)] = cdouble{std::cos(ph), std::sin(ph)};
    }
    return phase;
}

} // namespace

double kernel_l1(const ReconstructionBank& bank, double omega, int N, KernelConfig cfg) {
    check_probe_frequency(omega);
    if (N < 0 || N > bank.K)
        throw RangeError("kernel_l1: N exceeds bank window " + std::to_string(bank.K));
    if (cfg.refine < 1) throw InputError("kernel_l1: refine must be >= 1");

    const std::size_t M = bank.grid.size();
    const std::vector<cdouble> phase = sequence_phases(bank, omega, N);

    if (cfg.refine == 1) {
        std::vector<double> moduli(M);
        kernels::run(kernels::Exec::parallel, static_cast<std::int64_t>(M), [&](std::int64_t m) {
            moduli[static_cast<std::size_t>(m)] =
                std::abs(kernel_sum_at_node(bank, phase, N, static_cast<std::size_t>(m)));
        });
        double acc = 0.0;
        for (double v : moduli) acc += v;
        return acc / static_cast<double>(M);
    }

    // Refined quadrature: the kernel is the trigonometric series
    // sum_{|n|<=L} g_n e^{-i n w1} with g_n = sum_k e^{i w t_k} phi_k(n); for
    // equidistant banks phi_k(n) = delta_{nk} collapses g to the phases.
    const std::size_t R = static_cast<std::size_t>(cfg.refine) * M;
    const int L = bank.L;
    std::vector<cdouble> g(static_cast<std::size_t>(2 * L) + 1, cdouble{0.0, 0.0});
    if (bank.seq.is_equidistant()) {
        for (int k = -N; k <= N; ++k) g[static_cast<std::size_t>(k + L)] = phase[static_cast<std::size_t>(k + N)];
    } else {
        GeneratingFunction gf(bank.seq, GeneratingFunctionConfig{
                                            std::max({4 * bank.seq.window, 256, 2 * bank.L}), 32,
                                            1 << 20});
        for (int n = -L; n <= L; ++n) {
            cdouble acc{0.0, 0.0};
            for (int k = -N; k <= N; ++k)
                acc += phase[static_cast<std::size_t>(k + N)] *
                       gf.reconstruction(k, static_cast<double>(n));
            g[static_cast<std::size_t>(n + L)] = acc;
        }
    }

    std::vector<double> moduli(R);
    kernels::run(kernels::Exec::parallel, static_cast<std::int64_t>(R), [&](std::int64_t r) {
        const double w1 = -kPi + kTwoPi * static_cast<double>(r) / static_cast<double>(R);
        cdouble rot{std::cos(w1 * static_cast<double>(L)), std::sin(w1 * static_cast<double>(L))};
        const cdouble step{std::cos(-w1), std::sin(-w1)};
        cdouble s{0.0, 0.0};
        for (int n = -L; n <= L; ++n) {
            s += g[static_cast<std::size_t>(n + L)] * rot;
            rot *= step;
        }
        moduli[static_cast<std::size_t>(r)] = std::abs(s);
    });
    double acc = 0.0;
    for (double v : moduli) acc += v;
    return acc / static_cast<double>(R);
}

double dirichlet_lebesgue(int N) {
    if (N < 0) throw InputError("dirichlet_lebesgue: N must be >= 0");
    if (N == 0) return 1.0;

    // Zeros of D_N in (0, pi]: x_j = 2 pi j / (2N + 1), j = 1..N. |D_N| is
    // analytic between consecutive zeros, so per-panel Gauss-Legendre is
    // accurate to roundoff.
    const int panels = N + 1;
    std::vector<double> partial(static_cast<std::size_t>(panels));
    kernels::run(kernels::Exec::parallel, panels, [&](std::int64_t p) {
        const double lo = kTwoPi * static_cast<double>(p) / (2.0 * N + 1.0);
        const double hi =
            p == N ? kPi : kTwoPi * static_cast<double>(p + 1) / (2.0 * N + 1.0);
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (int q = 0; q < 16; ++q) acc += kGlWeight[q] * dirichlet_abs(N, mid + half * kGlNode[q]);
        partial[static_cast<std::size_t>(p)] = acc * half;
    });
    double total = 0.0;
    for (double v : partial) total += v;
    return total / kPi; // (1/2pi) * 2 * int_0^pi by evenness
}

double dirichlet_lebesgue_on_grid(int N, const SpectralGrid& grid) {
    if (N < 0) throw InputError("dirichlet_lebesgue_on_grid: N must be >= 0");
    const std::size_t M = grid.size();
    std::vector<double> moduli(M);
    kernels::run(kernels::Exec::parallel, static_cast<std::int64_t>(M), [&](std::int64_t m) {
        const double w = grid.node(static_cast<std::size_t>(m));
        cdouble s{0.0, 0.0};
        for (int k = -N; k <= N; ++k) {
            const double ph = static_cast<double>(k) * w;
            s += cdouble{std::cos(ph), std::sin(ph)};
        }
        moduli[static_cast<std::size_t>(m)] = std::abs(s);
    });
    double acc = 0.0;
    for (double v : moduli) acc += v;
    return acc / static_cast<double>(M);
}

double walsh_dyadic_kernel_l1(const WalshSystem& sys, double omega, int N, DyadicLimit limit) {
    if (!(omega >= -kPi && omega < kPi))
        throw InputError("walsh_dyadic_kernel_l1: omega must lie in [-pi, pi)");
    if (N < 0) throw InputError("walsh_dyadic_kernel_l1: N must be >= 0");
    const unsigned upper = limit == DyadicLimit::inclusive ? (1u << N) : (1u << N) - 1u;
    if (upper > sys.max_index())
        throw RangeError("walsh_dyadic_kernel_l1: 2^N exceeds system max_index");

    // theta values are +-1; the whole computation stays in integers and the
    // final division by the power-of-two grid size is exact.
    const std::size_t M = sys.grid().size();
    double x = (omega + kPi) / kTwoPi;
    if (x < 0.0) x = 0.0;
    if (x >= 1.0) x = std::nextafter(1.0, 0.0);
    std::vector<int> probe(static_cast<std::size_t>(upper) + 1);
    for (unsigned k = 0; k <= upper; ++k) probe[k] = walsh(k, x);

    std::vector<std::int64_t> cell(M);
    kernels::run(kernels::Exec::parallel, static_cast<std::int64_t>(M), [&](std::int64_t m) {
        const std::int8_t* col = sys.row(0) + m; // rows are contiguous, stride M
        std::int64_t s = 0;
        for (unsigned k = 0; k <= upper; ++k) s += probe[k] * static_cast<int>(col[k * M]);
        cell[static_cast<std::size_t>(m)] = s < 0 ? -s : s;
    });
    std::int64_t total = 0;
    for (std::int64_t v : cell) total += v;
    return static_cast<double>(total) / static_cast<double>(M);
}

TransferFunction adversarial_transfer(const ReconstructionBank& bank, double omega, double t,
                                      int N) {
    check_probe_frequency(omega);
    if (N < 0 || N > bank.K)
        throw RangeError("adversarial_transfer: N exceeds bank window " + std::to_string(bank.K));

    const std::size_t M = bank.grid.size();
    const std::vector<cdouble> phase = sequence_phases(bank, omega, N);
    std::vector<cdouble> values(M);
    kernels::run(kernels::Exec::parallel, static_cast<std::int64_t>(M), [&](std::int64_t mi) {
        const std::size_t m = static_cast<std::size_t>(mi);
        const cdouble s = kernel_sum_at_node(bank, phase, N, m);
        const double w1 = bank.grid.node(m);
        const double ph = w1 * t;
        const cdouble rotated = cdouble{std::cos(ph), std::sin(ph)} * s;
        if (rotated == cdouble{0.0, 0.0}) {
            values[m] = cdouble{1.0, 0.0};
        } else {
            const double a = std::atan2(rotated.imag(), rotated.real());
            values[m] = cdouble{std::cos(-a), std::sin(-a)};
        }
    });
    return TransferFunction(bank.grid, std::move(values), 1.0);
}

double achieved_kernel_value(const TransferFunction& T, const ReconstructionBank& bank,
                             double omega, double t, int N) {
    check_probe_frequency(omega);
    if (!(T.grid == bank.grid)) throw InputError("achieved_kernel_value: grid mismatch");
    if (N < 0 || N > bank.K)
        throw RangeError("achieved_kernel_value: N exceeds bank window");

    const std::size_t M = bank.grid.size();
    std::vector<cdouble> phase_t(M);
    phase_row(bank.grid, t, phase_t);
    const std::vector<cdouble> seq_phase = sequence_phases(bank, omega, N);

    cdouble total{0.0, 0.0};
    for (int k = -N; k <= N; ++k) {
        cdouble tphi{0.0, 0.0};
        const std::vector<cdouble>& row = bank.row(k).values;
        for (std::size_t m = 0; m < M; ++m) tphi += T.values[m] * row[m] * phase_t[m];
        tphi /= static_cast<double>(M);
        total += seq_phase[static_cast<std::size_t>(k + N)] * tphi;
    }
    return std::abs(total);
}

WorstCase worst_case_signal_value(const TransferFunction& T, const ReconstructionBank& bank,
                                  int N, double t, double sigma) {
    if (!(sigma > 0.0) || sigma > kPi + 1e-15)
        throw InputError("worst_case_signal_value: sigma must lie in (0, pi]");
    if (!(T.grid == bank.grid)) throw InputError("worst_case_signal_value: grid mismatch");
    if (N < 0 || N > bank.K)
        throw RangeError("worst_case_signal_value: N exceeds bank window");

    const std::size_t M = bank.grid.size();
    std::vector<cdouble> phase_t(M);
    phase_row(bank.grid, t, phase_t);

    // (T phi_k)(t), one pass over the bank.
    std::vector<cdouble> tphi(static_cast<std::size_t>(2 * N) + 1);
    kernels::run(kernels::Exec::parallel, static_cast<std::int64_t>(2 * N) + 1,
                 [&](std::int64_t idx) {
                     const std::vector<cdouble>& row =
                         bank.row(static_cast<int>(idx) - N).values;
                     cdouble acc{0.0, 0.0};
                     for (std::size_t m = 0; m < M; ++m) acc += T.values[m] * row[m] * phase_t[m];
                     tphi[static_cast<std::size_t>(idx)] = acc / static_cast<double>(M);
                 });

    std::vector<double> magnitude(M, -1.0);
    kernels::run(kernels::Exec::parallel, static_cast<std::int64_t>(M), [&](std::int64_t mi) {
        const std::size_t m = static_cast<std::size_t>(mi);
        const double w1 = bank.grid.node(m);
        if (std::abs(w1) > sigma) return;
        cdouble s{0.0, 0.0};
        for (int k = -N; k <= N; ++k) {
            const double ph = w1 * bank.point(k);
            s += cdouble{std::cos(ph), std::sin(ph)} * tphi[static_cast<std::size_t>(k + N)];
        }
        magnitude[m] = std::abs(s);
    });

    WorstCase res;
    res.value = -1.0;
    for (std::size_t m = 0; m < M; ++m) {
        if (magnitude[m] > res.value) {
            res.value = magnitude[m];
            res.argmax_omega = bank.grid.node(m);
        }
    }
    return res;
}

GrowthFit growth_fit(std::span<const double> stages, std::span<const double> values) {
    if (stages.size() != values.size()) throw InputError("growth_fit: size mismatch");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (!(values[i] > 0.0)) throw InputError("growth_fit: values must be positive");
        const double lx = std::log(stages[i]);
        if (lx >= 1.0) {
            xs.push_back(lx);
            ys.push_back(values[i]);
        }
    }
    if (xs.size() < 3) throw InputError("growth_fit: need at least 3 points with ln N >= 1");

    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    GrowthFit fit;
    fit.points_used = xs.size();
    const double det = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

} // namespace pw
