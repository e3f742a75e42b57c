#include "pwapprox/engines.hpp"

#include <cmath>

#include "pwapprox/kernels.hpp"

namespace pw {

namespace {

// (1/2pi) sum_m T(w_m) g(w_m) e^{i w_m t} dW against a precomputed phase row.
cdouble filtered_eval(const TransferFunction& T, const std::vector<cdouble>& g,
                      std::span<const cdouble> phase) {
    cdouble acc{0.0, 0.0};
    const std::size_t M = g.size();
    for (std::size_t m = 0; m < M; ++m) acc += T.values[m] * g[m] * phase[m];
    return acc / static_cast<double>(M);
}

cdouble filtered_walsh_eval(const TransferFunction& T, const std::int8_t* theta,
                            std::span<const cdouble> phase) {
    cdouble acc{0.0, 0.0};
    const std::size_t M = phase.size();
    for (std::size_t m = 0; m < M; ++m) {
        const cdouble term = T.values[m] * phase[m];
        acc += theta[m] < 0 ? -term : term;
    }
    return acc / static_cast<double>(M);
}

ApproxResult finish(int N, double t, cdouble value, cdouble reference) {
    ApproxResult r;
    r.stage = N;
    r.t = t;
    r.value = value;
    r.reference = reference;
    r.abs_error = std::abs(value - reference);
    return r;
}

} // namespace

ApproxResult sampling_system_approx(const Spectrum& f, const TransferFunction& T,
                                    const ReconstructionBank& bank, int N, double t) {
    if (!(f.grid == T.grid) || !(f.grid == bank.grid))
        throw InputError("sampling_system_approx: grid mismatch");
    if (N < 0 || N > bank.K)
        throw RangeError("sampling_system_approx: N exceeds bank window " + std::to_string(bank.K));

    std::vector<cdouble> phase(f.grid.size());
    phase_row(f.grid, t, phase);

    cdouble value{0.0, 0.0};
    for (int k = -N; k <= N; ++k) {
        const cdouble sample = eval_signal(f, bank.point(k));
        const cdouble tphi = filtered_eval(T, bank.row(k).values, phase);
        value += sample * tphi;
    }
    return finish(N, t, value, filtered_eval(T, f.values, phase));
}

ApproxResult shannon_oversampled(const Spectrum& f, const TransferFunction& T, double a, int N,
                                 double t) {
    if (!(f.grid == T.grid)) throw InputError("shannon_oversampled: grid mismatch");
    if (!(a >= 1.0)) throw InputError("shannon_oversampled: oversampling factor must be >= 1");
    if (N < 0) throw RangeError("shannon_oversampled: N must be >= 0");

    // h_T(tau) = (1/2pi) int h^_T e^{i w tau}; the impulse response lies in
    // PW2_pi because h^_T is bounded.
    std::vector<cdouble> phase(f.grid.size());
    const Spectrum h_spec(T.grid, T.values, kPi);

    cdouble value{0.0, 0.0};
    for (int k = -N; k <= N; ++k) {
        const double tk = static_cast<double>(k) / a;
        const cdouble sample = eval_signal(f, tk);
        const cdouble h = eval_signal(h_spec, t - tk);
        value += sample * h;
    }
    value /= a;

    phase_row(f.grid, t, phase);
    return finish(N, t, value, filtered_eval(T, f.values, phase));
}

ApproxResult functional_system_approx(const Spectrum& f, const TransferFunction& T,
                                      const MeasurementSystem& sys, std::size_t N, double t) {
    if (!(f.grid == T.grid) || !(f.grid == sys.grid()))
        throw InputError("functional_system_approx: grid mismatch");
    if (N >= sys.size())
        throw RangeError("functional_system_approx: N exceeds system range");

    std::vector<cdouble> phase(f.grid.size());
    phase_row(f.grid, t, phase);

    cdouble value{0.0, 0.0};
    for (std::size_t n = 0; n <= N; ++n) {
        const cdouble cn = measure_general(f, sys, n);
        value += cn * filtered_eval(T, sys.row(n), phase);
    }
    return finish(static_cast<int>(N), t, value, filtered_eval(T, f.values, phase));
}

namespace {

ApproxResult walsh_dyadic_common(const Spectrum& f, const TransferFunction& T,
                                 const WalshSystem& sys, int N, double t, DyadicLimit limit,
                                 bool t_in_measurement) {
    if (!(f.grid == T.grid) || !(f.grid == sys.grid()))
        throw InputError("walsh_dyadic_approx: grid mismatch");
    if (N < 0) throw RangeError("walsh_dyadic_approx: N must be >= 0");
    const unsigned upper =
        limit == DyadicLimit::inclusive ? (1u << N) : (1u << N) - 1u;
    if (upper > sys.max_index())
        throw RangeError("walsh_dyadic_approx: 2^N exceeds system max_index");

    const std::size_t M = f.grid.size();
    std::vector<cdouble> phase_t(M), phase_0(M);
    phase_row(f.grid, t, phase_t);
    phase_row(f.grid, 0.0, phase_0);

    // Engine A: sum_k c_k(f, 0) (T theta_k)(t).
    // Engine B: sum_k c_k(f, t) (T theta_k)(0).
    // Both accumulate term-by-term in index order, so they agree exactly at t = 0.
    const std::span<const cdouble> measure_phase = t_in_measurement ? phase_t : phase_0;
    const std::span<const cdouble> recon_phase = t_in_measurement ? phase_0 : phase_t;

    cdouble value{0.0, 0.0};
    for (unsigned k = 0; k <= upper; ++k) {
        const std::int8_t* theta = sys.row(k);
        cdouble ck{0.0, 0.0};
        for (std::size_t m = 0; m < M; ++m) {
            const cdouble term = f.values[m] * measure_phase[m];
            ck += theta[m] < 0 ? -term : term;
        }
        ck /= static_cast<double>(M);
        value += ck * filtered_walsh_eval(T, theta, recon_phase);
    }

    return finish(N, t, value, filtered_eval(T, f.values, phase_t));
}

} // namespace

ApproxResult walsh_dyadic_approx_a(const Spectrum& f, const TransferFunction& T,
                                   const WalshSystem& sys, int N, double t, DyadicLimit limit) {
    return walsh_dyadic_common(f, T, sys, N, t, limit, /*t_in_measurement=*/false);
}

ApproxResult walsh_dyadic_approx_b(const Spectrum& f, const TransferFunction& T,
                                   const WalshSystem& sys, int N, double t, DyadicLimit limit) {
    return walsh_dyadic_common(f, T, sys, N, t, limit, /*t_in_measurement=*/true);
}

std::vector<double> uniform_time_grid(double t_min, double t_max, std::size_t count) {
    if (count == 0 || !(t_min < t_max)) throw InputError("uniform_time_grid: bad range");
    if (count == 1) return {t_min};
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i)
        g[i] = t_min + (t_max - t_min) * static_cast<double>(i) / static_cast<double>(count - 1);
    return g;
}

std::vector<SupErrorRow> sup_error_scan(const EngineFn& engine, std::span<const int> stages,
                                        std::span<const double> t_grid) {
    if (stages.empty()) throw InputError("sup_error_scan: empty stage list");
    if (t_grid.empty()) throw InputError("sup_error_scan: empty time grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i - 1] < t_grid[i]))
            throw InputError("sup_error_scan: time grid must be strictly increasing");

    std::vector<SupErrorRow> rows;
    rows.reserve(stages.size());
    std::vector<ApproxResult> cell(t_grid.size());
    for (int stage : stages) {
        kernels::run(kernels::Exec::parallel, static_cast<std::int64_t>(t_grid.size()),
                     [&](std::int64_t i) {
                         cell[static_cast<std::size_t>(i)] =
                             engine(stage, t_grid[static_cast<std::size_t>(i)]);
                     });
        SupErrorRow row;
        row.stage = stage;
        row.worst = cell[0];
        row.sup_error = cell[0].abs_error;
        for (std::size_t i = 1; i < cell.size(); ++i) {
            if (cell[i].abs_error > row.sup_error) {
                row.sup_error = cell[i].abs_error;
                row.worst = cell[i];
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace pw
