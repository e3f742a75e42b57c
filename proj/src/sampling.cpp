#include "pwapprox/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "pwapprox/fft.hpp"
#include "pwapprox/gammafn.hpp"
#include "pwapprox/linalg.hpp"
#include "pwapprox/rng.hpp"

namespace pw {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void validate_sequence(const SamplingSequence& seq) {
    if (seq.window < 0) throw InputError("SamplingSequence: window must be >= 0");
    if (seq.rule == SamplingRule::kadec) {
        if (!(seq.delta >= 0.0) || seq.delta >= 0.25)
            throw InputError("SamplingSequence: kadec delta must lie in [0, 1/4)");
    }
}

// Mantissa/exponent accumulator; keeps long products away from overflow.
struct ScaledReal {
    double mant = 1.0;
    long exp2 = 0;

    void mul(double f) {
        mant *= f;
        const double a = std::abs(mant);
        if (a == 0.0) return;
        if (a > 0x1p+512) {
            mant = std::ldexp(mant, -512);
            exp2 += 512;
        } else if (a < 0x1p-512) {
            mant = std::ldexp(mant, 512);
            exp2 -= 512;
        }
    }
};

struct ScaledComplex {
    std::complex<double> mant{1.0, 0.0};
    long exp2 = 0;

    void mul(std::complex<double> f) {
        mant *= f;
        const double a = std::abs(mant.real()) + std::abs(mant.imag());
        if (a == 0.0) return;
        if (a > 0x1p+512) {
            mant = {std::ldexp(mant.real(), -512), std::ldexp(mant.imag(), -512)};
            exp2 += 512;
        } else if (a < 0x1p-512) {
            mant = {std::ldexp(mant.real(), 512), std::ldexp(mant.imag(), 512)};
            exp2 -= 512;
        }
    }
};

double real_log_gamma(double x) { return log_gamma_right(std::complex<double>{x, 0.0}).real(); }

double sinc_pi(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(kPi * x) / (kPi * x);
}

} // namespace

double sequence_point_unchecked(const SamplingSequence& seq, std::int64_t k) {
    if (seq.rule == SamplingRule::equidistant || k == 0) return static_cast<double>(k);
    return static_cast<double>(k) + seq.delta * keyed_symmetric(seq.seed, k);
}

double sequence_point(const SamplingSequence& seq, int k) {
    validate_sequence(seq);
    if (std::abs(k) > seq.window)
        throw RangeError("sequence_point: |k| exceeds window " + std::to_string(seq.window));
    return sequence_point_unchecked(seq, k);
}

GeneratingFunction::GeneratingFunction(SamplingSequence seq, GeneratingFunctionConfig cfg)
    : seq_(seq) {
    validate_sequence(seq_);
    n_prod_ = cfg.n_prod > 0 ? cfg.n_prod : std::max(4 * seq_.window, 256);
    if (n_prod_ < 64) throw ConfigError("GeneratingFunction: n_prod must be >= 64");
    if (cfg.tail_orders < 8) throw ConfigError("GeneratingFunction: tail_orders must be >= 8");
    if (cfg.tail_cutoff <= n_prod_)
        throw ConfigError("GeneratingFunction: tail_cutoff must exceed n_prod");

    t_pos_.resize(static_cast<std::size_t>(n_prod_) + 1);
    t_neg_.resize(static_cast<std::size_t>(n_prod_) + 1);
    for (int k = 1; k <= n_prod_; ++k) {
        t_pos_[static_cast<std::size_t>(k)] = sequence_point_unchecked(seq_, k);
        t_neg_[static_cast<std::size_t>(k)] = sequence_point_unchecked(seq_, -k);
    }

    two_log_gamma_np1_ = 2.0 * real_log_gamma(static_cast<double>(n_prod_) + 1.0);

    if (seq_.rule == SamplingRule::kadec && seq_.delta > 0.0) {
        // P_j = sum_{k > n_prod} [ t_k^{-j} + t_{-k}^{-j} - (1 + (-1)^j) k^{-j} ],
        // accumulated in fixed-size chunks so the result is identical for any
        // worker count.
        const int J = cfg.tail_orders;
        tail_coeff_.assign(static_cast<std::size_t>(J) + 1, 0.0);
        const std::int64_t lo = n_prod_ + 1;
        const std::int64_t hi = cfg.tail_cutoff;
        const std::int64_t chunk = 8192;
        const std::int64_t n_chunks = (hi - lo + chunk) / chunk;
        std::vector<double> partial(static_cast<std::size_t>(n_chunks) * (J + 1), 0.0);

#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < n_chunks; ++c) {
            double* acc = partial.data() + static_cast<std::size_t>(c) * (J + 1);
            const std::int64_t k_end = std::min(hi, lo + (c + 1) * chunk - 1);
            for (std::int64_t k = lo + c * chunk; k <= k_end; ++k) {
                const double a = 1.0 / sequence_point_unchecked(seq_, k);
                const double b = 1.0 / sequence_point_unchecked(seq_, -k);
                const double cc = 1.0 / static_cast<double>(k);
                double pa = a, pb = b, pc = cc;
                for (int j = 1; j <= J; ++j) {
                    double term = pa + pb;
                    if ((j & 1) == 0) term -= 2.0 * pc;
                    acc[j] += term;
                    pa *= a;
                    pb *= b;
                    pc *= cc;
                    if (std::abs(pa) < 1e-320 && std::abs(pb) < 1e-320) break;
                }
            }
        }
        for (std::int64_t c = 0; c < n_chunks; ++c) {
            const double* acc = partial.data() + static_cast<std::size_t>(c) * (J + 1);
            for (int j = 1; j <= J; ++j) tail_coeff_[static_cast<std::size_t>(j)] += acc[j];
        }
    }
}

void GeneratingFunction::check_radius(double abs_z) const {
    if (!(abs_z <= validated_radius()))
        throw ConfigError("GeneratingFunction: |z| = " + std::to_string(abs_z) +
                          " exceeds validated radius " + std::to_string(validated_radius()) +
                          " for n_prod = " + std::to_string(n_prod_));
}

double GeneratingFunction::tail_log(double z) const {
    const double np1 = static_cast<double>(n_prod_) + 1.0;
    double r = two_log_gamma_np1_ - real_log_gamma(np1 - z) - real_log_gamma(np1 + z);
    if (!tail_coeff_.empty()) {
        double p = z;
        for (std::size_t j = 1; j < tail_coeff_.size(); ++j) {
            r -= p / static_cast<double>(j) * tail_coeff_[j];
            p *= z;
        }
    }
    return r;
}

std::complex<double> GeneratingFunction::tail_log(std::complex<double> z) const {
    const double np1 = static_cast<double>(n_prod_) + 1.0;
    std::complex<double> r = two_log_gamma_np1_ - log_gamma_right(np1 - z) - log_gamma_right(np1 + z);
    if (!tail_coeff_.empty()) {
        std::complex<double> p = z;
        for (std::size_t j = 1; j < tail_coeff_.size(); ++j) {
            r -= p / static_cast<double>(j) * tail_coeff_[j];
            p *= z;
        }
    }
    return r;
}

double GeneratingFunction::value(double z) const {
    check_radius(std::abs(z));
    ScaledReal prod;
    prod.mul(z);
    if (prod.mant == 0.0) return 0.0;
    for (int k = 1; k <= n_prod_; ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        prod.mul((1.0 - z / t_pos_[i]) * (1.0 - z / t_neg_[i]));
        if (prod.mant == 0.0) return 0.0;
    }
    const double sign = prod.mant < 0.0 ? -1.0 : 1.0;
    const double lg = std::log(std::abs(prod.mant)) + static_cast<double>(prod.exp2) * kLn2 +
                      tail_log(z);
    return sign * std::exp(lg);
}

std::complex<double> GeneratingFunction::value(std::complex<double> z) const {
    if (z.imag() == 0.0) return {value(z.real()), 0.0};
    check_radius(std::abs(z));
    ScaledComplex prod;
    prod.mul(z);
    for (int k = 1; k <= n_prod_; ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        prod.mul((1.0 - z / t_pos_[i]) * (1.0 - z / t_neg_[i]));
        if (prod.mant == std::complex<double>{0.0, 0.0}) return {0.0, 0.0};
    }
    const std::complex<double> lg =
        std::log(prod.mant) + static_cast<double>(prod.exp2) * kLn2 + tail_log(z);
    return std::exp(lg);
}

double GeneratingFunction::removed_factor_product(double z, int skip) const {
    ScaledReal prod;
    if (skip != 0) prod.mul(z);
    const int ak = std::abs(skip);
    for (int k = 1; k <= n_prod_; ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        if (k == ak) {
            // keep only the half of the pair that does not vanish at t_skip
            prod.mul(skip > 0 ? (1.0 - z / t_neg_[i]) : (1.0 - z / t_pos_[i]));
        } else {
            prod.mul((1.0 - z / t_pos_[i]) * (1.0 - z / t_neg_[i]));
        }
        if (prod.mant == 0.0) return 0.0;
    }
    if (prod.mant == 0.0) return 0.0;
    const double sign = prod.mant < 0.0 ? -1.0 : 1.0;
    return sign *
           std::exp(std::log(std::abs(prod.mant)) + static_cast<double>(prod.exp2) * kLn2 +
                    tail_log(z));
}

double GeneratingFunction::derivative_at(int k) const {
    if (std::abs(k) > seq_.window)
        throw RangeError("derivative_at: |k| exceeds window " + std::to_string(seq_.window));
    if (seq_.is_equidistant()) return (k & 1) ? -1.0 : 1.0;
    if (k == 0) return 1.0;
    const double tk = sequence_point_unchecked(seq_, k);
    check_radius(std::abs(tk));
    return -removed_factor_product(tk, k) / tk;
}

double GeneratingFunction::reconstruction(int k, double t) const {
    if (std::abs(k) > seq_.window)
        throw RangeError("reconstruction: |k| exceeds window " + std::to_string(seq_.window));
    if (!std::isfinite(t)) throw InputError("reconstruction: t must be finite");
    if (seq_.is_equidistant()) return sinc_pi(t - static_cast<double>(k));

    const double tk = sequence_point_unchecked(seq_, k);
    check_radius(std::max(std::abs(t), std::abs(tk)));
    const double num = removed_factor_product(t, k);
    if (num == 0.0) return 0.0;
    const double den = removed_factor_product(tk, k);
    return num / den;
}

Spectrum phi_hat_k(const GeneratingFunction& gf, int k, const SpectralGrid& grid, int L) {
    const SamplingSequence& seq = gf.sequence();
    if (std::abs(k) > seq.window)
        throw RangeError("phi_hat_k: |k| exceeds window " + std::to_string(seq.window));
    if (L < 1) throw ConfigError("phi_hat_k: L must be >= 1");

    const std::size_t M = grid.size();
    std::vector<cdouble> values(M);

    if (seq.is_equidistant()) {
        for (std::size_t m = 0; m < M; ++m) {
            const double ph = -grid.node(m) * static_cast<double>(k);
            values[m] = cdouble{std::cos(ph), std::sin(ph)};
        }
        return Spectrum(grid, std::move(values), kPi);
    }

    if (2 * static_cast<std::size_t>(L) >= M)
        throw ConfigError("phi_hat_k: need 2L < grid size for exact quadrature");

    // Fourier series from integer samples, evaluated on the grid by FFT:
    // phi_hat_k(w_m) = sum_{|n|<=L} phi_k(n) e^{-i n w_m}
    //               = sum_n [(-1)^n phi_k(n)] e^{-2 pi i n m / M}.
    std::vector<cdouble> d(M, cdouble{0.0, 0.0});
    for (int n = -L; n <= L; ++n) {
        const double c = gf.reconstruction(k, static_cast<double>(n));
        const double sgn = (n & 1) ? -1.0 : 1.0;
        const std::size_t j = static_cast<std::size_t>(n >= 0 ? n : n + static_cast<int>(M));
        d[j] += sgn * c;
    }
    fft_forward(d);
    return Spectrum(grid, std::move(d), kPi);
}

const Spectrum& ReconstructionBank::row(int k) const {
    if (std::abs(k) > K) throw RangeError("ReconstructionBank: |k| exceeds window");
    return rows[static_cast<std::size_t>(k + K)];
}

double ReconstructionBank::point(int k) const {
    if (std::abs(k) > K) throw RangeError("ReconstructionBank: |k| exceeds window");
    return points[static_cast<std::size_t>(k + K)];
}

ReconstructionBank build_bank(const SamplingSequence& seq, const SpectralGrid& grid, int L,
                              GeneratingFunctionConfig cfg) {
    validate_sequence(seq);
    GeneratingFunctionConfig effective = cfg;
    if (effective.n_prod == 0)
        effective.n_prod = std::max({4 * seq.window, 256, 2 * L});
    GeneratingFunction gf(seq, effective);

    const int K = seq.window;
    ReconstructionBank bank{seq, grid, K, L, {}, {}};
    bank.points.resize(static_cast<std::size_t>(2 * K) + 1);
    for (int k = -K; k <= K; ++k)
        bank.points[static_cast<std::size_t>(k + K)] = sequence_point_unchecked(seq, k);

    const std::size_t n_rows = static_cast<std::size_t>(2 * K) + 1;
    bank.rows.reserve(n_rows);
    std::vector<std::vector<cdouble>> row_values(n_rows);

#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(n_rows); ++idx) {
        const int k = static_cast<int>(idx) - K;
        Spectrum s = phi_hat_k(gf, k, grid, L);
        row_values[static_cast<std::size_t>(idx)] = std::move(s.values);
    }
    for (std::size_t idx = 0; idx < n_rows; ++idx)
        bank.rows.emplace_back(grid, std::move(row_values[idx]), kPi);
    return bank;
}

std::vector<cdouble> gram_matrix(const ReconstructionBank& bank, int n_max) {
    if (n_max < 0 || n_max > bank.K)
        throw InputError("gram_matrix: n_max must lie in [0, bank window]");
    const int dim = 2 * n_max + 1;
    const std::size_t M = bank.grid.size();
    std::vector<cdouble> g(static_cast<std::size_t>(dim) * dim);

#pragma omp parallel for schedule(static)
    for (int r = 0; r < dim; ++r) {
        const Spectrum& rj = bank.row(r - n_max);
        for (int c = r; c < dim; ++c) {
            const Spectrum& rk = bank.row(c - n_max);
            cdouble acc{0.0, 0.0};
            for (std::size_t m = 0; m < M; ++m) acc += rj.values[m] * std::conj(rk.values[m]);
            acc /= static_cast<double>(M);
            g[static_cast<std::size_t>(r) * dim + c] = acc;
            g[static_cast<std::size_t>(c) * dim + r] = std::conj(acc);
        }
    }
    return g;
}

RieszEstimate riesz_bounds_estimate(const ReconstructionBank& bank, int n_max) {
    if (n_max < 1) throw InputError("riesz_bounds_estimate: n_max must be >= 1");
    const std::vector<cdouble> g = gram_matrix(bank, n_max);
    const std::size_t n = static_cast<std::size_t>(2 * n_max + 1);

    // Real symmetric embedding [[Re, -Im], [Im, Re]]; eigenvalues appear twice.
    const std::size_t n2 = 2 * n;
    std::vector<double> s(n2 * n2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cdouble v = g[i * n + j];
            s[i * n2 + j] = v.real();
            s[i * n2 + (j + n)] = -v.imag();
            s[(i + n) * n2 + j] = v.imag();
            s[(i + n) * n2 + (j + n)] = v.real();
        }
    }
    const std::vector<double> doubled = symmetric_eigenvalues(std::move(s), n2);

    RieszEstimate est;
    est.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        est.eigenvalues[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    est.lower = est.eigenvalues.front();
    est.upper = est.eigenvalues.back();

    if (!(est.lower > 0.0)) {
        std::string msg = "riesz_bounds_estimate: Gram section not positive definite; eigenvalues:";
        for (double e : est.eigenvalues) msg += " " + std::to_string(e);
        throw DiagnosticError(msg);
    }
    return est;
}

} // namespace pw
