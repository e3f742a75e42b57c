#include "pwapprox/walsh.hpp"

#include <cmath>

#include "pwapprox/kernels.hpp"
#include "pwapprox/spectral_ops.hpp"

namespace pw {

int walsh(unsigned k, double x) {
    if (!(x >= 0.0 && x < 1.0)) throw InputError("walsh: x must lie in [0, 1)");
    int sign = 1;
    double y = x;
    while (k != 0) {
        y += y;             // exact: scaling by 2
        const bool bit = y >= 1.0;
        if (bit) y -= 1.0;  // exact for y in [1, 2)
        if ((k & 1u) && bit) sign = -sign;
        k >>= 1;
    }
    return sign;
}

double theta_hat(unsigned k, double omega) {
    if (!(omega >= -kPi && omega < kPi)) throw InputError("theta_hat: omega must lie in [-pi, pi)");
    double x = (omega + kPi) / kTwoPi;
    if (x < 0.0) x = 0.0;
    if (x >= 1.0) x = std::nextafter(1.0, 0.0);
    return static_cast<double>(walsh(k, x));
}

int walsh_at_node(unsigned k, const SpectralGrid& grid, std::size_t m) {
    return walsh(k, grid.unit_position(m));
}

double dyadic_midpoint_integral(int level, const std::function<double(double)>& f) {
    if (level < 0 || level > 30) throw InputError("dyadic_midpoint_integral: bad level");
    const std::uint64_t cells = 1ULL << level;
    const double w = 1.0 / static_cast<double>(cells);
    double acc = 0.0;
    for (std::uint64_t j = 0; j < cells; ++j)
        acc += f((static_cast<double>(j) + 0.5) * w);
    return acc * w;
}

namespace {
int required_level(unsigned max_index) {
    int level = 0;
    while ((1u << level) <= max_index) ++level;
    return level;
}
} // namespace

WalshSystem::WalshSystem(SpectralGrid grid, unsigned max_index)
    : grid_(grid), max_index_(max_index), level_(required_level(max_index)) {
    if (grid_.level() < level_)
        throw ConfigError("WalshSystem: grid resolves level " + std::to_string(grid_.level()) +
                          " but index " + std::to_string(max_index_) + " needs level " +
                          std::to_string(level_));
    const std::size_t M = grid_.size();
    table_.resize((static_cast<std::size_t>(max_index_) + 1) * M);
    kernels::run(kernels::Exec::parallel, static_cast<std::int64_t>(max_index_) + 1,
                 [&](std::int64_t k) {
                     std::int8_t* out = table_.data() + static_cast<std::size_t>(k) * M;
                     for (std::size_t m = 0; m < M; ++m)
                         out[m] = static_cast<std::int8_t>(
                             walsh(static_cast<unsigned>(k), grid_.unit_position(m)));
                 });
}

const std::int8_t* WalshSystem::row(unsigned k) const {
    if (k > max_index_) throw RangeError("WalshSystem: index exceeds max_index");
    return table_.data() + static_cast<std::size_t>(k) * grid_.size();
}

cdouble measure_c(const Spectrum& f, const WalshSystem& sys, unsigned k, double t) {
    if (!(f.grid == sys.grid())) throw InputError("measure_c: grid mismatch");
    if (!std::isfinite(t)) throw InputError("measure_c: t must be finite");
    const std::int8_t* theta = sys.row(k);
    const std::size_t M = f.grid.size();
    std::vector<cdouble> phase(M);
    phase_row(f.grid, t, phase);
    cdouble acc{0.0, 0.0};
    for (std::size_t m = 0; m < M; ++m) {
        const cdouble term = f.values[m] * phase[m];
        acc += theta[m] < 0 ? -term : term;
    }
    return acc / static_cast<double>(M);
}

MeasurementSystem MeasurementSystem::make_walsh(const SpectralGrid& grid, unsigned max_index) {
    WalshSystem table(grid, max_index);
    MeasurementSystem sys(MeasurementKind::walsh, grid);
    const std::size_t M = grid.size();
    for (unsigned k = 0; k <= max_index; ++k) {
        std::vector<cdouble> row(M);
        const std::int8_t* r = table.row(k);
        for (std::size_t m = 0; m < M; ++m) row[m] = cdouble{static_cast<double>(r[m]), 0.0};
        sys.rows_.push_back(std::move(row));
        sys.labels_.push_back(static_cast<long>(k));
    }
    return sys;
}

MeasurementSystem MeasurementSystem::make_fourier(const SpectralGrid& grid, int n_min, int n_max) {
    if (n_min > n_max) throw InputError("make_fourier: empty exponent range");
    MeasurementSystem sys(MeasurementKind::fourier_exponentials, grid);
    const std::size_t M = grid.size();
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<cdouble> row(M);
        for (std::size_t m = 0; m < M; ++m) {
            const double ph = grid.node(m) * static_cast<double>(n);
            row[m] = cdouble{std::cos(ph), std::sin(ph)};
        }
        sys.rows_.push_back(std::move(row));
        sys.labels_.push_back(n);
    }
    return sys;
}

MeasurementSystem MeasurementSystem::make_custom(const SpectralGrid& grid,
                                                 std::vector<std::vector<cdouble>> rows,
                                                 std::vector<long> labels) {
    if (rows.size() != labels.size()) throw InputError("make_custom: rows/labels size mismatch");
    for (const auto& r : rows)
        if (r.size() != grid.size()) throw InputError("make_custom: row length mismatch");
    MeasurementSystem sys(MeasurementKind::custom, grid);
    sys.rows_ = std::move(rows);
    sys.labels_ = std::move(labels);
    return sys;
}

double MeasurementSystem::uniform_sup_bound() const {
    double b = 0.0;
    for (const auto& row : rows_)
        for (const cdouble& v : row) b = std::max(b, std::abs(v));
    return b;
}

double MeasurementSystem::orthonormality_defect() const {
    const std::size_t M = grid_.size();
    double worst = 0.0;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        for (std::size_t k = j; k < rows_.size(); ++k) {
            cdouble acc{0.0, 0.0};
            for (std::size_t m = 0; m < M; ++m) acc += rows_[j][m] * std::conj(rows_[k][m]);
            acc /= static_cast<double>(M);
            const double target = j == k ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(acc - cdouble{target, 0.0}));
        }
    }
    return worst;
}

cdouble measure_general(const Spectrum& f, const MeasurementSystem& sys, std::size_t n) {
    if (!(f.grid == sys.grid())) throw InputError("measure_general: grid mismatch");
    if (n >= sys.size()) throw RangeError("measure_general: row index out of range");
    const std::vector<cdouble>& theta = sys.row(n);
    const std::size_t M = f.grid.size();
    cdouble acc{0.0, 0.0};
    for (std::size_t m = 0; m < M; ++m) acc += f.values[m] * std::conj(theta[m]);
    return acc / static_cast<double>(M);
}

} // namespace pw
