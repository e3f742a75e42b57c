#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pwapprox/spectrum.hpp"

namespace pw {

// Walsh-Paley function w_k on [0, 1): with k = sum_j k_j 2^j and
// x = sum_j b_j 2^{-(j+1)}, returns (-1)^{sum_j k_j b_j}. Right-continuous at
// dyadic points (terminating binary expansions).
int walsh(unsigned k, double x);

// theta^_k(omega) = w_k((omega + pi) / (2 pi)) on [-pi, pi).
double theta_hat(unsigned k, double omega);

// Node-exact variant: evaluates w_k at the exact dyadic position m / M.
int walsh_at_node(unsigned k, const SpectralGrid& grid, std::size_t m);

// (1 / 2^level) * sum of f over dyadic midpoints (j + 1/2) / 2^level.
// Exact for step functions resolved at this level.
double dyadic_midpoint_integral(int level, const std::function<double(double)>& f);

// Walsh rows w_0 .. w_{max_index} tabulated as +-1 on a spectral grid.
class WalshSystem {
public:
    WalshSystem(SpectralGrid grid, unsigned max_index);

    unsigned max_index() const noexcept { return max_index_; }
    int level() const noexcept { return level_; }
    const SpectralGrid& grid() const noexcept { return grid_; }

    // Row k as +-1 entries, one per grid node.
    const std::int8_t* row(unsigned k) const;

    // sup_n ||theta^_n||_inf; equals 1 for every Walsh row.
    double uniform_sup_bound() const noexcept { return 1.0; }

private:
    SpectralGrid grid_;
    unsigned max_index_;
    int level_;
    std::vector<std::int8_t> table_; // (max_index+1) x M
};

// c_k(f, t) = (1/2pi) sum_m f^(w_m) theta^_k(w_m) e^{i w_m t} dW.
cdouble measure_c(const Spectrum& f, const WalshSystem& sys, unsigned k, double t);

enum class MeasurementKind { walsh, fourier_exponentials, custom };

// A concrete orthonormal family tabulated on the grid, with one integer label
// per row (Walsh index, or Fourier exponent).
class MeasurementSystem {
public:
    static MeasurementSystem make_walsh(const SpectralGrid& grid, unsigned max_index);
    static MeasurementSystem make_fourier(const SpectralGrid& grid, int n_min, int n_max);
    static MeasurementSystem make_custom(const SpectralGrid& grid,
                                         std::vector<std::vector<cdouble>> rows,
                                         std::vector<long> labels);

    MeasurementKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return rows_.size(); }
    long label(std::size_t n) const { return labels_.at(n); }
    const std::vector<cdouble>& row(std::size_t n) const { return rows_.at(n); }
    const SpectralGrid& grid() const noexcept { return grid_; }

    // Eq.-style uniform boundedness value: sup_n max_m |theta^_n(w_m)|.
    double uniform_sup_bound() const;

    // max_{j != k} |<theta_j, theta_k> - delta_jk| over the grid quadrature.
    double orthonormality_defect() const;

private:
    MeasurementSystem(MeasurementKind kind, SpectralGrid grid) : kind_(kind), grid_(grid) {}

    MeasurementKind kind_;
    SpectralGrid grid_;
    std::vector<long> labels_;
    std::vector<std::vector<cdouble>> rows_;
};

// c_n(f) = (1/2pi) sum_m f^(w_m) conj(theta^_n(w_m)) dW.
cdouble measure_general(const Spectrum& f, const MeasurementSystem& sys, std::size_t n);

} // namespace pw
