#pragma once

#include <cstddef>
#include <numbers>

#include "pwapprox/errors.hpp"

namespace pw {

inline constexpr double kPi = std::numbers::pi_v<double>;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Uniform frequency grid on [-pi, pi): node m sits at -pi + 2*pi*m/M.
// M is a power of two so that dyadic step functions are resolved exactly.
class SpectralGrid {
public:
    explicit SpectralGrid(std::size_t node_count) : m_(node_count) {
        if (m_ < 2 || (m_ & (m_ - 1)) != 0)
            throw InputError("SpectralGrid: node count must be a power of two >= 2, got " +
                             std::to_string(m_));
    }

    std::size_t size() const noexcept { return m_; }
    double spacing() const noexcept { return kTwoPi / static_cast<double>(m_); }

    double node(std::size_t m) const noexcept {
        return -kPi + kTwoPi * static_cast<double>(m) / static_cast<double>(m_);
    }

    // Position of node m inside [0, 1); exact dyadic rational m/M.
    double unit_position(std::size_t m) const noexcept {
        return static_cast<double>(m) / static_cast<double>(m_);
    }

    // Largest dyadic level fully resolved by this grid (M = 2^level).
    int level() const noexcept {
        int l = 0;
        for (std::size_t v = m_; v > 1; v >>= 1) ++l;
        return l;
    }

    bool operator==(const SpectralGrid& other) const noexcept { return m_ == other.m_; }

private:
    std::size_t m_;
};

} // namespace pw
