#include "pwapprox/signals.hpp"

#include <cmath>

#include "pwapprox/rng.hpp"

namespace pw {

Spectrum make_constant(const SpectralGrid& grid) {
    return Spectrum(grid, std::vector<cdouble>(grid.size(), cdouble{1.0, 0.0}), kPi);
}

Spectrum make_triangle(const SpectralGrid& grid, double sigma) {
    if (!(sigma > 0.0) || sigma > kPi + 1e-15)
        throw InputError("make_triangle: sigma must lie in (0, pi]");
    std::vector<cdouble> v(grid.size());
    for (std::size_t m = 0; m < v.size(); ++m) {
        const double a = 1.0 - std::abs(grid.node(m)) / sigma;
        v[m] = cdouble{a > 0.0 ? a : 0.0, 0.0};
    }
    return Spectrum(grid, std::move(v), sigma);
}

Spectrum make_bandlimited_random(const SpectralGrid& grid, std::uint64_t seed, double sigma) {
    if (!(sigma > 0.0) || sigma > kPi + 1e-15)
        throw InputError("make_bandlimited_random: sigma must lie in (0, pi]");
    std::vector<cdouble> v(grid.size());
    for (std::size_t m = 0; m < v.size(); ++m) {
        if (std::abs(grid.node(m)) <= sigma) {
            v[m] = cdouble{keyed_symmetric(seed, static_cast<std::int64_t>(2 * m)),
                           keyed_symmetric(seed, static_cast<std::int64_t>(2 * m + 1))};
        }
    }
    return Spectrum(grid, std::move(v), sigma);
}

cdouble smooth_random_value(std::uint64_t seed, double sigma, int degree, double omega) {
    const double u = omega / sigma;
    if (!(std::abs(u) < 1.0)) return cdouble{0.0, 0.0};
    const double taper = std::exp(1.0 - 1.0 / (1.0 - u * u));
    cdouble p{0.0, 0.0};
    for (int j = 0; j <= degree; ++j) {
        const cdouble cj{keyed_symmetric(seed, 4 * j), keyed_symmetric(seed, 4 * j + 1)};
        const cdouble dj{keyed_symmetric(seed, 4 * j + 2), keyed_symmetric(seed, 4 * j + 3)};
        const double arg = static_cast<double>(j) * kPi * u;
        p += cj * std::cos(arg) + dj * std::sin(arg);
    }
    return taper * p;
}

Spectrum make_smooth_random(const SpectralGrid& grid, std::uint64_t seed, double sigma,
                            int degree) {
    if (!(sigma > 0.0) || sigma > kPi + 1e-15)
        throw InputError("make_smooth_random: sigma must lie in (0, pi]");
    std::vector<cdouble> v(grid.size());
    for (std::size_t m = 0; m < v.size(); ++m)
        v[m] = smooth_random_value(seed, sigma, degree, grid.node(m));
    return Spectrum(grid, std::move(v), sigma);
}

} // namespace pw
