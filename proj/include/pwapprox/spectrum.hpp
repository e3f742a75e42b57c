#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "pwapprox/errors.hpp"
#include "pwapprox/grid.hpp"

namespace pw {

using cdouble = std::complex<double>;

// Frequency-domain signal on a SpectralGrid with a declared band [-sigma, sigma].
// Values are stored densely over the whole grid; nodes outside the band are zero.
struct Spectrum {
    SpectralGrid grid;
    std::vector<cdouble> values;
    double band; // sigma in (0, pi]

    Spectrum(SpectralGrid g, std::vector<cdouble> v, double sigma)
        : grid(g), values(std::move(v)), band(sigma) {
        if (!(band > 0.0) || band > kPi + 1e-15)
            throw InputError("Spectrum: band must lie in (0, pi]");
        if (values.size() != grid.size())
            throw InputError("Spectrum: value count does not match grid");
        for (std::size_t m = 0; m < values.size(); ++m) {
            if (!std::isfinite(values[m].real()) || !std::isfinite(values[m].imag()))
                throw InputError("Spectrum: non-finite value at node " + std::to_string(m));
            if (std::abs(grid.node(m)) > band + 1e-12 && values[m] != cdouble{0.0, 0.0})
                throw InputError("Spectrum: nonzero value outside declared band at node " +
                                 std::to_string(m));
        }
    }

    static Spectrum zero(SpectralGrid g, double sigma = kPi) {
        return Spectrum(g, std::vector<cdouble>(g.size(), cdouble{0.0, 0.0}), sigma);
    }
};

// Bounded frequency response of a stable LTI system on the same grid.
struct TransferFunction {
    SpectralGrid grid;
    std::vector<cdouble> values;
    double sup_norm; // max modulus over nodes

    TransferFunction(SpectralGrid g, std::vector<cdouble> v)
        : grid(g), values(std::move(v)), sup_norm(0.0) {
        if (values.size() != grid.size())
            throw InputError("TransferFunction: value count does not match grid");
        for (std::size_t m = 0; m < values.size(); ++m) {
            if (!std::isfinite(values[m].real()) || !std::isfinite(values[m].imag()))
                throw InputError("TransferFunction: non-finite value at node " + std::to_string(m));
            sup_norm = std::max(sup_norm, std::abs(values[m]));
        }
    }

    // For constructions that are unimodular by design the caller may pin the norm.
    TransferFunction(SpectralGrid g, std::vector<cdouble> v, double pinned_sup_norm)
        : TransferFunction(g, std::move(v)) {
        sup_norm = pinned_sup_norm;
    }
};

} // namespace pw
