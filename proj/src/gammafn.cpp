#include "pwapprox/gammafn.hpp"

#include <cmath>

#include "pwapprox/errors.hpp"

namespace pw {

std::complex<double> log_gamma_right(std::complex<double> w) {
    if (w.real() < 16.0)
        throw InputError("log_gamma_right: argument must satisfy Re w >= 16");

    // B_{2n} / (2n (2n-1))
    static constexpr double kCoeff[] = {
        1.0 / 12.0,   -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
        1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,
    };
    static constexpr double kHalfLogTwoPi = 0.91893853320467274178;

    const std::complex<double> lw = std::log(w);
    std::complex<double> r = (w - 0.5) * lw - w + kHalfLogTwoPi;
    const std::complex<double> inv = 1.0 / w;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> p = inv;
    for (double c : kCoeff) {
        r += c * p;
        p *= inv2;
    }
    return r;
}

} // namespace pw
