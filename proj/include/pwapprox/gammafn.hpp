#pragma once

#include <complex>

namespace pw {

// Principal log-gamma via the Stirling series. Intended for arguments far in
// the right half-plane (Re w >= 16); accuracy there is a few ulp. The
// generating-function tail only ever needs w >= N_prod/2 + 1.
std::complex<double> log_gamma_right(std::complex<double> w);

} // namespace pw
