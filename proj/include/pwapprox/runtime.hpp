#pragma once

namespace pw::runtime {

// Worker count used by the OpenMP kernels. Defaults to 1 until configured.
int threads();
void set_threads(int n);

// Reads PWAPPROX_THREADS (default 1) and applies it.
void configure_threads_from_env();

} // namespace pw::runtime
