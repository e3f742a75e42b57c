#pragma once

#include <cstdint>

namespace pw::kernels {

// Execution lane for the data-parallel kernels. The parallel lane runs the
// same per-slot code under OpenMP with static scheduling; every slot is
// written by exactly one worker, so results are identical to the serial lane
// bit for bit, regardless of thread count.
enum class Exec { parallel, serial };

template <class F>
void run(Exec exec, std::int64_t n, F&& body) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) body(i);
    } else {
        for (std::int64_t i = 0; i < n; ++i) body(i);
    }
}

} // namespace pw::kernels
