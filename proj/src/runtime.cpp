#include "pwapprox/runtime.hpp"

#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace pw::runtime {

namespace {
int g_threads = 1;
}

int threads() { return g_threads; }

void set_threads(int n) {
    g_threads = n < 1 ? 1 : n;
#if defined(_OPENMP)
    omp_set_num_threads(g_threads);
#endif
}

void configure_threads_from_env() {
    int n = 1;
    if (const char* env = std::getenv("PWAPPROX_THREADS")) {
        try {
            n = std::stoi(env);
        } catch (...) {
            n = 1;
        }
    }
    set_threads(n);
}

} // namespace pw::runtime
