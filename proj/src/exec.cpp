#include "groth/exec.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>

namespace groth {

int thread_budget() {
    int def = omp_get_max_threads();
    if (const char* env = std::getenv("GROTH_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
    return def;
}

}  // namespace groth
