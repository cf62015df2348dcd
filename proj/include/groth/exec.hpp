#pragma once

#include <algorithm>
#include <exception>
#include <vector>

namespace groth {

// serial is the reference path kept for testing; parallel uses OpenMP.
enum class Exec { serial, parallel };

// Thread budget: GROTH_THREADS if set and positive, else the OpenMP default.
int thread_budget();

// Runs body(i) for i in [0, count) and collects the per-index results in index order.
template <class T, class F>
std::vector<T> indexed_map(int count, Exec exec, F body) {
    std::vector<T> out(static_cast<std::size_t>(std::max(count, 0)));
    if (exec == Exec::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget())
        for (int i = 0; i < count; ++i) {
            try {
                out[i] = body(i);
            } catch (...) {
#pragma omp critical(groth_indexed_map)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (int i = 0; i < count; ++i) out[i] = body(i);
    }
    return out;
}

}  // namespace groth
