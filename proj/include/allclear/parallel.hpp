#pragma once

#include <atomic>
#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace allclear::par {

// 0 = OpenMP default, 1 = serial, n > 1 = explicit team size.
inline std::atomic<int>& thread_setting() {
    static std::atomic<int> value{0};
    return value;
}

inline void set_threads(int n) { thread_setting().store(n < 0 ? 0 : n); }

inline int max_threads() {
#ifdef _OPENMP
    const int n = thread_setting().load();
    return n == 0 ? omp_get_max_threads() : n;
#else
    return 1;
#endif
}

// Runs body(i) for i in [0, n). Every iteration must write only to its own
// output slot; results are then identical to the serial loop by construction.
// The first-by-index exception is rethrown after the loop completes.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
#ifdef _OPENMP
    if (max_threads() > 1 && n > 1) {
        std::exception_ptr error = nullptr;
        std::size_t error_index = n;
        const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
        for (long long i = 0; i < count; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(allclear_parallel_for_error)
                {
                    if (static_cast<std::size_t>(i) < error_index) {
                        error_index = static_cast<std::size_t>(i);
                        error = std::current_exception();
                    }
                }
            }
        }
        if (error) std::rethrow_exception(error);
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace allclear::par
