#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include "teich/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace teich {

// Worker-count policy for the OpenMP kernels. threads == 0 means the OpenMP
// default. Results are bit-identical for every thread count: kernels only
// fill independent slots and reductions run serially in canonical order.
struct ExecPolicy {
    int threads = 0;
};

namespace detail {

template <typename Body>
void parallelFor(std::size_t n, const ExecPolicy& policy, Body&& body) {
    std::vector<std::exception_ptr> errors(n);
    bool failed = false;
#if defined(_OPENMP)
    int nt = policy.threads > 0 ? policy.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
#pragma omp atomic write
            failed = true;
        }
    }
#else
    (void)policy;
    for (std::size_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            errors[i] = std::current_exception();
            failed = true;
        }
    }
#endif
    if (failed)
        for (std::size_t i = 0; i < n; ++i)
            if (errors[i]) std::rethrow_exception(errors[i]); // lowest index wins
}

} // namespace detail
} // namespace teich
