#include "sstar/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sstar {

int worker_count() {
#ifdef _OPENMP
    if (const char* env = std::getenv("SHIFTED_SCHUR_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (const std::exception&) {
        }
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, ExecMode mode) {
    if (mode == ExecMode::Serial || n < 2 || worker_count() == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
#ifdef _OPENMP
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
#else
    for (std::size_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
#endif
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<std::vector<Rational>> eval_grid(const std::vector<Partition>& mus, const std::vector<EvalPoint>& points,
                                             Engine engine, ExecMode mode) {
    std::vector<std::vector<Rational>> out(mus.size(), std::vector<Rational>(points.size()));
    const std::size_t cols = points.size();
    for_each_index(
        mus.size() * cols,
        [&](std::size_t idx) {
            const auto& mu = mus[idx / cols];
            const auto& x = points[idx % cols];
            out[idx / cols][idx % cols] = engine == Engine::Det ? sstar_det(mu, x) : sstar_comb(mu, x);
        },
        mode);
    return out;
}

std::vector<Rational> oracle_values(const std::vector<Partition>& at, const std::function<Rational(const Partition&)>& f,
                                    ExecMode mode) {
    std::vector<Rational> out(at.size());
    for_each_index(at.size(), [&](std::size_t i) { out[i] = f(at[i]); }, mode);
    return out;
}

}  // namespace sstar
