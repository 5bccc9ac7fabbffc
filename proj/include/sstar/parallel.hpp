#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

#include "sstar/partition.hpp"
#include "sstar/rational.hpp"
#include "sstar/shifted_eval.hpp"

namespace sstar {

enum class ExecMode { Serial, Parallel };

// Worker count for the parallel kernels: SHIFTED_SCHUR_THREADS when set,
// otherwise the OpenMP default. Always 1 without OpenMP.
int worker_count();

// Runs body(i) for i in [0, n). Exceptions from any iteration are rethrown
// (the first one by index order is kept) after the loop finishes.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, ExecMode mode);

enum class Engine { Det, Comb };

// values[a][b] = s*_{mus[a]}(points[b]) through the chosen engine; the
// determinant route uses n = max(length(mu), number of coordinates).
std::vector<std::vector<Rational>> eval_grid(const std::vector<Partition>& mus, const std::vector<EvalPoint>& points,
                                             Engine engine, ExecMode mode = ExecMode::Parallel);

// f evaluated at each partition.
std::vector<Rational> oracle_values(const std::vector<Partition>& at, const std::function<Rational(const Partition&)>& f,
                                    ExecMode mode = ExecMode::Parallel);

}  // namespace sstar
