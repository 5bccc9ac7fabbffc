// One PASS/FAIL line per acceptance criterion. Exact comparisons only; a
// criterion also fails when it overruns its time budget.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "sstar/parallel.hpp"
#include "sstar/suites.hpp"

using namespace sstar;

namespace {

struct Criterion {
    int id;
    const char* title;
    std::vector<const char*> suites;
    double budget_s;
};

const std::vector<Criterion> kCriteria = {
    {1, "engine equivalence", {"engines"}, 60},
    {2, "vanishing and normalization", {"vanishing"}, 30},
    {3, "skew dimension", {"skew"}, 120},
    {4, "Pieri and iterated Pieri", {"pieri"}, 60},
    {5, "binomial formula", {"binomial"}, 60},
    {6, "duality", {"duality"}, 30},
    {7, "coherence", {"coherence"}, 60},
    {8, "generating series", {"series"}, 30},
    {9, "Jacobi-Trudi", {"jt"}, 120},
    {10, "characters", {"characters"}, 60},
    {11, "Capelli eigenvalues", {"eigen", "operator-stability"}, 120},
    {12, "Schur-Weyl Capelli", {"schur-weyl"}, 180},
    {13, "special symmetrization", {"sigma"}, 120},
    {14, "Casimir", {"casimir"}, 30},
};

}  // namespace

int main() {
    SuiteOptions opts;  // default sizes and seed 42
    int failed = 0;
    std::printf("workers: %d\n", worker_count());
    for (const auto& c : kCriteria) {
        auto start = std::chrono::steady_clock::now();
        std::size_t cases = 0, failures = 0;
        std::string first;
        for (const char* name : c.suites) {
            const SuiteInfo* s = find_suite(name);
            if (!s) {
                ++failures;
                first = std::string("missing suite ") + name;
                continue;
            }
            SuiteReport r = s->run(opts);
            cases += r.cases;
            failures += r.failures.size();
            if (first.empty() && !r.failures.empty())
                first = r.failures.front().id + ": expected " + r.failures.front().expected + ", got " + r.failures.front().actual;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool over = secs > c.budget_s;
        bool ok = failures == 0 && cases > 0 && !over;
        if (!ok) ++failed;
        std::printf("%s %2d %-28s %6zu cases  %8.3f s (budget %g s)", ok ? "PASS" : "FAIL", c.id, c.title, cases, secs, c.budget_s);
        if (failures) std::printf("  %zu failures, first: %s", failures, first.c_str());
        if (over) std::printf("  over budget");
        std::printf("\n");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
    return failed == 0 ? 0 : 1;
}
