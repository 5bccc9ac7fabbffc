#include <doctest.h>

#include <atomic>
#include <random>
#include <stdexcept>

#include "sstar/capelli.hpp"
#include "sstar/parallel.hpp"
#include "sstar/suites.hpp"

using namespace sstar;

TEST_CASE("worker count is positive") { CHECK(worker_count() >= 1); }

TEST_CASE("every index runs once") {
    std::vector<std::atomic<int>> hits(500);
    for_each_index(hits.size(), [&](std::size_t i) { hits[i]++; }, ExecMode::Parallel);
    for (auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("the first failing index wins") {
    try {
        for_each_index(
            100,
            [](std::size_t i) {
                if (i == 17 || i == 60) throw std::runtime_error("at " + std::to_string(i));
            },
            ExecMode::Parallel);
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "at 17");
    }
}

TEST_CASE("serial and parallel evaluation grids agree") {
    std::mt19937_64 rng(9);
    std::vector<EvalPoint> pts;
    for (int r = 0; r < 10; ++r)
        pts.push_back(EvalPoint({Rational(static_cast<long>(rng() % 200) - 100, 7), Rational(static_cast<long>(rng() % 200) - 100, 11),
                                 Rational(static_cast<long>(rng() % 200) - 100, 13)}));
    auto mus = partitions_up_to(4, 3);
    auto a = eval_grid(mus, pts, Engine::Det, ExecMode::Serial);
    CHECK(a == eval_grid(mus, pts, Engine::Det, ExecMode::Parallel));
    CHECK(a == eval_grid(mus, pts, Engine::Comb, ExecMode::Serial));
    CHECK(a == eval_grid(mus, pts, Engine::Comb, ExecMode::Parallel));
}

TEST_CASE("serial and parallel operator kernels agree") {
    CHECK(capelli_operator({2, 1}, 2, 3, ExecMode::Serial) == capelli_operator({2, 1}, 2, 3, ExecMode::Parallel));
    CHECK(schur_weyl_lhs(2, 3, {2}, ExecMode::Serial) == schur_weyl_lhs(2, 3, {2}, ExecMode::Parallel));
}

TEST_CASE("oracle values") {
    auto at = partitions_up_to(4);
    auto f = [](const Partition& p) { return Rational(p.size() * 2 + p.length()); };
    CHECK(oracle_values(at, f, ExecMode::Serial) == oracle_values(at, f, ExecMode::Parallel));
}

TEST_CASE("suites are seed-deterministic and idempotent") {
    const SuiteInfo* s = find_suite("series");
    REQUIRE(s != nullptr);
    SuiteOptions o{4, 123};
    auto a = s->run(o), b = s->run(o);
    CHECK(a.ok());
    CHECK(a.cases == b.cases);
    CHECK(a.seed == 123);
    CHECK(find_suite("missing") == nullptr);
    std::vector<std::string> order = {"arith", "partitions", "eval", "lambda_star", "characters", "capelli"};
    std::size_t pos = 0;
    for (const auto& info : all_suites()) {
        while (pos < order.size() && order[pos] != info.layer) ++pos;
        CHECK(pos < order.size());
    }
}
