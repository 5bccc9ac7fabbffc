#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sstar {

struct CaseFailure {
    std::size_t index = 0;
    std::string id;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    std::vector<CaseFailure> failures;  // sorted by case index
    double elapsed_s = 0;
    std::uint64_t seed = 42;

    bool ok() const { return failures.empty(); }
    std::string summary() const;
    std::string to_json() const;
};

struct SuiteOptions {
    int max_size = 0;  // 0: the suite's own default
    std::uint64_t seed = 42;
};

struct SuiteInfo {
    std::string name;
    std::string layer;  // arith, partitions, eval, lambda_star, characters, capelli
    std::string summary;
    std::function<SuiteReport(const SuiteOptions&)> run;
};

// Registered suites in dependency order.
const std::vector<SuiteInfo>& all_suites();
const SuiteInfo* find_suite(const std::string& name);

}  // namespace sstar
