#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace k3fib::cli {

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;  // empty when all checks pass

    bool passed() const { return failures == 0; }
};

struct Suite {
    std::string name;
    std::string description;
    std::function<SuiteResult()> run;
};

/// Registered property suites, in canonical order.
const std::vector<Suite>& suites();

/// nullptr when no suite has that name.
const Suite* find_suite(const std::string& name);

}  // namespace k3fib::cli
