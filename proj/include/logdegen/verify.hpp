#pragma once
// Seeded self-check suites behind `logdegen verify`. Each suite is a fixed
// list of named properties; a property runs `trials` randomized rounds and
// reports how many failed. All randomness is derived deterministically from
// (seed, suite, property, round), so a report is reproducible from its
// command line.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace logdegen {
namespace verify {

struct PropertyResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    bool passed() const { return failures == 0; }
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;
    bool passed() const;
};

// the individual suite names, in canonical order ("all" is not listed)
std::vector<std::string> suite_names();

// throws std::invalid_argument on an unknown suite name
SuiteResult run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

// "all" expands to every suite in canonical order
std::vector<SuiteResult> run_suites(const std::string& name, std::size_t trials,
                                    std::uint64_t seed);

std::string format_results(const std::vector<SuiteResult>& results);
bool all_passed(const std::vector<SuiteResult>& results);

} // namespace verify
} // namespace logdegen
