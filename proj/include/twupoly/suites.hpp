// Named verification suites behind `check --suite NAME`: exhaustive
// small cases plus seeded random cases for each invariant family.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twupoly/field.hpp"
#include "twupoly/twuality.hpp"

namespace twupoly::suites {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string detail;  // first counterexample when failed
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool all_passed() const {
        for (const PropertyResult& p : properties) {
            if (!p.passed) return false;
        }
        return true;
    }
};

std::vector<std::string> suite_names();

/// Runs one named suite, or every suite for "all".  only_field narrows
/// the random-matrix suites to a single coefficient field.
std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed, int threads,
                                    const std::optional<Field>& only_field = std::nullopt);

}  // namespace twupoly::suites
