#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twinlcs {

struct SuiteCheck {
    std::string name;
    bool passed = false;
    std::uint64_t cases = 0;
    /// First counterexample or a summary line.
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;
    bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Runs one of suite_names(); throws `std::invalid_argument` otherwise.
SuiteReport verify_suite(std::string_view name, std::uint64_t seed = 1);

} // namespace twinlcs
