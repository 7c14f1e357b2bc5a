#pragma once

// Cross-module consistency suites run by `plateau_rt verify`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plateau {

enum class Suite { FourierOracle, BloOracle, Inequalities, AsymptoticConvergence };

[[nodiscard]] std::string_view to_string(Suite suite) noexcept;
[[nodiscard]] std::optional<Suite> parse_suite(std::string_view name) noexcept;

/// One compared quantity. For trend checks `value` is the latest error and
/// `reference` the previous one.
struct Check {
    std::string name;
    std::string instance;
    double value = 0.0;
    double reference = 0.0;
    double error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct SuiteReport {
    Suite suite = Suite::FourierOracle;
    std::vector<Check> checks;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::size_t failures() const;
};

[[nodiscard]] SuiteReport run_suite(Suite suite);

} // namespace plateau
