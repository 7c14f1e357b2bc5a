#pragma once

#include "plateau/bitstring.hpp"
#include "plateau/group_walk.hpp"

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

namespace plateau {

enum class ProblemKind { Needle, BlockLeadingOnes };

[[nodiscard]] std::string_view to_string(ProblemKind kind) noexcept;

/// Problem instance. Needle is represented as a single block covering the whole string.
class ProblemSpec {
public:
    static ProblemSpec needle(std::size_t ell);
    static ProblemSpec block_leading_ones(std::size_t n, std::size_t ell);

    [[nodiscard]] ProblemKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t ell() const noexcept { return ell_; }
    /// Number of fitness levels below the optimum, n / l.
    [[nodiscard]] std::size_t levels() const noexcept { return n_ / ell_; }

    /// floor(LO(x) / l); for Needle this is 1 at the optimum and 0 elsewhere.
    [[nodiscard]] std::size_t fitness(const BitString& x) const;

private:
    ProblemSpec(ProblemKind kind, std::size_t n, std::size_t ell);

    ProblemKind kind_;
    std::size_t n_;
    std::size_t ell_;
};

/// Mutation rate as a function of the current fitness level.
class MutationSchedule {
public:
    struct Static {
        MutationRate rate;
    };
    struct Table {
        std::vector<MutationRate> rates;
    };
    /// Per-level numerically optimal rate (see optimal_adaptive_rate_exact).
    struct AdaptiveOptimal {};

    static MutationSchedule static_rate(MutationRate p) { return MutationSchedule(Static{p}); }
    static MutationSchedule table(std::vector<MutationRate> rates) {
        return MutationSchedule(Table{std::move(rates)});
    }
    static MutationSchedule adaptive_optimal() { return MutationSchedule(AdaptiveOptimal{}); }

    [[nodiscard]] const auto& variant() const noexcept { return variant_; }
    [[nodiscard]] bool is_static() const noexcept { return std::holds_alternative<Static>(variant_); }

    /// One rate per fitness level 0 .. spec.levels()-1. Throws DomainError on a table
    /// whose length differs from spec.levels().
    [[nodiscard]] std::vector<MutationRate> resolve(const ProblemSpec& spec) const;

private:
    explicit MutationSchedule(std::variant<Static, Table, AdaptiveOptimal> v) : variant_(std::move(v)) {}

    std::variant<Static, Table, AdaptiveOptimal> variant_;
};

} // namespace plateau
