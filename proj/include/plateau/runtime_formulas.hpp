#pragma once

// Exact expected runtimes of the (1+1) EA on Needle and BlockLeadingOnes.
// Every quantity is assembled in the log domain so that block lengths far past
// the double-range cliff of C(l, j) (l ~ 1030) still evaluate.

#include "plateau/group_walk.hpp"
#include "plateau/problem.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace plateau {

enum class Method { ExactFourier, Asymptotic, Oracle, MonteCarlo };

[[nodiscard]] std::string_view to_string(Method method) noexcept;

/// An expected iteration count together with its base-2 logarithm.
///
/// When the value does not fit in a double, `value` is +inf, `overflow` is set and
/// `log2_value` carries the result. `std_error` is present exactly for Monte Carlo
/// estimates.
struct RuntimeEstimate {
    double value = 0.0;
    double log2_value = 0.0;
    Method method = Method::ExactFourier;
    std::optional<double> std_error;
    bool overflow = false;

    /// Build from a natural logarithm of the value.
    static RuntimeEstimate from_log(double ln_value, Method method);
};

/// ln of sum_{j=1}^{l} C(l, j) / (1 - (1-2p)^j).
[[nodiscard]] double log_needle_sum(std::uint64_t ell, MutationRate p);

/// E[T]: Needle on l bits from a uniformly random start (the optimum included).
[[nodiscard]] RuntimeEstimate needle_time_uniform_start(std::uint64_t ell, MutationRate p);

/// E[T']: Needle from a uniform start over the 2^l - 1 non-optimal strings.
[[nodiscard]] RuntimeEstimate needle_time_excluding_optimum(std::uint64_t ell, MutationRate p);

/// 1 / (1 - e^{-c}), the large-l limit of 2^{-l} E[T] under rate c/l.
[[nodiscard]] double needle_gks_limit(double c);

/// 2^{-l} E[T] at rate p = c/l. Requires c/l in (0, 1).
[[nodiscard]] double normalized_needle(std::uint64_t ell, double c);

/// E[T_k]: time to finish the next (not yet optimal) block when k leading bits are locked.
[[nodiscard]] RuntimeEstimate block_time(std::uint64_t k, std::uint64_t ell, MutationRate p);

/// E[T_k']: as block_time, but the block may already be optimal (zero steps).
[[nodiscard]] RuntimeEstimate block_time_allowing_zero(std::uint64_t k, std::uint64_t ell, MutationRate p);

/// Expected BlockLeadingOnes runtime with rate rates[m] used at fitness m.
/// Throws DomainError unless spec is BlockLeadingOnes and rates.size() == spec.levels().
[[nodiscard]] RuntimeEstimate blo_total_time(const ProblemSpec& spec, std::span<const MutationRate> rates);
[[nodiscard]] RuntimeEstimate blo_total_time(const ProblemSpec& spec, const MutationSchedule& schedule);

/// Geometric-series closed form of blo_total_time for a static rate.
[[nodiscard]] RuntimeEstimate blo_static_closed_form(const ProblemSpec& spec, MutationRate p);

/// 2^l / ((1-p)^k (1 - (1-p)^l)): plateau size over the probability of accepting a
/// move that touches the active block.
[[nodiscard]] double plateau_heuristic_time(std::uint64_t k, std::uint64_t ell, MutationRate p);

/// Exact expected runtime for whichever problem `spec` describes (Needle uses the
/// uniform-start formula). Used for simulation cross-checks.
[[nodiscard]] RuntimeEstimate exact_runtime(const ProblemSpec& spec, std::span<const MutationRate> rates);

} // namespace plateau
