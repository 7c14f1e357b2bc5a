#pragma once

// The s(l) sum, the Taylor constants a and b, asymptotic runtimes, and optimal
// static / fitness-dependent mutation rates.

#include "plateau/group_walk.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plateau {

/// s(m) = sum_{j=1}^{m} (2^j - 1) / j. Overflows to +inf past m ~ 1020.
[[nodiscard]] double s_sum(std::uint64_t m);

/// s(m) * 2^{-shift}, accumulated with exact power-of-two scaling so it stays finite
/// for large m when shift ~ m.
[[nodiscard]] double scaled_s_sum(std::uint64_t m, int shift);

/// Binomial form sum_{j=1}^{m} C(m, j) / j, the independent second route to s(m).
[[nodiscard]] double s_sum_binomial(std::uint64_t m);

struct BlockConstants {
    std::uint64_t ell = 0;
    double s_ell = 0.0; ///< +inf once s(l) exceeds double range; a and b stay exact
    double a = 0.0;
    double b = 0.0;
};

[[nodiscard]] BlockConstants block_constants(std::uint64_t ell);

/// (2^l/(2^l-1)) (2^l/(1-p)^k) (b/p + a): block_time with the O(p) remainder dropped.
[[nodiscard]] double taylor_block_time(std::uint64_t k, std::uint64_t ell, MutationRate p);

struct AsymptoticValue {
    double value = 0.0;
    /// Set when l > n/10, outside the l = o(n) regime the formula describes.
    bool regime_warning = false;
};

/// (n 2^l / l) (b n / c^2 + a / c) (e^c - 1): BlockLeadingOnes at static rate c/n.
[[nodiscard]] AsymptoticValue blo_asymptotic_static(std::uint64_t n, std::uint64_t ell, double c);

enum class RateMethod { ClosedFormAsymptotic, NumericMinimization };

[[nodiscard]] std::string_view to_string(RateMethod method) noexcept;

struct OptimalRateResult {
    MutationRate rate{0.5};
    double predicted_runtime = 0.0;
    RateMethod method = RateMethod::NumericMinimization;
    /// Minimum sits on the upper end of the search interval.
    bool boundary = false;
    /// Grid scan found more than one local minimum; result comes from the grid.
    bool grid_fallback = false;
    std::vector<std::string> warnings;
};

/// lambda = argmin (e^x - 1)/x^2 and alpha = the minimum value.
struct StaticOptimum {
    double lambda = 0.0;
    double alpha = 0.0;
    /// |e^lambda (lambda - 2) + 2|
    double stationarity_residual = 0.0;
};

[[nodiscard]] const StaticOptimum& static_optimum();

/// Rate lambda/n with predicted runtime optimal_static_runtime(n, l).
[[nodiscard]] OptimalRateResult optimal_static_rate(std::uint64_t n, std::uint64_t ell);

/// alpha b 2^l n^2 / l, or alpha 2^l n^2 / l^2 with large_ell_form.
[[nodiscard]] double optimal_static_runtime(std::uint64_t n, std::uint64_t ell, bool large_ell_form = false);

/// ln of the per-level objective (1-p)^{-m l} sum_j C(l,j)/(1-(1-2p)^j) = ln E[T'_{ml}].
[[nodiscard]] double log_level_objective(std::uint64_t m, std::uint64_t ell, double p);

struct ClosedAdaptiveRate {
    OptimalRateResult result;
    double large_ell_form = 0.0; ///< l^{-1}(sqrt(1 + 2/m) - 1)
    double large_m_form = 0.0;   ///< 1/k
    double scaled_rate = 0.0;    ///< p~(k) = rate * k
};

/// p~(k)/k with p~(k) = (bk/2a)(-1 + sqrt(1 + 4a/(bk))), k = m l. Requires m >= 1.
[[nodiscard]] ClosedAdaptiveRate optimal_adaptive_rate_closed(std::uint64_t m, std::uint64_t ell);

struct ExactRateOptions {
    /// Also scan (0.5, 1) on a dense grid and report (as a warning) if it beats the result.
    bool audit_upper_half = false;
};

/// Minimizes log_level_objective over p in (1e-9, 0.5].
[[nodiscard]] OptimalRateResult optimal_adaptive_rate_exact(std::uint64_t m, std::uint64_t ell,
                                                           ExactRateOptions options = {});

/// (e/2) b 2^l n^2 / l.
[[nodiscard]] double optimal_adaptive_runtime(std::uint64_t n, std::uint64_t ell);

/// 2^l e (b k + a): asymptotic minimum over p of E[T'_k].
[[nodiscard]] double adaptive_block_runtime(std::uint64_t k, std::uint64_t ell);

/// f(m) = alpha 2^m / m^2.
[[nodiscard]] double growth_function(double m);

/// Inverse of growth_function on its increasing branch m > 2/ln 2.
[[nodiscard]] double invert_growth(double y);

/// s(m) >= (2^{m+1}/m)(1 + 1/(m-1)), decided exactly. Requires m >= 2.
[[nodiscard]] bool s_sum_lower_bound_holds(std::uint64_t m);

/// s(m) <= (2^{m+1}/m)(1 + c/m), decided exactly with c rounded to 1e-3.
[[nodiscard]] bool s_sum_upper_bound_holds(std::uint64_t m, double c);

struct InequalityInstance {
    std::string check;
    std::string instance;
    bool passed = false;
};

struct InequalityReport {
    std::vector<InequalityInstance> instances;
    /// Smallest m0 with s(m) <= (2^{m+1}/m)(1 + 1.1/m) for every m in [m0, upper_m].
    std::optional<std::uint64_t> upper_bound_m0;
    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] std::size_t failures() const;
};

struct InequalityRanges {
    std::uint64_t exp_ineq_max_m = 64;
    std::uint64_t bounding_sum_max_ell = 60;
    std::uint64_t s_bound_min_m = 7;
    std::uint64_t s_bound_max_m = 60;
    double s_bound_upper_c = 1.1;
    double central_alpha = 0.3;
    std::uint64_t central_ell = 2000;
    double central_mass_floor = 0.99;
    std::uint64_t dual_form_max_m = 40;
};

/// Checks the supporting binomial / s(m) inequalities over the configured ranges.
/// Integer inequalities are decided in exact arbitrary-precision arithmetic.
[[nodiscard]] InequalityReport binomial_inequality_suite(const InequalityRanges& ranges = {});

} // namespace plateau
