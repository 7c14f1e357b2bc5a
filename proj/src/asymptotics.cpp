#include "plateau/asymptotics.hpp"

#include "plateau/errors.hpp"
#include "plateau/numeric.hpp"
#include "plateau/runtime_formulas.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace plateau {

namespace {

constexpr double kSearchLow = 1e-9;
constexpr double kSearchHigh = 0.5;
constexpr std::size_t kGridPoints = 400;
constexpr std::size_t kDenseGridPoints = 20001;

std::vector<double> log_grid(double lo, double hi, std::size_t points)
{
    std::vector<double> grid(points);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    grid.back() = hi;
    return grid;
}

// d/dp of log_level_objective for p in (0, 0.5].
double log_level_objective_slope(std::uint64_t m, std::uint64_t ell, double p)
{
    const double q = 1.0 - 2.0 * p;
    // d/dp 1/(1-q^j) = -2 j q^{j-1} / (1-q^j)^2
    std::vector<double> slope_terms;
    std::vector<double> value_terms;
    slope_terms.reserve(ell);
    value_terms.reserve(ell);
    for (std::uint64_t j = 1; j <= ell; ++j) {
        const double lc = log_binomial(ell, j);
        const double gap = std::log(one_minus_flip_power(p, j));
        value_terms.push_back(lc - gap);
        if (j == 1) {
            slope_terms.push_back(lc - 2.0 * gap);
        } else if (q > 0.0) {
            slope_terms.push_back(lc + std::log(static_cast<double>(j)) + static_cast<double>(j - 1) * std::log(q) -
                                  2.0 * gap);
        }
    }
    const double ratio = std::exp(log_sum_exp(slope_terms) - log_sum_exp(value_terms));
    return -2.0 * ratio + static_cast<double>(m * ell) / (1.0 - p);
}

boost::multiprecision::cpp_rational exact_s_sum(std::uint64_t m)
{
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    cpp_rational total = 0;
    for (std::uint64_t j = 1; j <= m; ++j) {
        total += cpp_rational((cpp_int(1) << j) - 1, cpp_int(j));
    }
    return total;
}

std::string describe(std::initializer_list<std::pair<const char*, std::uint64_t>> fields)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : fields) {
        out << (first ? "" : ", ") << name << "=" << value;
        first = false;
    }
    return out.str();
}

} // namespace

std::string_view to_string(RateMethod method) noexcept
{
    return method == RateMethod::ClosedFormAsymptotic ? "closed-form-asymptotic" : "numeric-minimization";
}

double scaled_s_sum(std::uint64_t m, int shift)
{
    if (m == 0) {
        throw DomainError("s(m) needs m >= 1");
    }
    CompensatedSum sum;
    for (std::uint64_t j = 1; j <= m; ++j) {
        // (2^j - 1) 2^-shift = (1 - 2^-j) 2^(j - shift), safe when either factor alone would overflow
        const int e = static_cast<int>(std::min<std::uint64_t>(j, 1 << 20));
        sum.add(std::ldexp(1.0 - std::ldexp(1.0, -e), e - shift) / static_cast<double>(j));
    }
    return sum.value();
}

double s_sum(std::uint64_t m) { return scaled_s_sum(m, 0); }

double s_sum_binomial(std::uint64_t m)
{
    if (m == 0) {
        throw DomainError("s(m) needs m >= 1");
    }
    CompensatedSum sum;
    for (std::uint64_t j = 1; j <= m; ++j) {
        sum.add(std::exp(log_binomial(m, j)) / static_cast<double>(j));
    }
    return sum.value();
}

BlockConstants block_constants(std::uint64_t ell)
{
    if (ell == 0) {
        throw DomainError("block length must be at least 1");
    }
    BlockConstants out;
    out.ell = ell;
    out.s_ell = s_sum(ell);
    const int shift = static_cast<int>(std::min<std::uint64_t>(ell + 1, 1 << 20));
    out.b = scaled_s_sum(ell, shift);
    out.a = 0.5 - std::ldexp(1.0, -shift) - out.b;
    return out;
}

double taylor_block_time(std::uint64_t k, std::uint64_t ell, MutationRate p)
{
    const auto bc = block_constants(ell);
    const auto ell_d = static_cast<double>(ell);
    const double ln = -std::log1p(-std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(ell, 2000)))) +
                      ell_d * kLn2 - static_cast<double>(k) * std::log1p(-p.value()) +
                      std::log(bc.b / p.value() + bc.a);
    return std::exp(ln);
}

AsymptoticValue blo_asymptotic_static(std::uint64_t n, std::uint64_t ell, double c)
{
    if (!(c > 0.0)) {
        throw DomainError("blo_asymptotic_static: c must be positive");
    }
    if (ell == 0 || n == 0 || n % ell != 0) {
        throw DomainError("blo_asymptotic_static: l must divide n");
    }
    const auto bc = block_constants(ell);
    const auto nd = static_cast<double>(n);
    const auto ld = static_cast<double>(ell);
    AsymptoticValue out;
    out.value = (nd * std::exp2(ld) / ld) * (bc.b * nd / (c * c) + bc.a / c) * std::expm1(c);
    out.regime_warning = ell * 10 > n;
    return out;
}

const StaticOptimum& static_optimum()
{
    static const StaticOptimum optimum = [] {
        // Stationarity of (e^x - 1)/x^2: e^x (x - 2) + 2 = 0, root in (1, 2).
        const auto h = [](double x) { return std::exp(x) * (x - 2.0) + 2.0; };
        std::uintmax_t iterations = 200;
        const auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-13; };
        const auto [lo, hi] = boost::math::tools::toms748_solve(h, 1.0, 2.0, tol, iterations);
        StaticOptimum out;
        out.lambda = 0.5 * (lo + hi);
        out.alpha = std::expm1(out.lambda) / (out.lambda * out.lambda);
        out.stationarity_residual = std::abs(h(out.lambda));
        return out;
    }();
    return optimum;
}

double optimal_static_runtime(std::uint64_t n, std::uint64_t ell, bool large_ell_form)
{
    const auto bc = block_constants(ell);
    const auto nd = static_cast<double>(n);
    const auto ld = static_cast<double>(ell);
    const double alpha = static_optimum().alpha;
    if (large_ell_form) {
        return alpha * std::exp2(ld) * nd * nd / (ld * ld);
    }
    return alpha * bc.b * std::exp2(ld) * nd * nd / ld;
}

OptimalRateResult optimal_static_rate(std::uint64_t n, std::uint64_t ell)
{
    const double lambda = static_optimum().lambda;
    if (static_cast<double>(n) <= lambda) {
        throw DomainError("optimal_static_rate: n must exceed lambda so that lambda/n < 1");
    }
    OptimalRateResult out;
    out.rate = MutationRate{lambda / static_cast<double>(n)};
    out.predicted_runtime = optimal_static_runtime(n, ell);
    out.method = RateMethod::ClosedFormAsymptotic;
    if (ell * 10 > n) {
        out.warnings.emplace_back("l > n/10: outside the l = o(n) regime");
    }
    return out;
}

double log_level_objective(std::uint64_t m, std::uint64_t ell, double p)
{
    const MutationRate rate{p};
    return log_needle_sum(ell, rate) - static_cast<double>(m * ell) * std::log1p(-p);
}

ClosedAdaptiveRate optimal_adaptive_rate_closed(std::uint64_t m, std::uint64_t ell)
{
    if (m == 0) {
        throw DomainError("closed-form adaptive rate needs m >= 1 (no interior optimum at m = 0)");
    }
    const auto bc = block_constants(ell);
    const auto k = static_cast<double>(m * ell);
    const double beta = bc.b * k;
    // (bk/2a)(-1 + sqrt(1 + 4a/(bk))), rationalized so a = 0 (l = 1) is exact.
    const double scaled = 2.0 * beta / (beta + std::sqrt(beta * beta + 4.0 * bc.a * beta));

    ClosedAdaptiveRate out;
    out.scaled_rate = scaled;
    out.large_ell_form = (std::sqrt(1.0 + 2.0 / static_cast<double>(m)) - 1.0) / static_cast<double>(ell);
    out.large_m_form = 1.0 / k;
    out.result.method = RateMethod::ClosedFormAsymptotic;
    double rate = scaled / k;
    if (rate > kSearchHigh) {
        out.result.boundary = true;
        out.result.warnings.emplace_back("closed-form rate " + std::to_string(rate) + " clamped to 0.5");
        rate = kSearchHigh;
    }
    out.result.rate = MutationRate{rate};
    out.result.predicted_runtime = std::exp(log_level_objective(m, ell, rate));
    return out;
}

OptimalRateResult optimal_adaptive_rate_exact(std::uint64_t m, std::uint64_t ell, ExactRateOptions options)
{
    if (ell == 0) {
        throw DomainError("block length must be at least 1");
    }
    const auto objective = [&](double p) { return log_level_objective(m, ell, p); };

    const auto grid = log_grid(kSearchLow, kSearchHigh, kGridPoints);
    std::vector<double> values(grid.size());
    std::transform(grid.begin(), grid.end(), values.begin(), objective);

    std::size_t best = 0;
    std::size_t local_minima = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (values[i] < values[best]) {
            best = i;
        }
        const bool below_left = i == 0 || values[i] < values[i - 1];
        const bool below_right = i + 1 == grid.size() || values[i] < values[i + 1];
        if (below_left && below_right) {
            ++local_minima;
        }
    }

    OptimalRateResult out;
    out.method = RateMethod::NumericMinimization;
    double rate = grid[best];

    if (local_minima > 1) {
        out.grid_fallback = true;
        out.warnings.emplace_back("objective is not unimodal on the search grid; using a dense grid scan");
        const auto dense = log_grid(kSearchLow, kSearchHigh, kDenseGridPoints);
        double best_value = std::numeric_limits<double>::infinity();
        for (double p : dense) {
            if (const double v = objective(p); v < best_value) {
                best_value = v;
                rate = p;
            }
        }
    } else if (best + 1 == grid.size()) {
        out.boundary = true;
        rate = kSearchHigh;
    } else {
        const double lo = grid[best == 0 ? 0 : best - 1];
        const double hi = grid[best + 1];
        const auto slope = [&](double p) { return log_level_objective_slope(m, ell, p); };
        const double slope_lo = slope(lo);
        const double slope_hi = slope(hi);
        if (slope_lo < 0.0 && slope_hi > 0.0) {
            std::uintmax_t iterations = 200;
            const auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-14 * std::max(1.0, std::abs(a)); };
            const auto [a, b] = boost::math::tools::toms748_solve(slope, lo, hi, slope_lo, slope_hi, tol, iterations);
            rate = 0.5 * (a + b);
        } else {
            // Slope does not change sign on the bracket; fall back to derivative-free search.
            std::uintmax_t iterations = 500;
            rate = boost::math::tools::brent_find_minima(objective, lo, hi, 26, iterations).first;
        }
    }

    if (options.audit_upper_half) {
        const double here = objective(rate);
        for (std::size_t i = 1; i < 2000; ++i) {
            const double p = 0.5 + 0.5 * static_cast<double>(i) / 2000.0;
            if (objective(p) < here) {
                out.warnings.emplace_back("audit: rate " + std::to_string(p) + " in (0.5, 1) beats the search interval");
                break;
            }
        }
    }

    out.rate = MutationRate{rate};
    out.predicted_runtime = std::exp(objective(rate));
    return out;
}

double optimal_adaptive_runtime(std::uint64_t n, std::uint64_t ell)
{
    const auto bc = block_constants(ell);
    const auto nd = static_cast<double>(n);
    const auto ld = static_cast<double>(ell);
    return 0.5 * std::numbers::e * bc.b * std::exp2(ld) * nd * nd / ld;
}

double adaptive_block_runtime(std::uint64_t k, std::uint64_t ell)
{
    const auto bc = block_constants(ell);
    return std::exp2(static_cast<double>(ell)) * std::numbers::e * (bc.b * static_cast<double>(k) + bc.a);
}

double growth_function(double m) { return static_optimum().alpha * std::exp2(m) / (m * m); }

double invert_growth(double y)
{
    const double branch_start = 2.0 / kLn2;
    if (!(y > growth_function(branch_start))) {
        throw DomainError("invert_growth: value " + std::to_string(y) + " is not above the branch minimum " +
                          std::to_string(growth_function(branch_start)));
    }
    const double log_alpha = std::log(static_optimum().alpha);
    const double log_y = std::log(y);
    const auto residual = [&](double m) { return log_alpha + m * kLn2 - 2.0 * std::log(m) - log_y; };
    double hi = branch_start + 1.0;
    while (residual(hi) < 0.0) {
        hi *= 2.0;
    }
    std::uintmax_t iterations = 200;
    const auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-13 * std::max(1.0, std::abs(a)); };
    const auto [a, b] = boost::math::tools::toms748_solve(residual, branch_start, hi, tol, iterations);
    return 0.5 * (a + b);
}

bool s_sum_lower_bound_holds(std::uint64_t m)
{
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    if (m < 2) {
        throw DomainError("lower bound needs m >= 2");
    }
    const cpp_rational f(cpp_int(1) << (m + 1), cpp_int(m));
    return exact_s_sum(m) >= f * (1 + cpp_rational(1, cpp_int(m - 1)));
}

bool s_sum_upper_bound_holds(std::uint64_t m, double c)
{
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    if (m < 1) {
        throw DomainError("upper bound needs m >= 1");
    }
    const cpp_rational cr(static_cast<long long>(std::llround(c * 1000)), 1000);
    const cpp_rational f(cpp_int(1) << (m + 1), cpp_int(m));
    return exact_s_sum(m) <= f * (1 + cr / cpp_rational(cpp_int(m)));
}

bool InequalityReport::all_passed() const { return failures() == 0; }

std::size_t InequalityReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [](const auto& i) { return !i.passed; }));
}

InequalityReport binomial_inequality_suite(const InequalityRanges& ranges)
{
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    InequalityReport report;

    for (std::uint64_t m = 0; m <= ranges.exp_ineq_max_m; ++m) {
        const cpp_int lhs = cpp_int(1) << (m + 2);
        const cpp_int rhs = cpp_int(m) * (cpp_int(m) - 1);
        report.instances.push_back({"power_of_two_vs_quadratic", describe({{"m", m}}), lhs >= rhs});
    }

    // Pascal rows in exact arithmetic.
    std::vector<cpp_int> row{1};
    for (std::uint64_t ell = 1; ell <= ranges.bounding_sum_max_ell; ++ell) {
        std::vector<cpp_int> next(ell + 1);
        next[0] = next[ell] = 1;
        for (std::uint64_t j = 1; j < ell; ++j) {
            next[j] = row[j - 1] + row[j];
        }
        row = std::move(next);
        cpp_int prefix = row[0];
        for (std::uint64_t k = 1; 2 * k < ell; ++k) {
            prefix += row[k];
            // sum_{j<=k} C(l,j) <= C(l,k) (l-k+1)/(l-2k+1)
            const bool ok = prefix * (ell - 2 * k + 1) <= row[k] * (ell - k + 1);
            report.instances.push_back({"binomial_prefix_sum_bound", describe({{"l", ell}, {"k", k}}), ok});
        }
    }

    // s(m): both routes agree, lower bound from m = 7 on, upper bound with c beyond an exhibited m0.
    std::vector<bool> upper_holds;
    for (std::uint64_t m = 1; m <= ranges.dual_form_max_m; ++m) {
        const double exact = static_cast<double>(exact_s_sum(m));
        const double alt = s_sum(m);
        const double bin = s_sum_binomial(m);
        const bool ok = std::abs(alt - bin) <= 1e-11 * exact && std::abs(alt - exact) <= 1e-12 * exact;
        report.instances.push_back({"s_sum_dual_form", describe({{"m", m}}), ok});
    }
    for (std::uint64_t m = ranges.s_bound_min_m; m <= ranges.s_bound_max_m; ++m) {
        report.instances.push_back({"s_sum_lower_bound", describe({{"m", m}}), s_sum_lower_bound_holds(m)});
        upper_holds.push_back(s_sum_upper_bound_holds(m, ranges.s_bound_upper_c));
    }
    // Largest suffix of [min_m, max_m] on which the upper bound holds.
    std::optional<std::uint64_t> m0;
    for (std::size_t i = upper_holds.size(); i-- > 0;) {
        if (!upper_holds[i]) {
            break;
        }
        m0 = ranges.s_bound_min_m + i;
    }
    report.upper_bound_m0 = m0;
    report.instances.push_back({"s_sum_upper_bound", m0 ? "holds for m in [" + std::to_string(*m0) + ", " +
                                                              std::to_string(ranges.s_bound_max_m) + "]"
                                                        : "no m0 in range",
                                m0.has_value()});

    {
        const double ell = static_cast<double>(ranges.central_ell);
        const auto lo = static_cast<std::uint64_t>(std::ceil((1.0 - ranges.central_alpha) * ell / 2.0));
        const auto hi = static_cast<std::uint64_t>(std::floor((1.0 + ranges.central_alpha) * ell / 2.0));
        std::vector<double> terms;
        for (std::uint64_t j = lo; j <= hi; ++j) {
            terms.push_back(log_binomial(ranges.central_ell, j) - ell * kLn2);
        }
        const double mass = std::exp(log_sum_exp(terms));
        report.instances.push_back({"central_binomial_mass",
                                    describe({{"l", ranges.central_ell}, {"from", lo}, {"to", hi}}),
                                    mass >= ranges.central_mass_floor});
    }

    for (std::uint64_t n : {1000ULL, 2000ULL}) {
        const std::uint64_t k = n * 7 / 20;
        const auto nd = static_cast<double>(n);
        const auto kd = static_cast<double>(k);
        const double stirling = 0.5 * std::log(nd / (2.0 * std::numbers::pi * kd * (nd - kd))) + kd * std::log(nd / kd) +
                                (nd - kd) * std::log(nd / (nd - kd));
        const bool ok = std::abs(std::expm1(log_binomial(n, k) - stirling)) <= 1e-3;
        report.instances.push_back({"approximate_of_binomial_coeff", describe({{"n", n}, {"k", k}}), ok});
    }
    return report;
}

} // namespace plateau
