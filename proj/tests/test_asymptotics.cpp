#include "plateau/asymptotics.hpp"
#include "plateau/errors.hpp"
#include "plateau/runtime_formulas.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace plateau;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double g_static(double x) { return std::expm1(x) / (x * x); }

double exact_static(std::uint64_t n, std::uint64_t ell, double p)
{
    return blo_total_time(ProblemSpec::block_leading_ones(n, ell), MutationSchedule::static_rate(MutationRate{p})).value;
}

} // namespace

TEST_CASE("s sums")
{
    CHECK(s_sum(1) == 1.0);
    CHECK(s_sum(2) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(s_sum_binomial(2) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(rel(s_sum(20), 111138.7767079111) <= 1e-14);
    for (std::uint64_t m = 1; m <= 40; ++m) {
        CHECK(rel(s_sum(m), s_sum_binomial(m)) <= 1e-11);
    }
    CHECK(std::isfinite(s_sum(1000)) == true);
    CHECK(scaled_s_sum(3000, 3000) == doctest::Approx(2.0 / 3000).epsilon(1e-2));
    CHECK(scaled_s_sum(20, 21) * 20 == doctest::Approx(1.05990196903144).epsilon(1e-13));
}

TEST_CASE("s(20) against f(20) = 2^21/20")
{
    const double ratio = s_sum(20) / (std::ldexp(1.0, 21) / 20.0);
    CHECK(ratio == doctest::Approx(1.05990196903144).epsilon(1e-12));
    CHECK(s_sum_lower_bound_holds(20));
    CHECK(ratio >= 1.0 + 1.0 / 20.0);
}

TEST_CASE("s(m) lower bound from m = 7")
{
    for (std::uint64_t m = 7; m <= 60; ++m) {
        CHECK(s_sum_lower_bound_holds(m));
    }
    for (std::uint64_t m = 2; m <= 6; ++m) {
        CHECK_FALSE(s_sum_lower_bound_holds(m));
    }
}

TEST_CASE("s(m) upper bound with c = 1.1 holds on a suffix of [7, 60]")
{
    const auto report = binomial_inequality_suite();
    REQUIRE(report.upper_bound_m0.has_value());
    const auto m0 = *report.upper_bound_m0;
    CHECK(m0 == 35);
    for (std::uint64_t m = m0; m <= 60; ++m) {
        CHECK(s_sum_upper_bound_holds(m, 1.1));
    }
    CHECK_FALSE(s_sum_upper_bound_holds(m0 - 1, 1.1));
}

TEST_CASE("inequality suite")
{
    const auto report = binomial_inequality_suite();
    CHECK(report.all_passed());
    std::map<std::string, int> per_check;
    for (const auto& inst : report.instances) {
        ++per_check[inst.check];
    }
    CHECK(per_check["power_of_two_vs_quadratic"] == 65);
    CHECK(per_check["s_sum_dual_form"] == 40);
    CHECK(per_check["s_sum_lower_bound"] == 54);
    CHECK(per_check["central_binomial_mass"] == 1);
    CHECK(per_check["binomial_prefix_sum_bound"] > 800);
}

TEST_CASE("block constants")
{
    const auto c1 = block_constants(1);
    CHECK(c1.s_ell == 1.0);
    CHECK(c1.a == 0.0);
    CHECK(c1.b == 0.25);

    const auto c2 = block_constants(2);
    CHECK(c2.s_ell == doctest::Approx(2.5));
    CHECK(c2.b == doctest::Approx(0.3125));
    CHECK(c2.a == doctest::Approx(0.0625));

    CHECK(std::abs(block_constants(30).b * 30.0 - 1.0) <= 0.1);
    for (std::uint64_t ell = 1; ell <= 200; ell += 7) {
        const auto c = block_constants(ell);
        CHECK(c.a + c.b == doctest::Approx(0.5 - std::ldexp(0.5, -static_cast<int>(ell))).epsilon(1e-14));
    }
}

TEST_CASE("taylor block time")
{
    const auto err = [](std::uint64_t k, std::uint64_t ell, double p) {
        return rel(taylor_block_time(k, ell, MutationRate{p}), block_time(k, ell, MutationRate{p}).value);
    };
    CHECK(taylor_block_time(0, 1, MutationRate{1e-6}) == doctest::Approx(1e6).epsilon(1e-9));
    CHECK(err(0, 1, 1e-6) < 1e-5);
    CHECK(err(12, 6, 0.01) <= 0.02);
    CHECK(err(12, 6, 0.2) > err(12, 6, 0.01));
    CHECK(err(12, 6, 1e-4) < err(12, 6, 1e-2));
}

TEST_CASE("asymptotic static runtime")
{
    // l = 1: (n 2 / 1)(n / (4 c^2))(e^c - 1)
    const double n = 1000.0;
    for (double c : {0.5, 1.0, 2.0}) {
        CHECK(blo_asymptotic_static(1000, 1, c).value == doctest::Approx(n * n * std::expm1(c) / (2 * c * c)));
    }
    CHECK(rel(exact_static(10000, 4, 1e-4), blo_asymptotic_static(10000, 4, 1.0).value) <= 0.05);
    CHECK(rel(exact_static(10000, 4, 1e-4), 184339595.66638149106) <= 1e-12);

    const double lambda = static_optimum().lambda;
    const double at = blo_asymptotic_static(100000, 1, lambda).value;
    CHECK(at < blo_asymptotic_static(100000, 1, lambda - 0.01).value);
    CHECK(at < blo_asymptotic_static(100000, 1, lambda + 0.01).value);

    CHECK_THROWS_AS((void)blo_asymptotic_static(100, 1, 0.0), DomainError);
    CHECK(blo_asymptotic_static(20, 4, 1.0).regime_warning);
    CHECK_FALSE(blo_asymptotic_static(400, 4, 1.0).regime_warning);
}

TEST_CASE("static optimum")
{
    const auto& opt = static_optimum();
    CHECK(opt.lambda == doctest::Approx(1.5936242600400401).epsilon(1e-13));
    CHECK(opt.alpha == doctest::Approx(1.5441386523708701).epsilon(1e-13));
    CHECK(std::round(opt.lambda * 100) / 100 == doctest::Approx(1.59));
    CHECK(std::round(opt.alpha * 100) / 100 == doctest::Approx(1.54));
    CHECK(opt.stationarity_residual <= 1e-10);
    CHECK(std::abs(opt.lambda - 2.0 * (1.0 - std::exp(-opt.lambda))) <= 1e-12);
    CHECK(g_static(opt.lambda) < g_static(opt.lambda - 0.01));
    CHECK(g_static(opt.lambda) < g_static(opt.lambda + 0.01));

    const auto r = optimal_static_rate(1000, 5);
    CHECK(r.rate.value() == doctest::Approx(opt.lambda / 1000));
    CHECK(r.method == RateMethod::ClosedFormAsymptotic);
}

TEST_CASE("optimal static runtime")
{
    const double alpha = static_optimum().alpha;
    CHECK(optimal_static_runtime(100, 1) == doctest::Approx(alpha * 2 * 10000 / 4));
    CHECK(optimal_static_runtime(100, 8, true) == doctest::Approx(alpha * 256 * 10000 / 64));

    // leading ones: the exact runtime at lambda/n carries the factor 2^l = 2
    const double n = 10000;
    const double exact = exact_static(10000, 1, static_optimum().lambda / n) / (n * n);
    CHECK(exact == doctest::Approx(alpha / 2).epsilon(0.01));
    CHECK(rel(exact * n * n, optimal_static_runtime(10000, 1)) <= 0.01);

    CHECK(rel(exact_static(1000, 5, static_optimum().lambda / 1000), optimal_static_runtime(1000, 5)) <= 0.05);
}

TEST_CASE("adaptive versus static optimum")
{
    const double ratio = optimal_adaptive_runtime(5000, 3) / optimal_static_runtime(5000, 3);
    CHECK(ratio == doctest::Approx(std::exp(1.0) / 2 / static_optimum().alpha).epsilon(1e-12));
    CHECK(std::round(ratio * 100) / 100 == doctest::Approx(0.88));
    CHECK(optimal_adaptive_runtime(1000, 1) == doctest::Approx(std::exp(1.0) / 4 * 1e6));
}

TEST_CASE("closed adaptive rate")
{
    CHECK_THROWS_AS((void)optimal_adaptive_rate_closed(0, 3), DomainError);

    const auto c = optimal_adaptive_rate_closed(10, 8);
    CHECK(c.result.method == RateMethod::ClosedFormAsymptotic);
    CHECK(c.large_m_form == doctest::Approx(1.0 / 80));
    CHECK(c.large_ell_form == doctest::Approx((std::sqrt(1.2) - 1.0) / 8));
    CHECK(c.scaled_rate == doctest::Approx(c.result.rate.value() * 80));

    // m = 1, growing l: rate * l -> sqrt(3) - 1
    double prev = 1.0;
    for (std::uint64_t ell : {16, 64, 256, 1024}) {
        const double e = std::abs(optimal_adaptive_rate_closed(1, ell).result.rate.value() * static_cast<double>(ell) -
                                  (std::sqrt(3.0) - 1.0));
        CHECK(e < prev);
        prev = e;
    }

    // scaled rate increases towards 1 in k
    double prev_scaled = 0.0;
    double prev_err = 1.0;
    for (std::uint64_t m : {13, 125, 1250}) {
        const double s = optimal_adaptive_rate_closed(m, 8).scaled_rate;
        CHECK(s > prev_scaled);
        CHECK(std::abs(s - 1.0) < prev_err);
        prev_scaled = s;
        prev_err = std::abs(s - 1.0);
    }

    const auto lo = optimal_adaptive_rate_closed(1, 1);
    CHECK(lo.result.boundary);
    CHECK(lo.result.rate.value() == 0.5);
}

TEST_CASE("exact adaptive rate")
{
    const auto m0 = optimal_adaptive_rate_exact(0, 1);
    CHECK(m0.boundary);
    CHECK(m0.rate.value() == 0.5);

    const auto m1 = optimal_adaptive_rate_exact(1, 1);
    CHECK(log_level_objective(1, 1, m1.rate.value()) <= log_level_objective(1, 1, 0.5) + 1e-15);

    const auto r = optimal_adaptive_rate_exact(25, 4);
    CHECK(rel(r.rate.value(), 0.01) <= 0.05);
    CHECK(r.predicted_runtime == doctest::Approx(std::exp(log_level_objective(25, 4, r.rate.value()))));

    // closed form within 10% at l=8, m=10, gap shrinking in m
    double prev_gap = 1.0;
    for (std::uint64_t m : {10, 100, 1000}) {
        const double closed = optimal_adaptive_rate_closed(m, 8).result.rate.value();
        const double exact = optimal_adaptive_rate_exact(m, 8).rate.value();
        const double gap = rel(closed, exact);
        if (m == 10) {
            CHECK(gap <= 0.10);
        }
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("exact minimizer never loses to the closed form")
{
    for (std::uint64_t ell : {1, 2, 3, 5, 8, 13, 40}) {
        for (std::uint64_t m : {1, 2, 5, 17, 100, 999}) {
            const double exact = optimal_adaptive_rate_exact(m, ell).rate.value();
            const double closed = optimal_adaptive_rate_closed(m, ell).result.rate.value();
            CAPTURE(ell);
            CAPTURE(m);
            CHECK(log_level_objective(m, ell, exact) <= log_level_objective(m, ell, closed) + 1e-14);
        }
    }
}

TEST_CASE("exact minimizer at m = 1 approaches ln 2 / l")
{
    for (std::uint64_t ell : {64, 256, 1024}) {
        const double pl = optimal_adaptive_rate_exact(1, ell).rate.value() * static_cast<double>(ell);
        CHECK(std::abs(pl - std::log(2.0)) < 0.01);
    }
}

TEST_CASE("per-block minimum runtime")
{
    for (std::uint64_t k : {400, 4000}) {
        const double best = std::exp(log_level_objective(k / 4, 4, optimal_adaptive_rate_exact(k / 4, 4).rate.value()));
        CHECK(rel(best, adaptive_block_runtime(k, 4)) < 2.0 / static_cast<double>(k) * 10);
    }
}

TEST_CASE("growth inverse")
{
    for (double y : {10.0, 1e3, 1e6}) {
        CHECK(rel(growth_function(invert_growth(y)), y) <= 1e-8);
    }
    CHECK(invert_growth(growth_function(10.0)) == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(invert_growth(50.0) < invert_growth(51.0));
    CHECK_THROWS_AS((void)invert_growth(growth_function(2.0 / std::log(2.0)) * 0.99), DomainError);
}
