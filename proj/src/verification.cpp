#include "plateau/verification.hpp"

#include "plateau/asymptotics.hpp"
#include "plateau/oracle.hpp"
#include "plateau/runtime_formulas.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <sstream>

namespace plateau {

namespace {

double rel_error(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

Check relative(std::string name, std::string instance, double value, double reference, double tol)
{
    const double err = rel_error(value, reference);
    return {std::move(name), std::move(instance), value, reference, err, tol, err <= tol};
}

std::string label(std::initializer_list<std::pair<const char*, double>> fields)
{
    std::ostringstream os;
    os.precision(6);
    bool first = true;
    for (const auto& [key, v] : fields) {
        os << (first ? "" : " ") << key << '=' << v;
        first = false;
    }
    return os.str();
}

// Each error in `errors` must be strictly smaller than its predecessor.
void push_trend(std::vector<Check>& out, const std::string& name, const std::vector<std::pair<std::string, double>>& errors)
{
    for (std::size_t i = 1; i < errors.size(); ++i) {
        const double prev = errors[i - 1].second;
        const double cur = errors[i].second;
        out.push_back({name + "/decreasing", errors[i - 1].first + " -> " + errors[i].first, cur, prev, cur, prev,
                       cur < prev});
    }
}

void fourier_oracle(std::vector<Check>& out)
{
    for (std::size_t ell = 1; ell <= 10; ++ell) {
        const double l = static_cast<double>(ell);
        for (double p : {0.5 / l, 1.0 / l, 2.0 / l, 0.3, 0.5}) {
            if (!(p > 0.0 && p < 1.0)) {
                continue;
            }
            const MutationRate rate{p};
            const auto full = full_state_hitting_times(ell, rate);
            double sum = 0.0;
            for (double h : full) {
                sum += h;
            }
            const auto states = static_cast<double>(full.size());
            const auto inst = label({{"l", l}, {"p", p}});
            out.push_back(relative("needle_uniform_start", inst, needle_time_uniform_start(ell, rate).value,
                                   sum / states, 1e-9));
            out.push_back(relative("needle_excluding_optimum", inst, needle_time_excluding_optimum(ell, rate).value,
                                   sum / (states - 1.0), 1e-9));

            const auto lumped = lumped_hitting_times(ell, rate);
            double worst = 0.0;
            for (std::size_t x = 0; x < full.size(); ++x) {
                const auto d = ell - static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(x)));
                if (d > 0) {
                    worst = std::max(worst, rel_error(lumped[d], full[x]));
                }
            }
            out.push_back({"lumped_vs_full", inst, worst, 0.0, worst, 1e-9, worst <= 1e-9});

            if (ell <= 6) {
                // From 0 to g is, by translation, from ~g to 1^l.
                const std::uint64_t mask = (std::uint64_t{1} << ell) - 1;
                double worst_g = 0.0;
                for (std::uint64_t g = 1; g <= mask; ++g) {
                    const double fourier = hitting_time_from_zero(BitString::from_word(g, ell), rate);
                    worst_g = std::max(worst_g, rel_error(fourier, full[~g & mask]));
                }
                out.push_back({"hitting_time_from_zero", inst, worst_g, 0.0, worst_g, 1e-9, worst_g <= 1e-9});
            }
        }
    }
}

void blo_oracle(std::vector<Check>& out)
{
    struct Case {
        std::size_t n, ell;
        double p;
    };
    static constexpr std::array cases{
        Case{2, 1, 0.5},  Case{4, 1, 0.25}, Case{6, 3, 1.0 / 6}, Case{6, 2, 0.2},  Case{8, 4, 0.125},
        Case{8, 2, 0.3},  Case{9, 3, 0.1},  Case{10, 5, 0.05},   Case{10, 1, 0.1}, Case{10, 2, 0.5},
        Case{9, 9, 0.2},
    };
    for (const auto& c : cases) {
        const auto spec = ProblemSpec::block_leading_ones(c.n, c.ell);
        const std::vector<MutationRate> rates(spec.levels(), MutationRate{c.p});
        const auto inst = label({{"n", static_cast<double>(c.n)}, {"l", static_cast<double>(c.ell)}, {"p", c.p}});
        out.push_back(relative("blo_static", inst, blo_total_time(spec, rates).value, lo_chain_time(spec, rates), 1e-8));
    }
    // Fitness-dependent schedules.
    for (std::size_t ell : {1, 2, 3}) {
        const std::size_t n = 10 / ell * ell;
        const auto spec = ProblemSpec::block_leading_ones(n, ell);
        std::vector<MutationRate> rates;
        for (std::size_t m = 0; m < spec.levels(); ++m) {
            rates.emplace_back(0.05 + 0.4 * static_cast<double>(m) / static_cast<double>(spec.levels()));
        }
        const auto inst = label({{"n", static_cast<double>(n)}, {"l", static_cast<double>(ell)}});
        out.push_back(
            relative("blo_ramp_schedule", inst, blo_total_time(spec, rates).value, lo_chain_time(spec, rates), 1e-8));
        const auto adaptive = MutationSchedule::adaptive_optimal();
        out.push_back(relative("blo_adaptive_schedule", inst, blo_total_time(spec, adaptive).value,
                               lo_chain_time(spec, adaptive), 1e-8));
    }
}

void inequalities(std::vector<Check>& out)
{
    const auto report = binomial_inequality_suite();
    for (const auto& inst : report.instances) {
        out.push_back({inst.check, inst.instance, inst.passed ? 1.0 : 0.0, 1.0, inst.passed ? 0.0 : 1.0, 0.0,
                       inst.passed});
    }
}

void asymptotic_convergence(std::vector<Check>& out)
{
    {
        const double limit = needle_gks_limit(1.0);
        out.push_back(
            {"needle_limit", "l=1000 c=1", normalized_needle(1000, 1.0), limit,
             std::abs(normalized_needle(1000, 1.0) - limit), 0.05, std::abs(normalized_needle(1000, 1.0) - limit) <= 0.05});
        std::vector<std::pair<std::string, double>> errs;
        for (std::uint64_t ell : {100, 400, 1600}) {
            errs.emplace_back("l=" + std::to_string(ell), std::abs(normalized_needle(ell, 1.0) - limit));
        }
        push_trend(out, "needle_limit", errs);
    }

    const auto& opt = static_optimum();
    out.push_back({"static_optimum_stationarity", "lambda", opt.lambda, 0.0, std::abs(opt.stationarity_residual), 1e-10,
                   std::abs(opt.stationarity_residual) <= 1e-10});

    {
        std::vector<std::pair<std::string, double>> errs;
        for (std::uint64_t n : {10'000ULL, 100'000ULL}) {
            const auto spec = ProblemSpec::block_leading_ones(n, 4);
            const double exact = blo_total_time(spec, MutationSchedule::static_rate(MutationRate{1.0 / static_cast<double>(n)})).value;
            const double asym = blo_asymptotic_static(n, 4, 1.0).value;
            const auto inst = "l=4 c=1 n=" + std::to_string(n);
            out.push_back(relative("static_ratio", inst, exact, asym, 0.05));
            errs.emplace_back(inst, rel_error(exact, asym));
        }
        push_trend(out, "static_ratio", errs);
    }
    {
        std::vector<std::pair<std::string, double>> errs;
        for (std::uint64_t n : {2'000ULL, 20'000ULL}) {
            const auto spec = ProblemSpec::block_leading_ones(n, 4);
            const double exact = blo_total_time(spec, MutationSchedule::adaptive_optimal()).value;
            const double asym = optimal_adaptive_runtime(n, 4);
            const auto inst = "l=4 n=" + std::to_string(n);
            out.push_back(relative("adaptive_ratio", inst, exact, asym, 0.08));
            errs.emplace_back(inst, rel_error(exact, asym));
        }
        push_trend(out, "adaptive_ratio", errs);
    }
    {
        std::vector<std::pair<std::string, double>> errs;
        for (std::uint64_t k : {80, 800, 8000}) {
            const double p = optimal_adaptive_rate_exact(k / 8, 8).rate.value();
            errs.emplace_back("l=8 k=" + std::to_string(k), std::abs(p * static_cast<double>(k) - 1.0));
        }
        push_trend(out, "adaptive_rate_times_k", errs);
    }
    {
        std::vector<std::pair<std::string, double>> errs;
        const double target = std::sqrt(3.0) - 1.0;
        for (std::uint64_t ell : {16, 64, 256}) {
            const double p = optimal_adaptive_rate_exact(1, ell).rate.value();
            errs.emplace_back("m=1 l=" + std::to_string(ell), std::abs(p * static_cast<double>(ell) - target));
        }
        push_trend(out, "first_level_rate_times_l", errs);
    }
}

} // namespace

std::string_view to_string(Suite suite) noexcept
{
    switch (suite) {
    case Suite::FourierOracle: return "fourier-oracle";
    case Suite::BloOracle: return "blo-oracle";
    case Suite::Inequalities: return "inequalities";
    case Suite::AsymptoticConvergence: return "asymptotic-convergence";
    }
    return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) noexcept
{
    for (auto s : {Suite::FourierOracle, Suite::BloOracle, Suite::Inequalities, Suite::AsymptoticConvergence}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

SuiteReport run_suite(Suite suite)
{
    SuiteReport report;
    report.suite = suite;
    switch (suite) {
    case Suite::FourierOracle: fourier_oracle(report.checks); break;
    case Suite::BloOracle: blo_oracle(report.checks); break;
    case Suite::Inequalities: inequalities(report.checks); break;
    case Suite::AsymptoticConvergence: asymptotic_convergence(report.checks); break;
    }
    return report;
}

} // namespace plateau
