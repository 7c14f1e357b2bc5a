#include "plateau/cli.hpp"

#include "plateau/asymptotics.hpp"
#include "plateau/errors.hpp"
#include "plateau/oracle.hpp"
#include "plateau/runtime_formulas.hpp"
#include "plateau/simulator.hpp"
#include "plateau/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef PLATEAU_RT_VERSION
#define PLATEAU_RT_VERSION "0.0.0"
#endif

namespace plateau {

namespace {

using nlohmann::json;

std::string timestamp_utc()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt(double v)
{
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

json nullable(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

json to_json(const RuntimeEstimate& e)
{
    return {{"value", e.overflow ? json(nullptr) : json(e.value)},
            {"log2_value", e.log2_value},
            {"method", std::string(to_string(e.method))},
            {"std_error", nullable(e.std_error)},
            {"overflow", e.overflow}};
}

json to_json(const OptimalRateResult& r)
{
    return {{"rate", r.rate.value()},
            {"predicted_runtime", r.predicted_runtime},
            {"method", std::string(to_string(r.method))},
            {"boundary", r.boundary},
            {"grid_fallback", r.grid_fallback},
            {"warnings", r.warnings}};
}

struct Record {
    std::string command;
    json inputs = json::object();
    json result = json::object();
};

void emit_json(std::ostream& out, const Record& r)
{
    const json doc = {{"command", r.command},
                      {"inputs", r.inputs},
                      {"result", r.result},
                      {"version", PLATEAU_RT_VERSION},
                      {"timestamp", timestamp_utc()}};
    out << doc.dump(2) << '\n';
}

void print_estimate(std::ostream& out, const RuntimeEstimate& e, const char* label = "value")
{
    out << label << ": " << (e.overflow ? std::string("overflow") : fmt(e.value)) << "  (log2 " << fmt(e.log2_value)
        << ")\n";
}

// --- rate specifications -------------------------------------------------------

struct RateSpec {
    enum class Kind { Static, COverN, Adaptive, File } kind = Kind::Static;
    double value = 0.0;
    std::string path;
    std::string text;
};

RateSpec parse_rate(const std::string& text)
{
    RateSpec spec;
    spec.text = text;
    const auto number = [&](std::string_view body) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(std::string(body), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != body.size()) {
            throw DomainError("malformed rate spec '" + text + "': expected a number after ':'");
        }
        return v;
    };
    if (text == "adaptive") {
        spec.kind = RateSpec::Kind::Adaptive;
    } else if (text.rfind("static:", 0) == 0) {
        spec.kind = RateSpec::Kind::Static;
        spec.value = number(std::string_view(text).substr(7));
    } else if (text.rfind("c-over-n:", 0) == 0) {
        spec.kind = RateSpec::Kind::COverN;
        spec.value = number(std::string_view(text).substr(9));
    } else if (text.rfind("file:", 0) == 0 && text.size() > 5) {
        spec.kind = RateSpec::Kind::File;
        spec.path = text.substr(5);
    } else {
        throw DomainError("malformed rate spec '" + text + "': use static:<p>, c-over-n:<c>, adaptive or file:<path>");
    }
    return spec;
}

std::vector<MutationRate> read_rate_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open rate file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw DomainError("rate file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_array()) {
        throw DomainError("rate file '" + path + "' must hold a JSON array of rates");
    }
    std::vector<MutationRate> rates;
    for (const auto& v : doc) {
        if (!v.is_number()) {
            throw DomainError("rate file '" + path + "' contains a non-numeric entry");
        }
        rates.emplace_back(v.get<double>());
    }
    return rates;
}

MutationSchedule to_schedule(const RateSpec& rate, const ProblemSpec& spec)
{
    switch (rate.kind) {
    case RateSpec::Kind::Static: return MutationSchedule::static_rate(MutationRate{rate.value});
    case RateSpec::Kind::COverN:
        return MutationSchedule::static_rate(MutationRate{rate.value / static_cast<double>(spec.n())});
    case RateSpec::Kind::Adaptive: return MutationSchedule::adaptive_optimal();
    case RateSpec::Kind::File: {
        auto rates = read_rate_file(rate.path);
        if (rates.size() != spec.levels()) {
            throw DomainError("rate schedule has " + std::to_string(rates.size()) + " entries; expected n/l = " +
                              std::to_string(spec.levels()));
        }
        return MutationSchedule::table(std::move(rates));
    }
    }
    throw InternalError("unhandled rate kind");
}

json rates_json(std::span<const MutationRate> rates)
{
    json arr = json::array();
    for (auto r : rates) {
        arr.push_back(r.value());
    }
    return arr;
}

void print_rate_table(std::ostream& out, std::span<const MutationRate> rates)
{
    out << "level  rate\n";
    constexpr std::size_t kShown = 50;
    for (std::size_t m = 0; m < rates.size(); ++m) {
        if (rates.size() > kShown && m == kShown / 2) {
            out << "  ... (" << rates.size() - kShown << " levels omitted)\n";
            m = rates.size() - kShown / 2;
        }
        out << std::setw(5) << m << "  " << fmt(rates[m].value()) << '\n';
    }
}

// --- subcommands -----------------------------------------------------------------

struct NeedleArgs {
    std::uint64_t ell = 0;
    std::optional<double> p;
    std::optional<double> p_over_ell;
    bool exclude_optimum = false;
    bool normalized = false;
};

int cmd_needle(const NeedleArgs& a, bool as_json, std::ostream& out)
{
    const double p = a.p ? *a.p : *a.p_over_ell / static_cast<double>(a.ell);
    const MutationRate rate{p};
    RuntimeEstimate e = a.exclude_optimum ? needle_time_excluding_optimum(a.ell, rate)
                                          : needle_time_uniform_start(a.ell, rate);
    const double c = p * static_cast<double>(a.ell);
    if (a.normalized) {
        e.log2_value -= static_cast<double>(a.ell);
        e.value = std::exp2(e.log2_value);
        e.overflow = !std::isfinite(e.value);
    }
    Record r{"needle"};
    r.inputs = {{"ell", a.ell},
                {"p", p},
                {"p_over_ell", c},
                {"exclude_optimum", a.exclude_optimum},
                {"normalized", a.normalized}};
    r.result = to_json(e);
    r.result["limit"] = needle_gks_limit(c);
    if (as_json) {
        emit_json(out, r);
        return kExitOk;
    }
    out << "needle  l=" << a.ell << "  p=" << fmt(p) << (a.exclude_optimum ? "  (start off the optimum)" : "")
        << '\n';
    print_estimate(out, e, a.normalized ? "2^-l E[T]" : "E[T]");
    if (a.normalized) {
        out << "limit 1/(1-e^-c) at c=" << fmt(c) << ": " << fmt(needle_gks_limit(c)) << '\n';
    }
    return kExitOk;
}

struct BloArgs {
    std::uint64_t n = 0;
    std::uint64_t ell = 0;
    std::string rate;
    std::string mode = "exact";
};

int cmd_blo(const BloArgs& a, bool as_json, std::ostream& out)
{
    const auto spec = ProblemSpec::block_leading_ones(a.n, a.ell);
    const auto rate = parse_rate(a.rate);
    const auto rates = to_schedule(rate, spec).resolve(spec);
    const RuntimeEstimate exact = blo_total_time(spec, rates);

    std::optional<double> asymptotic;
    bool regime_warning = false;
    switch (rate.kind) {
    case RateSpec::Kind::Static:
    case RateSpec::Kind::COverN: {
        const double c = rates.front().value() * static_cast<double>(a.n);
        const auto v = blo_asymptotic_static(a.n, a.ell, c);
        asymptotic = v.value;
        regime_warning = v.regime_warning;
        break;
    }
    case RateSpec::Kind::Adaptive:
        asymptotic = optimal_adaptive_runtime(a.n, a.ell);
        regime_warning = a.ell * 10 > a.n;
        break;
    case RateSpec::Kind::File: break;
    }
    if (a.mode == "asymptotic" && !asymptotic) {
        throw DomainError("no asymptotic form for a rate table; use --mode exact");
    }
    const std::optional<double> ratio =
        asymptotic && !exact.overflow ? std::optional<double>(exact.value / *asymptotic) : std::nullopt;

    RuntimeEstimate primary = exact;
    if (a.mode == "asymptotic") {
        primary = RuntimeEstimate::from_log(std::log(*asymptotic), Method::Asymptotic);
    }

    Record r{"blo"};
    r.inputs = {{"n", a.n}, {"ell", a.ell}, {"rate", a.rate}, {"mode", a.mode}};
    r.result = to_json(primary);
    r.result["exact"] = to_json(exact);
    r.result["asymptotic"] = nullable(asymptotic);
    r.result["ratio_exact_over_asymptotic"] = nullable(ratio);
    r.result["regime_warning"] = regime_warning;
    r.result["rates"] = rates_json(rates);
    if (as_json) {
        emit_json(out, r);
        return kExitOk;
    }
    out << "blo  n=" << a.n << "  l=" << a.ell << "  rate=" << a.rate << "  mode=" << a.mode << '\n';
    if (rate.kind == RateSpec::Kind::Adaptive || rate.kind == RateSpec::Kind::File) {
        print_rate_table(out, rates);
    }
    print_estimate(out, exact, "exact");
    if (asymptotic) {
        out << "asymptotic: " << fmt(*asymptotic) << "  (log2 " << fmt(std::log2(*asymptotic)) << ")\n";
    }
    if (ratio) {
        out << "ratio exact/asymptotic: " << fmt(*ratio) << '\n';
    }
    if (regime_warning) {
        out << "warning: l > n/10, outside the regime of the asymptotic formula\n";
    }
    return kExitOk;
}

struct OptimalArgs {
    std::string kind;
    std::optional<std::uint64_t> ell;
    std::optional<std::uint64_t> m;
    std::optional<std::uint64_t> n;
};

int cmd_optimal(const OptimalArgs& a, bool as_json, std::ostream& out)
{
    Record r{"optimal"};
    r.inputs = {{"kind", a.kind},
                {"ell", a.ell ? json(*a.ell) : json(nullptr)},
                {"m", a.m ? json(*a.m) : json(nullptr)},
                {"n", a.n ? json(*a.n) : json(nullptr)}};
    std::ostringstream human;

    if (a.kind == "static") {
        const auto& opt = static_optimum();
        const double ratio = (std::exp(1.0) / 2.0) / opt.alpha;
        r.result = {{"lambda", opt.lambda},
                    {"alpha", opt.alpha},
                    {"stationarity_residual", opt.stationarity_residual},
                    {"adaptive_over_static", ratio},
                    {"rate", nullptr},
                    {"runtime", nullptr},
                    {"runtime_large_ell", nullptr}};
        human << "lambda: " << fmt(opt.lambda) << "  (rate lambda/n)\n"
              << "alpha:  " << fmt(opt.alpha) << '\n'
              << "stationarity residual: " << fmt(opt.stationarity_residual) << '\n'
              << "adaptive/static runtime ratio (e/2)/alpha: " << fmt(ratio) << '\n';
        if (a.n) {
            const std::uint64_t ell = a.ell.value_or(1);
            const auto res = optimal_static_rate(*a.n, ell);
            r.result["rate"] = to_json(res);
            r.result["runtime"] = optimal_static_runtime(*a.n, ell);
            r.result["runtime_large_ell"] = optimal_static_runtime(*a.n, ell, true);
            human << "n=" << *a.n << " l=" << ell << ": rate " << fmt(res.rate.value()) << ", runtime "
                  << fmt(optimal_static_runtime(*a.n, ell)) << '\n';
        }
    } else {
        if (!a.m || !a.ell) {
            throw CLI::ValidationError("optimal adaptive", "--ell and --m are required");
        }
        const std::uint64_t ell = *a.ell;
        const std::uint64_t m = *a.m;
        const auto exact = optimal_adaptive_rate_exact(m, ell);
        r.result = {{"exact", to_json(exact)},
                    {"closed", nullptr},
                    {"large_ell_form", nullptr},
                    {"large_m_form", nullptr},
                    {"scaled_rate", nullptr},
                    {"relative_gap", nullptr}};
        human << "level m=" << m << "  l=" << ell << "  k=" << m * ell << '\n'
              << "exact minimizer: " << fmt(exact.rate.value()) << (exact.boundary ? "  [boundary]" : "")
              << (exact.grid_fallback ? "  [grid]" : "") << '\n';
        if (m >= 1) {
            const auto closed = optimal_adaptive_rate_closed(m, ell);
            const double gap = (closed.result.rate.value() - exact.rate.value()) / exact.rate.value();
            r.result["closed"] = to_json(closed.result);
            r.result["large_ell_form"] = closed.large_ell_form;
            r.result["large_m_form"] = closed.large_m_form;
            r.result["scaled_rate"] = closed.scaled_rate;
            r.result["relative_gap"] = gap;
            human << "closed form:     " << fmt(closed.result.rate.value())
                  << (closed.result.boundary ? "  [boundary]" : "") << '\n'
                  << "relative gap (closed - exact)/exact: " << fmt(gap) << '\n'
                  << "large-l form:    " << fmt(closed.large_ell_form) << '\n'
                  << "1/k:             " << fmt(closed.large_m_form) << '\n';
        } else {
            human << "closed form undefined at m=0\n";
        }
        human << "predicted E[T'_k]: " << fmt(exact.predicted_runtime) << '\n';
        for (const auto& w : exact.warnings) {
            human << "warning: " << w << '\n';
        }
    }
    if (as_json) {
        emit_json(out, r);
    } else {
        out << human.str();
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite_name, bool as_json, std::ostream& out)
{
    const auto suite = parse_suite(suite_name);
    if (!suite) {
        throw DomainError("unknown suite '" + suite_name + "'");
    }
    const auto report = run_suite(*suite);
    Record r{"verify"};
    r.inputs = {{"suite", suite_name}};
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"instance", c.instance},
                          {"value", c.value},
                          {"reference", c.reference},
                          {"error", c.error},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed}});
    }
    r.result = {{"suite", suite_name},
                {"passed", report.passed()},
                {"checks_run", report.checks.size()},
                {"failures", report.failures()},
                {"checks", checks}};
    if (as_json) {
        emit_json(out, r);
    } else {
        const bool table = *suite == Suite::AsymptoticConvergence;
        for (const auto& c : report.checks) {
            if (table || !c.passed) {
                out << (c.passed ? "pass  " : "FAIL  ") << c.name << "  " << c.instance << "  error " << fmt(c.error)
                    << "  (bound " << fmt(c.tolerance) << ")\n";
            }
        }
        out << suite_name << ": " << report.checks.size() - report.failures() << '/' << report.checks.size()
            << " checks passed\n";
    }
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

struct SimulateArgs {
    std::string problem;
    std::optional<std::uint64_t> n;
    std::uint64_t ell = 0;
    std::string rate;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::optional<std::string> out_path;
    std::optional<std::uint64_t> cap;
};

int cmd_simulate(const SimulateArgs& a, bool as_json, std::ostream& out, std::ostream& err)
{
    const ProblemSpec spec = [&] {
        if (a.problem == "needle") {
            if (a.n && *a.n != a.ell) {
                throw DomainError("needle: --n must equal --ell when given");
            }
            return ProblemSpec::needle(a.ell);
        }
        if (!a.n) {
            throw DomainError("blo: --n is required");
        }
        return ProblemSpec::block_leading_ones(*a.n, a.ell);
    }();
    SimulationConfig config;
    config.spec = spec;
    config.schedule = to_schedule(parse_rate(a.rate), spec);
    config.trials = a.trials;
    config.master_seed = a.seed;
    config.iteration_cap = a.cap;
    config.keep_trial_iterations = a.out_path.has_value();
    const auto rates = config.schedule.resolve(spec);
    const auto report = run(config);

    if (a.out_path) {
        std::ofstream csv(*a.out_path, std::ios::binary | std::ios::trunc);
        if (!csv) {
            throw DomainError("cannot write '" + *a.out_path + "'");
        }
        write_trials_csv(report, csv);
    }

    const RuntimeEstimate exact = exact_runtime(spec, rates);
    const std::optional<double> z = report.std_error > 0.0 && !exact.overflow
                                        ? std::optional<double>((report.mean - exact.value) / report.std_error)
                                        : std::nullopt;
    Record r{"simulate"};
    r.inputs = {{"problem", a.problem}, {"n", spec.n()},       {"ell", a.ell},
                {"rate", a.rate},       {"trials", a.trials}, {"seed", a.seed},
                {"out", a.out_path ? json(*a.out_path) : json(nullptr)},
                {"cap", a.cap ? json(*a.cap) : json(nullptr)}};
    r.result = {{"mean", report.mean},
                {"std_error", report.std_error},
                {"method", std::string(to_string(Method::MonteCarlo))},
                {"trials_completed", report.trials_completed},
                {"capped_trials", report.capped_trials},
                {"iteration_cap", report.iteration_cap},
                {"master_seed", report.master_seed},
                {"per_level_means", report.per_level_means},
                {"exact", to_json(exact)},
                {"z_score", nullable(z)}};
    if (as_json) {
        emit_json(out, r);
    } else {
        out << "simulate " << a.problem << "  n=" << spec.n() << "  l=" << a.ell << "  rate=" << a.rate
            << "  trials=" << a.trials << "  seed=" << a.seed << '\n';
        if (report.trials_completed > 0) {
            out << "mean: " << fmt(report.mean) << "  (log2 " << fmt(std::log2(report.mean)) << ")  stderr "
                << fmt(report.std_error) << '\n';
        } else {
            out << "mean: none (no trial finished)\n";
        }
        print_estimate(out, exact, "exact");
        if (z) {
            out << "z-score: " << fmt(*z) << '\n';
        }
    }
    if (report.capped_trials > 0) {
        err << "error: " << report.capped_trials << " of " << a.trials << " trials hit the iteration cap of "
            << report.iteration_cap << "; the mean excludes them\n";
        return kExitCapped;
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Expected runtimes of the (1+1) EA on Needle and BlockLeadingOnes", "plateau_rt"};
    app.set_version_flag("--version", PLATEAU_RT_VERSION);
    app.require_subcommand(1);

    bool as_json = false;
    const auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Emit one JSON record on stdout"); };

    NeedleArgs needle;
    auto* needle_cmd = app.add_subcommand("needle", "Exact Needle runtime");
    needle_cmd->add_option("--ell", needle.ell, "Block length l")->required()->check(CLI::PositiveNumber);
    auto* p_opt = needle_cmd->add_option("--p", needle.p, "Mutation rate p in (0,1)");
    auto* c_opt = needle_cmd->add_option("--p-over-ell", needle.p_over_ell, "Rate given as c, meaning p = c/l");
    p_opt->excludes(c_opt);
    c_opt->excludes(p_opt);
    needle_cmd->add_flag("--exclude-optimum", needle.exclude_optimum, "Start uniformly off the optimum");
    needle_cmd->add_flag("--normalized", needle.normalized, "Report 2^-l times the runtime");
    json_flag(needle_cmd);

    BloArgs blo;
    auto* blo_cmd = app.add_subcommand("blo", "BlockLeadingOnes runtime");
    blo_cmd->add_option("--n", blo.n, "String length")->required()->check(CLI::PositiveNumber);
    blo_cmd->add_option("--ell", blo.ell, "Block length (divides n)")->required()->check(CLI::PositiveNumber);
    blo_cmd->add_option("--rate", blo.rate, "static:<p> | c-over-n:<c> | adaptive | file:<path>")->required();
    blo_cmd->add_option("--mode", blo.mode, "exact or asymptotic")
        ->check(CLI::IsMember({"exact", "asymptotic"}))
        ->capture_default_str();
    json_flag(blo_cmd);

    OptimalArgs optimal;
    auto* opt_cmd = app.add_subcommand("optimal", "Optimal static or fitness-dependent rates");
    opt_cmd->add_option("kind", optimal.kind, "static or adaptive")
        ->required()
        ->check(CLI::IsMember({"static", "adaptive"}));
    opt_cmd->add_option("--ell", optimal.ell, "Block length")->check(CLI::PositiveNumber);
    opt_cmd->add_option("--m", optimal.m, "Fitness level (adaptive)");
    opt_cmd->add_option("--n", optimal.n, "String length (static rate and runtime)")->check(CLI::PositiveNumber);
    json_flag(opt_cmd);

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "Run a cross-check suite");
    verify_cmd->add_option("suite", suite, "fourier-oracle | blo-oracle | inequalities | asymptotic-convergence")
        ->required()
        ->check(CLI::IsMember({"fourier-oracle", "blo-oracle", "inequalities", "asymptotic-convergence"}));
    json_flag(verify_cmd);

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo runs of the (1+1) EA");
    sim_cmd->add_option("--problem", sim.problem, "needle or blo")
        ->required()
        ->check(CLI::IsMember({"needle", "blo"}));
    sim_cmd->add_option("--n", sim.n, "String length (blo)")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--ell", sim.ell, "Block length")->required()->check(CLI::PositiveNumber);
    sim_cmd->add_option("--rate", sim.rate, "static:<p> | c-over-n:<c> | adaptive | file:<path>")->required();
    sim_cmd->add_option("--trials", sim.trials, "Number of trials")->check(CLI::PositiveNumber)->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
    sim_cmd->add_option("--out", sim.out_path, "Write per-trial iterations as CSV");
    sim_cmd->add_option("--cap", sim.cap, "Iteration cap per trial")->check(CLI::PositiveNumber);
    json_flag(sim_cmd);

    try {
        app.parse(argc, argv);
        if (needle_cmd->parsed() && !needle.p && !needle.p_over_ell) {
            throw CLI::RequiredError("--p or --p-over-ell");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << PLATEAU_RT_VERSION << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitValidation;
    }

    try {
        if (needle_cmd->parsed()) {
            return cmd_needle(needle, as_json, out);
        }
        if (blo_cmd->parsed()) {
            return cmd_blo(blo, as_json, out);
        }
        if (opt_cmd->parsed()) {
            return cmd_optimal(optimal, as_json, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(suite, as_json, out);
        }
        return cmd_simulate(sim, as_json, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::logic_error& e) { // DomainError, CapacityError
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitValidation;
    }
}

} // namespace plateau
