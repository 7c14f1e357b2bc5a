#include "plateau/runtime_formulas.hpp"

#include "plateau/errors.hpp"
#include "plateau/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace plateau {

std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::ExactFourier:
        return "exact-fourier";
    case Method::Asymptotic:
        return "asymptotic";
    case Method::Oracle:
        return "oracle";
    case Method::MonteCarlo:
        return "monte-carlo";
    }
    return "unknown";
}

RuntimeEstimate RuntimeEstimate::from_log(double ln_value, Method method)
{
    RuntimeEstimate out;
    out.method = method;
    out.log2_value = ln_value / kLn2;
    if (ln_value >= std::log(std::numeric_limits<double>::max())) {
        out.value = std::numeric_limits<double>::infinity();
        out.overflow = true;
    } else {
        out.value = std::exp(ln_value);
    }
    return out;
}

namespace {

void require_ell(std::uint64_t ell)
{
    if (ell == 0) {
        throw DomainError("block length must be at least 1");
    }
}

// ln(2^l / (2^l - 1))
double log_off_optimum_factor(std::uint64_t ell)
{
    return -std::log1p(-std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(ell, 2000))));
}

double log_prefix_survival(std::uint64_t k, MutationRate p)
{
    return static_cast<double>(k) * std::log1p(-p.value());
}

// Linear-domain sum for short blocks, where it avoids the exp/log round trip.
constexpr std::uint64_t kDirectSumMaxEll = 60;

double direct_needle_sum(std::uint64_t ell, MutationRate p)
{
    CompensatedSum sum;
    double binom = 1.0;
    for (std::uint64_t j = 1; j <= ell; ++j) {
        binom = binom * static_cast<double>(ell - j + 1) / static_cast<double>(j);
        sum.add(binom / one_minus_flip_power(p.value(), j));
    }
    return sum.value();
}

RuntimeEstimate from_value(double value)
{
    RuntimeEstimate out;
    out.value = value;
    out.log2_value = std::log2(value);
    return out;
}

} // namespace

double log_needle_sum(std::uint64_t ell, MutationRate p)
{
    require_ell(ell);
    std::vector<double> terms;
    terms.reserve(ell);
    for (std::uint64_t j = 1; j <= ell; ++j) {
        terms.push_back(log_binomial(ell, j) - std::log(one_minus_flip_power(p.value(), j)));
    }
    return log_sum_exp(terms);
}

RuntimeEstimate needle_time_uniform_start(std::uint64_t ell, MutationRate p)
{
    if (ell >= 1 && ell <= kDirectSumMaxEll) {
        return from_value(direct_needle_sum(ell, p));
    }
    return RuntimeEstimate::from_log(log_needle_sum(ell, p), Method::ExactFourier);
}

RuntimeEstimate needle_time_excluding_optimum(std::uint64_t ell, MutationRate p)
{
    if (ell >= 1 && ell <= kDirectSumMaxEll) {
        const double states = std::ldexp(1.0, static_cast<int>(ell));
        return from_value(direct_needle_sum(ell, p) * states / (states - 1.0));
    }
    return RuntimeEstimate::from_log(log_needle_sum(ell, p) + log_off_optimum_factor(ell), Method::ExactFourier);
}

double needle_gks_limit(double c)
{
    if (!(c > 0.0)) {
        throw DomainError("needle_gks_limit: c must be positive");
    }
    return -1.0 / std::expm1(-c);
}

double normalized_needle(std::uint64_t ell, double c)
{
    require_ell(ell);
    const MutationRate p{c / static_cast<double>(ell)};
    return std::exp(log_needle_sum(ell, p) - static_cast<double>(ell) * kLn2);
}

RuntimeEstimate block_time(std::uint64_t k, std::uint64_t ell, MutationRate p)
{
    const double ln = log_needle_sum(ell, p) + log_off_optimum_factor(ell) - log_prefix_survival(k, p);
    return RuntimeEstimate::from_log(ln, Method::ExactFourier);
}

RuntimeEstimate block_time_allowing_zero(std::uint64_t k, std::uint64_t ell, MutationRate p)
{
    return RuntimeEstimate::from_log(log_needle_sum(ell, p) - log_prefix_survival(k, p), Method::ExactFourier);
}

RuntimeEstimate blo_total_time(const ProblemSpec& spec, std::span<const MutationRate> rates)
{
    if (spec.kind() != ProblemKind::BlockLeadingOnes) {
        throw DomainError("blo_total_time: problem is not BlockLeadingOnes");
    }
    if (rates.size() != spec.levels()) {
        throw DomainError("blo_total_time: schedule has " + std::to_string(rates.size()) +
                          " rates, expected n/l = " + std::to_string(spec.levels()));
    }
    const std::uint64_t ell = spec.ell();
    std::vector<double> terms;
    terms.reserve(rates.size());
    double cached_ln_sum = 0.0;
    double cached_rate = -1.0;
    for (std::size_t m = 0; m < rates.size(); ++m) {
        if (rates[m].value() != cached_rate) {
            cached_rate = rates[m].value();
            cached_ln_sum = log_needle_sum(ell, rates[m]);
        }
        terms.push_back(cached_ln_sum - log_prefix_survival(m * ell, rates[m]));
    }
    return RuntimeEstimate::from_log(log_sum_exp(terms), Method::ExactFourier);
}

RuntimeEstimate blo_total_time(const ProblemSpec& spec, const MutationSchedule& schedule)
{
    const auto rates = schedule.resolve(spec);
    return blo_total_time(spec, rates);
}

RuntimeEstimate blo_static_closed_form(const ProblemSpec& spec, MutationRate p)
{
    if (spec.kind() != ProblemKind::BlockLeadingOnes) {
        throw DomainError("blo_static_closed_form: problem is not BlockLeadingOnes");
    }
    const double log_keep = std::log1p(-p.value());
    const auto n = static_cast<double>(spec.n());
    const auto ell = static_cast<double>(spec.ell());
    // ((1-p)^{-n+l} - (1-p)^l) / (1 - (1-p)^l)
    const double ln_factor = ell * log_keep + log_expm1(-n * log_keep) - log1m_exp(ell * log_keep);
    return RuntimeEstimate::from_log(ln_factor + log_needle_sum(spec.ell(), p), Method::ExactFourier);
}

double plateau_heuristic_time(std::uint64_t k, std::uint64_t ell, MutationRate p)
{
    require_ell(ell);
    const double log_keep = std::log1p(-p.value());
    const double ln = static_cast<double>(ell) * kLn2 - static_cast<double>(k) * log_keep -
                      log1m_exp(static_cast<double>(ell) * log_keep);
    return std::exp(ln);
}

RuntimeEstimate exact_runtime(const ProblemSpec& spec, std::span<const MutationRate> rates)
{
    if (spec.kind() == ProblemKind::Needle) {
        if (rates.size() != 1) {
            throw DomainError("Needle takes exactly one rate");
        }
        return needle_time_uniform_start(spec.ell(), rates.front());
    }
    return blo_total_time(spec, rates);
}

} // namespace plateau
