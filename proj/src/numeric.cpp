#include "plateau/numeric.hpp"

#include "plateau/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <math.h>

namespace plateau {

void CompensatedSum::add(double x) noexcept
{
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

namespace {

__extension__ using u128 = unsigned __int128;

// C(n, k) as an exact double while every intermediate fits in 64 bits.
bool exact_binomial(std::uint64_t n, std::uint64_t k, double& out)
{
    if (n > 62) {
        return false;
    }
    u128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    out = static_cast<double>(c);
    return true;
}

double log_gamma(double x)
{
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

} // namespace

double log_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        throw DomainError("log_binomial: k > n");
    }
    k = std::min(k, n - k);
    if (k == 0) {
        return 0.0;
    }
    if (double exact = 0.0; exact_binomial(n, k, exact)) {
        return std::log(exact);
    }
    const auto nd = static_cast<double>(n);
    const auto kd = static_cast<double>(k);
    return log_gamma(nd + 1.0) - log_gamma(kd + 1.0) - log_gamma(nd - kd + 1.0);
}

double log_sum_exp(std::span<const double> terms)
{
    if (terms.empty()) {
        return -std::numeric_limits<double>::infinity();
    }
    const double peak = *std::max_element(terms.begin(), terms.end());
    if (!std::isfinite(peak)) {
        return peak;
    }
    CompensatedSum sum;
    for (double t : terms) {
        sum.add(std::exp(t - peak));
    }
    return peak + std::log(sum.value());
}

double one_minus_flip_power(double p, std::uint64_t j)
{
    const auto jd = static_cast<double>(j);
    if (p == 0.5) {
        return 1.0;
    }
    if (p < 0.5) {
        return -std::expm1(jd * std::log1p(-2.0 * p));
    }
    // 1 - 2p < 0: the power alternates in sign.
    const double magnitude = std::exp(jd * std::log(2.0 * p - 1.0));
    return (j % 2 == 0) ? 1.0 - magnitude : 1.0 + magnitude;
}

double log_expm1(double x)
{
    if (x > 30.0) {
        return x + std::log1p(-std::exp(-x));
    }
    return std::log(std::expm1(x));
}

double log1m_exp(double x)
{
    // Maechler's split point.
    return (x > -kLn2) ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x));
}

} // namespace plateau
