#pragma once

#include <cstdint>
#include <span>

namespace plateau {

/// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept;
    [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// ln C(n, k); exact integer evaluation while it fits, log-gamma beyond.
[[nodiscard]] double log_binomial(std::uint64_t n, std::uint64_t k);

/// ln(sum exp(terms)), with compensated accumulation of the shifted exponentials.
[[nodiscard]] double log_sum_exp(std::span<const double> terms);

/// 1 - (1 - 2p)^j for p in (0, 1), j >= 1. Accurate for small p (no cancellation).
[[nodiscard]] double one_minus_flip_power(double p, std::uint64_t j);

/// ln(e^x - 1) for x > 0 without overflow.
[[nodiscard]] double log_expm1(double x);

/// ln(1 - e^x) for x < 0.
[[nodiscard]] double log1m_exp(double x);

inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

} // namespace plateau
