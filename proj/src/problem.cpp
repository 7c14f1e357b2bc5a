#include "plateau/problem.hpp"

#include "plateau/asymptotics.hpp"
#include "plateau/errors.hpp"

#include <string>

namespace plateau {

std::string_view to_string(ProblemKind kind) noexcept
{
    return kind == ProblemKind::Needle ? "needle" : "blo";
}

ProblemSpec::ProblemSpec(ProblemKind kind, std::size_t n, std::size_t ell) : kind_(kind), n_(n), ell_(ell)
{
    if (n == 0 || ell == 0) {
        throw DomainError("problem dimensions must be positive");
    }
    if (n % ell != 0) {
        throw DomainError("block length " + std::to_string(ell) + " does not divide n = " + std::to_string(n));
    }
}

ProblemSpec ProblemSpec::needle(std::size_t ell) { return ProblemSpec(ProblemKind::Needle, ell, ell); }

ProblemSpec ProblemSpec::block_leading_ones(std::size_t n, std::size_t ell)
{
    return ProblemSpec(ProblemKind::BlockLeadingOnes, n, ell);
}

std::size_t ProblemSpec::fitness(const BitString& x) const
{
    if (x.size() != n_) {
        throw DomainError("fitness: string length differs from n");
    }
    return x.leading_ones() / ell_;
}

std::vector<MutationRate> MutationSchedule::resolve(const ProblemSpec& spec) const
{
    const std::size_t levels = spec.levels();
    if (const auto* s = std::get_if<Static>(&variant_)) {
        return std::vector<MutationRate>(levels, s->rate);
    }
    if (const auto* t = std::get_if<Table>(&variant_)) {
        if (t->rates.size() != levels) {
            throw DomainError("rate table has " + std::to_string(t->rates.size()) + " entries, expected n/l = " +
                              std::to_string(levels));
        }
        return t->rates;
    }
    std::vector<MutationRate> rates;
    rates.reserve(levels);
    for (std::size_t m = 0; m < levels; ++m) {
        rates.push_back(optimal_adaptive_rate_exact(m, spec.ell()).rate);
    }
    return rates;
}

} // namespace plateau
