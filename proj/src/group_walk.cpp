#include "plateau/group_walk.hpp"

#include "plateau/errors.hpp"
#include "plateau/numeric.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace plateau {

MutationRate::MutationRate(double p) : p_(p)
{
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("mutation rate must lie in (0, 1), got " + std::to_string(p));
    }
}

int Character::operator()(const BitString& w) const { return character_eval(index_, w); }

double mu_mass(const BitString& w, MutationRate p)
{
    const auto flipped = static_cast<double>(w.hamming_weight());
    const auto kept = static_cast<double>(w.size()) - flipped;
    return std::pow(p.value(), flipped) * std::pow(1.0 - p.value(), kept);
}

int character_eval(const BitString& v, const BitString& w)
{
    if (v.size() != w.size()) {
        throw DomainError("character_eval: length mismatch");
    }
    unsigned parity = 0;
    const auto vw = v.words();
    const auto ww = w.words();
    for (std::size_t i = 0; i < vw.size(); ++i) {
        parity ^= static_cast<unsigned>(std::popcount(vw[i] & ww[i])) & 1u;
    }
    return parity ? -1 : 1;
}

double fourier_mu(const BitString& v, MutationRate p)
{
    return std::pow(1.0 - 2.0 * p.value(), static_cast<double>(v.hamming_weight()));
}

double hitting_time_from_zero(const BitString& g, MutationRate p)
{
    const std::size_t ell = g.size();
    if (ell > kEnumerationCap) {
        throw CapacityError("hitting_time_from_zero: l = " + std::to_string(ell) +
                            " exceeds the enumeration cap of " + std::to_string(kEnumerationCap) +
                            "; use the weight-grouped runtime formulas instead");
    }
    // 1/(1 - mu^(rho_v)) depends on v only through |v|.
    std::vector<double> inverse_gap(ell + 1, 0.0);
    for (std::size_t j = 1; j <= ell; ++j) {
        inverse_gap[j] = 1.0 / one_minus_flip_power(p.value(), j);
    }
    const std::uint64_t target = g.to_word();
    const std::uint64_t count = std::uint64_t{1} << ell;
    CompensatedSum sum;
    for (std::uint64_t v = 1; v < count; ++v) {
        if (std::popcount(v & target) & 1) {
            // (1 - rho_v(g)) = 2
            sum.add(2.0 * inverse_gap[static_cast<std::size_t>(std::popcount(v))]);
        }
    }
    return sum.value();
}

} // namespace plateau
