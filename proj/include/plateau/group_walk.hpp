#pragma once

// The walk on Z_2^l driven by independent bit flips, its characters, and the
// Fourier transform of the step distribution.

#include "plateau/bitstring.hpp"

#include <cstddef>
#include <utility>

namespace plateau {

/// Largest l for which explicit sums over all 2^l group elements are allowed.
inline constexpr std::size_t kEnumerationCap = 24;

/// Per-bit flip probability, restricted to the open interval (0, 1).
class MutationRate {
public:
    explicit MutationRate(double p);
    [[nodiscard]] double value() const noexcept { return p_; }
    friend bool operator==(MutationRate, MutationRate) = default;

private:
    double p_;
};

/// rho_v(w) = (-1)^{<v, w>}.
class Character {
public:
    explicit Character(BitString index) : index_(std::move(index)) {}
    [[nodiscard]] const BitString& index() const noexcept { return index_; }
    [[nodiscard]] int operator()(const BitString& w) const;

private:
    BitString index_;
};

/// Probability that one mutation step adds w: p^|w| (1-p)^(l-|w|).
[[nodiscard]] double mu_mass(const BitString& w, MutationRate p);

/// +1 or -1; throws DomainError when lengths differ.
[[nodiscard]] int character_eval(const BitString& v, const BitString& w);

/// Fourier coefficient of the step distribution at rho_v: (1 - 2p)^|v|.
[[nodiscard]] double fourier_mu(const BitString& v, MutationRate p);

/// Expected number of steps for the walk started at 0 to first reach g,
/// evaluated as the character sum over all nontrivial v. Needs len(g) <= kEnumerationCap.
[[nodiscard]] double hitting_time_from_zero(const BitString& g, MutationRate p);

} // namespace plateau
