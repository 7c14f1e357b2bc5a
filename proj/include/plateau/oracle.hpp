#pragma once

// Ground truth from absorbing Markov chains, independent of the Fourier formulas.

#include "plateau/bitstring.hpp"
#include "plateau/group_walk.hpp"
#include "plateau/problem.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace plateau {

inline constexpr std::size_t kFullStateCap = 12;
inline constexpr std::size_t kLumpedCap = 512;
inline constexpr std::size_t kChainCap = 14;

/// Transient part of an absorbing chain in "outflow" form: off-diagonal transition
/// probabilities between transient states plus the probability of leaving the
/// transient set. Self-loops are implicit.
struct AbsorbingSystem {
    std::size_t size = 0;
    std::vector<double> transition; ///< row-major size x size, diagonal ignored
    std::vector<double> exit;       ///< per state
    std::vector<double> rhs;        ///< per state; 1 plus any known exit-target contribution

    explicit AbsorbingSystem(std::size_t n) : size(n), transition(n * n, 0.0), exit(n, 0.0), rhs(n, 1.0) {}
    [[nodiscard]] double& at(std::size_t i, std::size_t j) { return transition[i * size + j]; }
    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return transition[i * size + j]; }
};

struct AbsorbingSolution {
    std::vector<double> values;
    /// Componentwise backward error max_i |r_i| / (|A||h| + |b|)_i.
    double backward_error = 0.0;
};

/// Solves (I - Q) h = rhs by subtraction-free elimination with iterative refinement.
/// Throws InternalError if a pivot vanishes or the backward error stays above 1e-9.
[[nodiscard]] AbsorbingSolution solve_absorbing(AbsorbingSystem system);

/// E_x[tau_target] for every start x in Z_2^l, indexed by the packed word of x.
/// Target defaults to 1^l. Requires l <= kFullStateCap.
[[nodiscard]] std::vector<double> full_state_hitting_times(std::size_t ell, MutationRate p);
[[nodiscard]] std::vector<double> full_state_hitting_times(const BitString& target, MutationRate p);

/// Hamming-distance-to-target chain for bitwise mutation.
struct LumpedChain {
    std::size_t ell = 0;
    MutationRate p{0.5};
    std::vector<double> transition; ///< (l+1) x (l+1), row-major, row d = current distance

    [[nodiscard]] double at(std::size_t from, std::size_t to) const { return transition[from * (ell + 1) + to]; }
};

[[nodiscard]] LumpedChain build_lumped_chain(std::size_t ell, MutationRate p);

/// Expected hitting time of the target from every Hamming distance d in [0, l].
[[nodiscard]] std::vector<double> lumped_hitting_times(std::size_t ell, MutationRate p);

/// Expected (1+1) EA runtime from a uniform start, solved on the full 2^n-state
/// elitist chain. Requires n <= kChainCap and rates.size() == spec.levels().
[[nodiscard]] double lo_chain_time(const ProblemSpec& spec, std::span<const MutationRate> rates);
[[nodiscard]] double lo_chain_time(const ProblemSpec& spec, const MutationSchedule& schedule);

} // namespace plateau
