#pragma once

// Seeded Monte Carlo runs of the (1+1) EA.

#include "plateau/bitstring.hpp"
#include "plateau/problem.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <vector>

namespace plateau {

struct SimulationConfig {
    ProblemSpec spec = ProblemSpec::needle(1);
    MutationSchedule schedule = MutationSchedule::static_rate(MutationRate{0.5});
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    /// Defaults to 1e4 times the exact expectation (1e9 if unavailable).
    std::optional<std::uint64_t> iteration_cap;
    /// Worker threads; 0 means default_thread_count().
    unsigned threads = 0;
    bool keep_trial_iterations = false;
};

struct SimulationReport {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials_completed = 0;
    std::uint64_t capped_trials = 0;
    std::uint64_t iteration_cap = 0;
    std::uint64_t master_seed = 0;
    /// Mean iterations spent at each fitness level (attributed to the level at the
    /// start of the iteration), over completed trials.
    std::vector<double> per_level_means;
    /// Iterations per trial in trial order (capped trials report the cap).
    std::vector<std::uint64_t> trial_iterations;
};

/// PLATEAU_RT_THREADS if set and positive, else hardware concurrency (at least 1).
[[nodiscard]] unsigned default_thread_count();

/// Seed of the generator used by trial `trial` under `master_seed`.
[[nodiscard]] std::uint64_t trial_stream_seed(std::uint64_t master_seed, std::uint64_t trial) noexcept;

using Engine = std::mt19937_64;

/// Standard bit mutation: flips each bit independently with probability p.
/// Switches between binomial-count sampling and per-bit Bernoulli by p * len.
class BitFlipMutation {
public:
    BitFlipMutation(std::size_t length, MutationRate p);

    /// XORs a fresh flip mask into x; returns the number of flipped bits.
    std::size_t apply(BitString& x, Engine& rng);

    /// Forces one sampling path (for distribution tests).
    std::size_t apply_binomial(BitString& x, Engine& rng);
    std::size_t apply_bernoulli(BitString& x, Engine& rng);

    [[nodiscard]] bool uses_binomial_path() const noexcept { return binomial_path_; }

private:
    std::size_t length_;
    double p_;
    bool binomial_path_;
    std::binomial_distribution<std::size_t> count_;
    std::uniform_int_distribution<std::size_t> position_;
    std::bernoulli_distribution flip_;
};

struct TrialOutcome {
    std::uint64_t iterations = 0;
    bool capped = false;
    std::vector<std::uint64_t> per_level;
};

/// One run of the (1+1) EA from a uniform start. `on_iteration` (optional) sees the
/// fitness held after each iteration.
[[nodiscard]] TrialOutcome run_trial(const ProblemSpec& spec, std::span<const MutationRate> rates,
                                     std::uint64_t cap, Engine& rng,
                                     const std::function<void(std::size_t)>& on_iteration = {});

[[nodiscard]] SimulationReport run(const SimulationConfig& config);

/// k locked ones followed by one uniformly random, non-optimal block of length l;
/// counts iterations until the block is all ones with the prefix intact.
[[nodiscard]] SimulationReport run_block(std::uint64_t k, std::uint64_t ell, MutationRate p,
                                         std::uint64_t trials, std::uint64_t seed,
                                         std::optional<std::uint64_t> iteration_cap = std::nullopt,
                                         unsigned threads = 0);

/// `trial,iterations` CSV with LF endings.
void write_trials_csv(const SimulationReport& report, std::ostream& out);

} // namespace plateau
