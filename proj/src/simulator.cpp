#include "plateau/simulator.hpp"

#include "plateau/errors.hpp"
#include "plateau/runtime_formulas.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

namespace plateau {

namespace {

constexpr std::uint64_t kChunk = 1024;
constexpr double kCapMultiplier = 1e4;
constexpr std::uint64_t kFallbackCap = 1'000'000'000;

std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t cap_from_expectation(double expected)
{
    const double cap = std::ceil(kCapMultiplier * expected);
    if (!std::isfinite(cap) || cap >= 1e18) {
        return kFallbackCap;
    }
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(cap));
}

// Moments of one contiguous range of trials, accumulated in trial order.
struct Moments {
    std::uint64_t count = 0;
    std::uint64_t capped = 0;
    double mean = 0.0;
    double m2 = 0.0;
    std::vector<double> level_sums;

    void add(const TrialOutcome& t)
    {
        if (t.capped) {
            ++capped;
            return;
        }
        ++count;
        const auto x = static_cast<double>(t.iterations);
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
        if (level_sums.size() < t.per_level.size()) {
            level_sums.resize(t.per_level.size(), 0.0);
        }
        for (std::size_t m = 0; m < t.per_level.size(); ++m) {
            level_sums[m] += static_cast<double>(t.per_level[m]);
        }
    }

    // Chan et al. pairwise combination.
    void merge(const Moments& o)
    {
        capped += o.capped;
        if (o.count == 0) {
            return;
        }
        if (level_sums.size() < o.level_sums.size()) {
            level_sums.resize(o.level_sums.size(), 0.0);
        }
        for (std::size_t m = 0; m < o.level_sums.size(); ++m) {
            level_sums[m] += o.level_sums[m];
        }
        if (count == 0) {
            count = o.count;
            mean = o.mean;
            m2 = o.m2;
            return;
        }
        const auto na = static_cast<double>(count);
        const auto nb = static_cast<double>(o.count);
        const double delta = o.mean - mean;
        count += o.count;
        mean += delta * nb / (na + nb);
        m2 += o.m2 + delta * delta * na * nb / (na + nb);
    }
};

template <typename TrialFn>
SimulationReport simulate_trials(std::uint64_t trials, std::uint64_t master_seed, std::uint64_t cap,
                                 unsigned threads, bool keep, std::size_t levels, TrialFn&& trial_fn)
{
    if (trials == 0) {
        throw DomainError("simulation needs at least one trial");
    }
    if (cap == 0) {
        throw DomainError("iteration cap must be at least 1");
    }
    SimulationReport report;
    report.iteration_cap = cap;
    report.master_seed = master_seed;
    if (keep) {
        report.trial_iterations.assign(trials, 0);
    }

    const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
    std::vector<Moments> partial(chunks);
    std::atomic<std::uint64_t> next{0};
    const auto worker = [&] {
        for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
            Moments local;
            const std::uint64_t end = std::min(trials, (c + 1) * kChunk);
            for (std::uint64_t i = c * kChunk; i < end; ++i) {
                Engine rng(trial_stream_seed(master_seed, i));
                const TrialOutcome outcome = trial_fn(rng);
                if (keep) {
                    report.trial_iterations[i] = outcome.iterations;
                }
                local.add(outcome);
            }
            partial[c] = std::move(local);
        }
    };

    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(threads == 0 ? default_thread_count() : threads, chunks));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }

    Moments total;
    for (const auto& m : partial) {
        total.merge(m);
    }
    report.trials_completed = total.count;
    report.capped_trials = total.capped;
    report.mean = total.mean;
    report.std_error = total.count > 1
                           ? std::sqrt(total.m2 / static_cast<double>(total.count - 1) / static_cast<double>(total.count))
                           : 0.0;
    report.per_level_means.assign(levels, 0.0);
    if (total.count > 0) {
        for (std::size_t m = 0; m < levels && m < total.level_sums.size(); ++m) {
            report.per_level_means[m] = total.level_sums[m] / static_cast<double>(total.count);
        }
    }
    return report;
}

void randomize(BitString& x, Engine& rng)
{
    auto words = x.words();
    for (auto& w : words) {
        w = rng();
    }
    if (const auto tail = x.size() % 64; tail != 0) {
        words.back() &= (std::uint64_t{1} << tail) - 1;
    }
}

// Undo list for in-place mutation.
class FlipLog {
public:
    void clear() { positions_.clear(); }
    void record(std::size_t i) { positions_.push_back(i); }
    void undo(BitString& x) const
    {
        for (auto i : positions_) {
            x.flip(i);
        }
    }
    [[nodiscard]] bool contains(std::size_t i) const
    {
        return std::find(positions_.begin(), positions_.end(), i) != positions_.end();
    }

private:
    std::vector<std::size_t> positions_;
};

class LoggedMutation {
public:
    LoggedMutation(std::size_t length, MutationRate p)
        : length_(length), binomial_path_(p.value() * static_cast<double>(length) < 8.0),
          count_(length, p.value()), position_(0, length - 1), flip_(p.value())
    {
    }

    std::size_t apply(BitString& x, Engine& rng) { return binomial_path_ ? binomial(x, rng) : bernoulli(x, rng); }

    std::size_t binomial(BitString& x, Engine& rng)
    {
        log_.clear();
        const std::size_t k = count_(rng);
        for (std::size_t done = 0; done < k;) {
            const std::size_t i = position_(rng);
            if (log_.contains(i)) {
                continue;
            }
            x.flip(i);
            log_.record(i);
            ++done;
        }
        return k;
    }

    std::size_t bernoulli(BitString& x, Engine& rng)
    {
        log_.clear();
        std::size_t k = 0;
        for (std::size_t i = 0; i < length_; ++i) {
            if (flip_(rng)) {
                x.flip(i);
                log_.record(i);
                ++k;
            }
        }
        return k;
    }

    void undo(BitString& x) const { log_.undo(x); }
    [[nodiscard]] bool binomial_path() const noexcept { return binomial_path_; }

private:
    std::size_t length_;
    bool binomial_path_;
    std::binomial_distribution<std::size_t> count_;
    std::uniform_int_distribution<std::size_t> position_;
    std::bernoulli_distribution flip_;
    FlipLog log_;
};

} // namespace

unsigned default_thread_count()
{
    if (const char* env = std::getenv("PLATEAU_RT_THREADS"); env != nullptr) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t trial_stream_seed(std::uint64_t master_seed, std::uint64_t trial) noexcept
{
    return mix64(mix64(master_seed) + (trial + 1) * 0x9E3779B97F4A7C15ULL);
}

BitFlipMutation::BitFlipMutation(std::size_t length, MutationRate p)
    : length_(length), p_(p.value()), binomial_path_(p.value() * static_cast<double>(length) < 8.0),
      count_(length, p.value()), position_(0, length == 0 ? 0 : length - 1), flip_(p.value())
{
    if (length == 0) {
        throw DomainError("mutation needs a non-empty string");
    }
}

std::size_t BitFlipMutation::apply(BitString& x, Engine& rng)
{
    return binomial_path_ ? apply_binomial(x, rng) : apply_bernoulli(x, rng);
}

std::size_t BitFlipMutation::apply_binomial(BitString& x, Engine& rng)
{
    const std::size_t k = count_(rng);
    BitString mask(length_);
    for (std::size_t done = 0; done < k;) {
        const std::size_t i = position_(rng);
        if (mask[i]) {
            continue;
        }
        mask.set(i, true);
        ++done;
    }
    x ^= mask;
    return k;
}

std::size_t BitFlipMutation::apply_bernoulli(BitString& x, Engine& rng)
{
    std::size_t k = 0;
    for (std::size_t i = 0; i < length_; ++i) {
        if (flip_(rng)) {
            x.flip(i);
            ++k;
        }
    }
    return k;
}

TrialOutcome run_trial(const ProblemSpec& spec, std::span<const MutationRate> rates, std::uint64_t cap, Engine& rng,
                       const std::function<void(std::size_t)>& on_iteration)
{
    const std::size_t levels = spec.levels();
    if (rates.size() != levels) {
        throw DomainError("run_trial: schedule length differs from n/l");
    }
    TrialOutcome out;
    out.per_level.assign(levels, 0);

    BitString x(spec.n());
    randomize(x, rng);
    std::size_t fitness = spec.fitness(x);
    std::vector<std::optional<LoggedMutation>> mutation(levels);

    while (fitness < levels) {
        if (out.iterations >= cap) {
            out.capped = true;
            break;
        }
        auto& op = mutation[fitness];
        if (!op) {
            op.emplace(spec.n(), rates[fitness]);
        }
        op->apply(x, rng);
        ++out.per_level[fitness];
        ++out.iterations;
        const std::size_t candidate = spec.fitness(x);
        if (candidate >= fitness) {
            fitness = candidate;
        } else {
            op->undo(x);
        }
        if (on_iteration) {
            on_iteration(fitness);
        }
    }
    return out;
}

SimulationReport run(const SimulationConfig& config)
{
    const auto rates = config.schedule.resolve(config.spec);
    const std::uint64_t cap =
        config.iteration_cap.value_or(cap_from_expectation(exact_runtime(config.spec, rates).value));
    return simulate_trials(config.trials, config.master_seed, cap, config.threads, config.keep_trial_iterations,
                           config.spec.levels(),
                           [&](Engine& rng) { return run_trial(config.spec, rates, cap, rng); });
}

SimulationReport run_block(std::uint64_t k, std::uint64_t ell, MutationRate p, std::uint64_t trials,
                           std::uint64_t seed, std::optional<std::uint64_t> iteration_cap, unsigned threads)
{
    if (ell == 0) {
        throw DomainError("block length must be at least 1");
    }
    const std::uint64_t cap = iteration_cap.value_or(cap_from_expectation(block_time(k, ell, p).value));
    const std::size_t length = k + ell;
    const auto trial = [&](Engine& rng) {
        TrialOutcome out;
        BitString x = BitString::ones(length);
        std::bernoulli_distribution coin(0.5);
        do {
            for (std::size_t i = k; i < length; ++i) {
                x.set(i, coin(rng));
            }
        } while (x.all_ones());

        LoggedMutation op(length, p);
        while (!x.all_ones()) {
            if (out.iterations >= cap) {
                out.capped = true;
                break;
            }
            op.apply(x, rng);
            ++out.iterations;
            if (x.leading_ones() < k) {
                op.undo(x); // a locked bit flipped: fitness would drop
            }
        }
        out.per_level.assign(1, out.iterations);
        return out;
    };
    return simulate_trials(trials, seed, cap, threads, true, 1, trial);
}

void write_trials_csv(const SimulationReport& report, std::ostream& out)
{
    out << "trial,iterations\n";
    for (std::size_t i = 0; i < report.trial_iterations.size(); ++i) {
        out << i << ',' << report.trial_iterations[i] << '\n';
    }
}

} // namespace plateau
