#include "plateau/oracle.hpp"

#include "plateau/errors.hpp"
#include "plateau/numeric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace plateau {

namespace {

constexpr double kBackwardErrorLimit = 1e-9;
constexpr int kRefinementSteps = 3;
constexpr double kRefineAbove = 1e-13;

// Factorization produced by eliminating states from the highest index down. Each
// elimination folds the removed state's flows into the survivors; the diagonal is
// always recomputed as the total outflow, so no subtraction ever happens.
class OutflowFactorization {
public:
    explicit OutflowFactorization(AbsorbingSystem system) : sys_(std::move(system)), pivot_(sys_.size, 0.0)
    {
        const std::size_t n = sys_.size;
        for (std::size_t i = 0; i < n; ++i) {
            sys_.at(i, i) = 0.0;
        }
        for (std::size_t k = n; k-- > 0;) {
            CompensatedSum outflow;
            outflow.add(sys_.exit[k]);
            for (std::size_t j = 0; j < k; ++j) {
                outflow.add(sys_.at(k, j));
            }
            const double d = outflow.value();
            if (!(d > 0.0)) {
                throw InternalError("absorbing system is singular: state " + std::to_string(k) +
                                    " cannot leave its class");
            }
            pivot_[k] = d;
            const double* row_k = &sys_.transition[k * n];
            for (std::size_t i = 0; i < k; ++i) {
                const double w = sys_.at(i, k);
                if (w == 0.0) {
                    continue;
                }
                const double f = w / d;
                double* row_i = &sys_.transition[i * n];
                for (std::size_t j = 0; j < k; ++j) {
                    row_i[j] += f * row_k[j];
                }
                sys_.exit[i] += f * sys_.exit[k];
            }
        }
    }

    [[nodiscard]] std::vector<double> solve(std::vector<double> rhs) const
    {
        const std::size_t n = sys_.size;
        for (std::size_t k = n; k-- > 0;) {
            if (rhs[k] == 0.0) {
                continue;
            }
            const double scaled = rhs[k] / pivot_[k];
            for (std::size_t i = 0; i < k; ++i) {
                rhs[i] += sys_.at(i, k) * scaled;
            }
        }
        std::vector<double> h(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            CompensatedSum acc;
            acc.add(rhs[k]);
            const double* row_k = &sys_.transition[k * n];
            for (std::size_t j = 0; j < k; ++j) {
                acc.add(row_k[j] * h[j]);
            }
            h[k] = acc.value() / pivot_[k];
        }
        return h;
    }

private:
    AbsorbingSystem sys_;
    std::vector<double> pivot_;
};

struct Residual {
    std::vector<double> r;
    double backward_error = 0.0;
};

// r = b - A h in outflow form: A h at row i is exit_i h_i + sum_j q_ij (h_i - h_j).
// Backward error is the componentwise (Oettli-Prager) measure max_i |r_i| / (|A||h| + |b|)_i.
Residual residual(const AbsorbingSystem& sys, const std::vector<double>& h)
{
    const std::size_t n = sys.size;
    Residual out;
    out.r.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long double hi = h[i];
        long double acc = static_cast<long double>(sys.exit[i]) * hi;
        long double scale = std::abs(static_cast<long double>(sys.rhs[i])) + std::abs(acc);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            const long double q = sys.at(i, j);
            acc += q * (hi - h[j]);
            scale += q * (std::abs(hi) + std::abs(static_cast<long double>(h[j])));
        }
        const long double r = static_cast<long double>(sys.rhs[i]) - acc;
        out.r[i] = static_cast<double>(r);
        if (scale > 0.0L) {
            out.backward_error = std::max(out.backward_error, static_cast<double>(std::abs(r) / scale));
        }
    }
    return out;
}

std::vector<double> flip_mass_by_weight(std::size_t length, MutationRate p)
{
    std::vector<double> mass(length + 1);
    for (std::size_t w = 0; w <= length; ++w) {
        mass[w] = std::pow(p.value(), static_cast<double>(w)) *
                  std::pow(1.0 - p.value(), static_cast<double>(length - w));
    }
    return mass;
}

} // namespace

AbsorbingSolution solve_absorbing(AbsorbingSystem system)
{
    if (system.size == 0) {
        return {};
    }
    const OutflowFactorization factorization(system);
    AbsorbingSolution out;
    out.values = factorization.solve(system.rhs);
    auto res = residual(system, out.values);
    // The elimination is already accurate to a few ulps per entry; refinement only
    // runs when the solve visibly missed, since on badly conditioned chains it adds noise.
    for (int step = 0; step < kRefinementSteps && res.backward_error > kRefineAbove; ++step) {
        const auto correction = factorization.solve(res.r);
        std::vector<double> candidate = out.values;
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            candidate[i] += correction[i];
        }
        auto next = residual(system, candidate);
        if (!(next.backward_error < res.backward_error)) {
            break;
        }
        out.values = std::move(candidate);
        res = std::move(next);
    }
    out.backward_error = res.backward_error;
    if (!(res.backward_error <= kBackwardErrorLimit)) {
        throw InternalError("absorbing solve: backward error " + std::to_string(res.backward_error) +
                            " above 1e-9");
    }
    return out;
}

std::vector<double> full_state_hitting_times(std::size_t ell, MutationRate p)
{
    return full_state_hitting_times(BitString::ones(ell), p);
}

std::vector<double> full_state_hitting_times(const BitString& target, MutationRate p)
{
    const std::size_t ell = target.size();
    if (ell > kFullStateCap) {
        throw CapacityError("full-state oracle supports l <= " + std::to_string(kFullStateCap));
    }
    const std::uint64_t states = std::uint64_t{1} << ell;
    const std::uint64_t t = target.to_word();
    const auto index = [t](std::uint64_t x) { return static_cast<std::size_t>(x < t ? x : x - 1); };
    const auto mass = flip_mass_by_weight(ell, p);

    AbsorbingSystem sys(states - 1);
    for (std::uint64_t x = 0; x < states; ++x) {
        if (x == t) {
            continue;
        }
        const std::size_t i = index(x);
        for (std::uint64_t y = 0; y < states; ++y) {
            if (y == x) {
                continue;
            }
            const double prob = mass[static_cast<std::size_t>(std::popcount(x ^ y))];
            if (y == t) {
                sys.exit[i] = prob;
            } else {
                sys.at(i, index(y)) = prob;
            }
        }
    }
    const auto solution = solve_absorbing(std::move(sys));
    std::vector<double> h(states, 0.0);
    for (std::uint64_t x = 0; x < states; ++x) {
        if (x != t) {
            h[x] = solution.values[index(x)];
        }
    }
    return h;
}

LumpedChain build_lumped_chain(std::size_t ell, MutationRate p)
{
    if (ell == 0 || ell > kLumpedCap) {
        throw CapacityError("lumped oracle supports 1 <= l <= " + std::to_string(kLumpedCap));
    }
    const std::size_t width = ell + 1;
    std::vector<double> log_c(width * width, 0.0);
    for (std::size_t n = 0; n <= ell; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            log_c[n * width + k] = log_binomial(n, k);
        }
    }
    const double log_p = std::log(p.value());
    const double log_q = std::log1p(-p.value());

    LumpedChain chain;
    chain.ell = ell;
    chain.p = p;
    chain.transition.assign(width * width, 0.0);
    for (std::size_t d = 0; d <= ell; ++d) {
        const std::size_t right = ell - d;
        for (std::size_t to = 0; to <= ell; ++to) {
            // Fix k1 of the d wrong bits and k2 = to - d + k1 of the right bits.
            CompensatedSum sum;
            for (std::size_t k1 = 0; k1 <= d; ++k1) {
                const auto k2_signed = static_cast<long long>(to) - static_cast<long long>(d) + static_cast<long long>(k1);
                if (k2_signed < 0 || k2_signed > static_cast<long long>(right)) {
                    continue;
                }
                const auto k2 = static_cast<std::size_t>(k2_signed);
                const auto flips = static_cast<double>(k1 + k2);
                const double ln = log_c[d * width + k1] + log_c[right * width + k2] + flips * log_p +
                                  (static_cast<double>(ell) - flips) * log_q;
                sum.add(std::exp(ln));
            }
            chain.transition[d * width + to] = sum.value();
        }
    }
    return chain;
}

std::vector<double> lumped_hitting_times(std::size_t ell, MutationRate p)
{
    const auto chain = build_lumped_chain(ell, p);
    AbsorbingSystem sys(ell);
    for (std::size_t d = 1; d <= ell; ++d) {
        sys.exit[d - 1] = chain.at(d, 0);
        for (std::size_t to = 1; to <= ell; ++to) {
            if (to != d) {
                sys.at(d - 1, to - 1) = chain.at(d, to);
            }
        }
    }
    const auto solution = solve_absorbing(std::move(sys));
    std::vector<double> h(ell + 1, 0.0);
    std::copy(solution.values.begin(), solution.values.end(), h.begin() + 1);
    return h;
}

double lo_chain_time(const ProblemSpec& spec, std::span<const MutationRate> rates)
{
    const std::size_t n = spec.n();
    const std::size_t ell = spec.ell();
    if (n > kChainCap) {
        throw CapacityError("chain oracle supports n <= " + std::to_string(kChainCap));
    }
    if (rates.size() != spec.levels()) {
        throw DomainError("chain oracle: schedule length differs from n/l");
    }
    const std::uint64_t states = std::uint64_t{1} << n;
    const std::size_t top = spec.levels();
    const auto fitness = [&](std::uint64_t x) {
        return std::min<std::size_t>(static_cast<std::size_t>(std::countr_one(x)), n) / ell;
    };

    std::vector<std::vector<std::uint64_t>> by_level(top + 1);
    for (std::uint64_t x = 0; x < states; ++x) {
        by_level[fitness(x)].push_back(x);
    }
    std::vector<double> h(states, 0.0);
    std::vector<std::size_t> position(states, 0);

    for (std::size_t m = top; m-- > 0;) {
        const auto& members = by_level[m];
        for (std::size_t i = 0; i < members.size(); ++i) {
            position[members[i]] = i;
        }
        const auto mass = flip_mass_by_weight(n, rates[m]);
        AbsorbingSystem sys(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            const std::uint64_t x = members[i];
            CompensatedSum exit;
            CompensatedSum rhs;
            rhs.add(1.0);
            for (std::uint64_t mask = 1; mask < states; ++mask) {
                const std::uint64_t y = x ^ mask;
                const std::size_t fy = fitness(y);
                if (fy < m) {
                    continue; // rejected: offspring is worse
                }
                const double prob = mass[static_cast<std::size_t>(std::popcount(mask))];
                if (fy == m) {
                    sys.at(i, position[y]) = prob;
                } else {
                    exit.add(prob);
                    rhs.add(prob * h[y]);
                }
            }
            sys.exit[i] = exit.value();
            sys.rhs[i] = rhs.value();
        }
        const auto solution = solve_absorbing(std::move(sys));
        for (std::size_t i = 0; i < members.size(); ++i) {
            h[members[i]] = solution.values[i];
        }
    }
    CompensatedSum total;
    for (double v : h) {
        total.add(v);
    }
    return total.value() / static_cast<double>(states);
}

double lo_chain_time(const ProblemSpec& spec, const MutationSchedule& schedule)
{
    const auto rates = schedule.resolve(spec);
    return lo_chain_time(spec, rates);
}

} // namespace plateau
