#include "plateau/errors.hpp"
#include "plateau/oracle.hpp"
#include "plateau/runtime_formulas.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>

using namespace plateau;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("full-state examples")
{
    const auto h1 = full_state_hitting_times(1, MutationRate{0.25});
    CHECK(h1[0] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(h1[1] == 0.0);

    const auto h2 = full_state_hitting_times(2, MutationRate{0.5});
    for (std::size_t x = 0; x < 3; ++x) {
        CHECK(h2[x] == doctest::Approx(4.0).epsilon(1e-14));
    }
    CHECK(h2[3] == 0.0);
}

TEST_CASE("full-state with an arbitrary target")
{
    const auto h = full_state_hitting_times(BitString::from_string("010"), MutationRate{0.2});
    // word of "010" has bit 1 set
    CHECK(h[0b010] == 0.0);
    CHECK(rel(h[0b101], full_state_hitting_times(3, MutationRate{0.2})[0]) <= 1e-12);
}

TEST_CASE("lumped chain rows are stochastic")
{
    for (std::size_t ell : {1, 2, 7, 64, 300, 512}) {
        for (double p : {1e-4, 0.05, 0.5, 0.93}) {
            const auto chain = build_lumped_chain(ell, MutationRate{p});
            for (std::size_t d = 0; d <= ell; ++d) {
                double row = 0.0;
                for (std::size_t e = 0; e <= ell; ++e) {
                    REQUIRE(chain.at(d, e) >= 0.0);
                    row += chain.at(d, e);
                }
                REQUIRE(std::abs(row - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("lumped transition entries")
{
    const double p = 0.3;
    const auto chain = build_lumped_chain(2, MutationRate{p});
    CHECK(chain.at(1, 0) == doctest::Approx(p * (1 - p)));
    CHECK(chain.at(1, 2) == doctest::Approx(p * (1 - p)));
    CHECK(chain.at(1, 1) == doctest::Approx((1 - p) * (1 - p) + p * p));
    CHECK(chain.at(2, 0) == doctest::Approx(p * p));
}

TEST_CASE("lumped and full-state solves agree class-wise")
{
    for (std::size_t ell = 1; ell <= 10; ++ell) {
        for (double p : {0.5 / static_cast<double>(ell), 0.3, 0.5}) {
            const auto full = full_state_hitting_times(ell, MutationRate{p});
            const auto lumped = lumped_hitting_times(ell, MutationRate{p});
            CHECK(lumped[0] == 0.0);
            for (std::uint64_t x = 0; x + 1 < full.size(); ++x) {
                const auto d = ell - static_cast<std::size_t>(std::popcount(x));
                REQUIRE(rel(lumped[d], full[x]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("lumped average reproduces the needle formula")
{
    for (auto [ell, p] : {std::pair{100UL, 0.02}, {300UL, 1.0 / 300}, {512UL, 1.0 / 512}, {40UL, 0.4}}) {
        const auto h = lumped_hitting_times(ell, MutationRate{p});
        double sum = 0.0;
        for (std::size_t d = 1; d <= ell; ++d) {
            sum += std::exp(std::lgamma(ell + 1.0) - std::lgamma(d + 1.0) - std::lgamma(ell - d + 1.0) -
                            static_cast<double>(ell) * std::log(2.0)) *
                   h[d];
        }
        CAPTURE(ell);
        CHECK(rel(sum, needle_time_uniform_start(ell, MutationRate{p}).value) <=
              1e-8);
    }
}

TEST_CASE("elitist chain examples")
{
    CHECK(lo_chain_time(ProblemSpec::block_leading_ones(2, 1), MutationSchedule::static_rate(MutationRate{0.5})) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(lo_chain_time(ProblemSpec::block_leading_ones(4, 1), MutationSchedule::static_rate(MutationRate{0.25})) ==
          doctest::Approx(8.0 * (std::pow(0.75, -3) - 0.75)).epsilon(1e-12));

    const auto spec = ProblemSpec::block_leading_ones(6, 3);
    const auto sched = MutationSchedule::static_rate(MutationRate{1.0 / 6});
    CHECK(rel(lo_chain_time(spec, sched), blo_total_time(spec, sched).value) <= 1e-8);
}

TEST_CASE("elitist chain with a rate table and a needle spec")
{
    const auto spec = ProblemSpec::block_leading_ones(8, 2);
    const std::vector<MutationRate> rates{MutationRate{0.4}, MutationRate{0.1}, MutationRate{0.05}, MutationRate{0.3}};
    CHECK(rel(lo_chain_time(spec, rates), blo_total_time(spec, rates).value) <= 1e-8);

    const auto needle = ProblemSpec::needle(6);
    const std::vector<MutationRate> one{MutationRate{0.15}};
    CHECK(rel(lo_chain_time(needle, one), needle_time_uniform_start(6, MutationRate{0.15}).value) <= 1e-9);
}

TEST_CASE("capacity limits")
{
    CHECK_THROWS_AS((void)full_state_hitting_times(kFullStateCap + 1, MutationRate{0.1}), CapacityError);
    CHECK_THROWS_AS((void)lumped_hitting_times(kLumpedCap + 1, MutationRate{0.1}), CapacityError);
    CHECK_THROWS_AS((void)lo_chain_time(ProblemSpec::block_leading_ones(16, 1),
                                        MutationSchedule::static_rate(MutationRate{0.1})),
                    CapacityError);
}

TEST_CASE("absorbing solver")
{
    // 0 -> 1 with 0.5, 1 exits with 0.25
    AbsorbingSystem sys(2);
    sys.at(0, 1) = 0.5;
    sys.exit[1] = 0.25;
    const auto sol = solve_absorbing(sys);
    CHECK(sol.values[1] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(sol.values[0] == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(sol.backward_error <= 1e-12);

    AbsorbingSystem trapped(2);
    trapped.at(0, 1) = 1.0;
    trapped.at(1, 0) = 1.0;
    CHECK_THROWS_AS((void)solve_absorbing(trapped), InternalError);
}

TEST_CASE("solver residual on the full-state systems")
{
    for (std::size_t ell = 2; ell <= 10; ell += 4) {
        const MutationRate p{1.0 / static_cast<double>(ell)};
        AbsorbingSystem sys((std::size_t{1} << ell) - 1);
        for (std::size_t x = 0; x < sys.size; ++x) {
            for (std::size_t y = 0; y < sys.size; ++y) {
                if (x != y) {
                    const auto w = static_cast<int>(std::popcount(x ^ y));
                    sys.at(x, y) = std::pow(p.value(), w) * std::pow(1 - p.value(), static_cast<int>(ell) - w);
                }
            }
            const auto w = static_cast<int>(std::popcount(x ^ sys.size));
            sys.exit[x] = std::pow(p.value(), w) * std::pow(1 - p.value(), static_cast<int>(ell) - w);
        }
        CHECK(solve_absorbing(sys).backward_error <= 1e-12);
    }
}
