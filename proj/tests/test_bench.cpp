#include <numeric>

#include <gtest/gtest.h>

#include "wavenum/bench.hpp"
#include "wavenum/errors.hpp"
#include "wavenum/oracle.hpp"

using namespace wavenum;
using Primes = std::vector<std::uint64_t>;

namespace {

TEST(Wheel, Residues)
{
    EXPECT_EQ(bench::wheel_residues({2, 3, 5}), (Primes{1, 7, 11, 13, 17, 19, 23, 29}));
    EXPECT_EQ(bench::wheel_residues({2}), (Primes{1}));
    EXPECT_EQ(bench::wheel_residues({2, 3, 5, 7, 11, 13}).size(), 5760u);
    EXPECT_THROW(bench::wheel_residues({2, 3, 5, 7, 11, 13, 17, 19, 23}), CapacityError);
    EXPECT_THROW(bench::wheel_residues({2, 4}), DomainError);
}

TEST(Wheel, CandidateCountMatchesBruteForce)
{
    for (const Primes& wheel : {Primes{2}, Primes{2, 3}, Primes{2, 3, 5}, Primes{3, 7}})
        for (std::uint64_t limit : {1ull, 29ull, 30ull, 31ull, 1000ull, 12345ull}) {
            std::uint64_t brute = 0;
            for (std::uint64_t k = 1; k <= limit; ++k) {
                bool coprime = true;
                for (auto p : wheel)
                    coprime = coprime && k % p != 0;
                brute += coprime;
            }
            EXPECT_EQ(bench::wheel_candidate_count(wheel, limit), brute) << limit;
        }
}

TEST(Bench, MillionWithThreePrimeWheel)
{
    const bench::BenchReport r = bench::run_bench(1'000'000, {2, 3, 5});
    EXPECT_EQ(r.density, Rational(4, 15));
    EXPECT_EQ(r.wheel.candidates, 266'666u);
    EXPECT_EQ(r.baseline.candidates, 999'999u);
    EXPECT_EQ(r.baseline.primes_found, 78'498u);
    EXPECT_EQ(r.wheel.primes_found, 78'498u);
    EXPECT_TRUE(r.counts_agree);
    EXPECT_TRUE(r.period_exact);
    EXPECT_EQ(r.period, 30);
    EXPECT_EQ(r.period_candidates, 8u);
}

TEST(Bench, SmallWheels)
{
    const bench::BenchReport two = bench::run_bench(1000, {2});
    EXPECT_EQ(two.density, Rational(1, 2));
    EXPECT_EQ(two.wheel.candidates, 500u);
    EXPECT_TRUE(two.counts_agree);

    const bench::BenchReport six = bench::run_bench(30030, {13, 11, 7, 5, 3, 2});
    EXPECT_EQ(six.period_candidates, 5760u);
    EXPECT_EQ(six.expected_period_candidates, 5760);
    EXPECT_TRUE(six.period_exact);
    EXPECT_TRUE(six.counts_agree);
    EXPECT_EQ(six.wheel_primes, (Primes{2, 3, 5, 7, 11, 13}));
}

TEST(Bench, PeriodCandidatesEqualTotient)
{
    const Primes all{2, 3, 5, 7, 11, 13};
    for (std::size_t n = 1; n <= all.size(); ++n) {
        const Primes wheel(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
        const bench::BenchReport r = bench::run_bench(1000, wheel);
        const std::uint64_t period = to_u64(r.period);
        std::uint64_t phi = 0;
        for (std::uint64_t k = 1; k <= period; ++k)
            phi += std::gcd(k, period) == 1;
        EXPECT_EQ(r.period_candidates, phi) << "N=" << n;
        EXPECT_TRUE(r.period_exact);
        EXPECT_TRUE(r.counts_agree) << "N=" << n;
    }
}

TEST(Bench, WheelLargerThanLimit)
{
    const bench::BenchReport r = bench::run_bench(10, {2, 3, 5, 7, 11, 13});
    EXPECT_TRUE(r.counts_agree);
    EXPECT_EQ(r.wheel.primes_found, 4u);
    EXPECT_THROW(bench::run_bench(1, {2}), DomainError);
}

} // namespace
