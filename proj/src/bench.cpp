#include "wavenum/bench.hpp"

#include <algorithm>
#include <string>

#include "wavenum/conumber_sieve.hpp"
#include "wavenum/errors.hpp"
#include "wavenum/modular_rep.hpp"
#include "wavenum/oracle.hpp"

namespace wavenum::bench {

namespace {

using Clock = std::chrono::steady_clock;

CoProduct wheel_coproduct(std::vector<std::uint64_t> primes)
{
    std::sort(primes.begin(), primes.end());
    return CoProduct(std::move(primes));
}

} // namespace

std::vector<std::uint64_t> wheel_residues(const std::vector<std::uint64_t>& wheel_primes, std::uint64_t cap)
{
    const CoProduct cp = wheel_coproduct(wheel_primes);
    if (cp.period() > to_big(cap))
        throw CapacityError("wheel period " + cp.period().get_str() + " exceeds cap " + std::to_string(cap),
                            fits_u64(cp.period()) ? to_u64(cp.period()) : UINT64_MAX);
    return scan_window(cp, 1, to_u64(cp.period()) + 1);
}

std::uint64_t wheel_candidate_count(const std::vector<std::uint64_t>& wheel_primes, std::uint64_t limit)
{
    const auto residues = wheel_residues(wheel_primes);
    const std::uint64_t period = to_u64(wheel_coproduct(wheel_primes).period());
    const std::uint64_t full = limit / period;
    const std::uint64_t rest = limit % period;
    return full * residues.size() +
           static_cast<std::uint64_t>(std::upper_bound(residues.begin(), residues.end(), rest) - residues.begin());
}

BenchReport run_bench(std::uint64_t limit, const std::vector<std::uint64_t>& wheel_primes)
{
    if (limit < 2)
        throw DomainError("bench limit must be >= 2");

    BenchReport report;
    report.limit = limit;
    report.wheel_primes = wheel_primes;
    std::sort(report.wheel_primes.begin(), report.wheel_primes.end());
    report.density = zeta_proportion(report.wheel_primes);

    // Baseline: classical sieve over every phase.
    auto t0 = Clock::now();
    const auto table = oracle::sieve(limit);
    report.baseline.wall = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    report.baseline.candidates = limit - 1;
    report.baseline.primes_found = table.primes().size();

    // Wheel: only phases where the co-number product is nonzero, confirmed by trial division.
    t0 = Clock::now();
    const auto residues = wheel_residues(report.wheel_primes);
    const std::uint64_t period = residues.empty() ? 1 : to_u64(wheel_coproduct(report.wheel_primes).period());

    std::vector<std::uint64_t> found;
    for (std::uint64_t p : report.wheel_primes)
        if (p <= limit)
            found.push_back(p);
    const std::size_t wheel_count = found.size();

    std::uint64_t candidates = 0;
    for (std::uint64_t base = 0; base <= limit; base += period) {
        for (std::uint64_t r : residues) {
            const std::uint64_t k = base + r;
            if (k > limit)
                break;
            ++candidates;
            if (k < 2)
                continue;
            bool prime = true;
            for (std::size_t i = wheel_count; i < found.size(); ++i) {
                const std::uint64_t p = found[i];
                if (p > k / p)
                    break;
                if (k % p == 0) {
                    prime = false;
                    break;
                }
            }
            if (prime)
                found.push_back(k);
        }
        if (limit - base < period)
            break;
    }
    report.wheel.wall = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    report.wheel.candidates = candidates;
    report.wheel.primes_found = found.size();

    std::sort(found.begin(), found.end());
    report.counts_agree = found == table.primes();

    report.period = to_big(period);
    report.period_candidates = residues.size();
    const Rational expected = report.density * Rational(report.period);
    report.expected_period_candidates = expected.get_num() / expected.get_den();
    report.period_exact = expected.get_den() == 1 && report.expected_period_candidates == to_big(report.period_candidates);
    return report;
}

} // namespace wavenum::bench
