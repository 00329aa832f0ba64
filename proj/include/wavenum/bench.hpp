#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "wavenum/bigint.hpp"

namespace wavenum::bench {

struct MethodTiming {
    std::uint64_t candidates = 0;  // phases examined
    std::uint64_t primes_found = 0;
    std::chrono::nanoseconds wall{0};
};

struct BenchReport {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> wheel_primes;
    BigInt period;
    Rational density;               // prod (1 - 1/p)
    std::uint64_t period_candidates = 0;  // enumerated over one full period
    BigInt expected_period_candidates;    // density * period
    MethodTiming baseline;          // classical sieve to limit
    MethodTiming wheel;             // co-number enumeration + trial division
    bool counts_agree = false;      // both methods found the same primes
    bool period_exact = false;      // period_candidates == density * period
};

/// Residues in [1, period] coprime to every wheel prime, ascending.
/// Throws CapacityError when the period exceeds cap.
std::vector<std::uint64_t> wheel_residues(const std::vector<std::uint64_t>& wheel_primes,
                                          std::uint64_t cap = 10'000'000);

/// Count of k in [1, limit] that survive the wheel.
std::uint64_t wheel_candidate_count(const std::vector<std::uint64_t>& wheel_primes, std::uint64_t limit);

/// Wheel primes must be distinct primes; limit >= 2.
BenchReport run_bench(std::uint64_t limit, const std::vector<std::uint64_t>& wheel_primes);

} // namespace wavenum::bench
