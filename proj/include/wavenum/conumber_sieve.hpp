#pragma once

// Recursive prime identification with cumulative circular products of prime
// co-numbers. Every window is checked against the classical sieve before its
// primes are allowed to seed the next step.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavenum/bigint.hpp"
#include "wavenum/oracle.hpp"
#include "wavenum/wave_core.hpp"

namespace wavenum {

inline constexpr std::uint64_t kDefaultPhaseBudget = 100'000'000;

/// Circular product of the co-numbers u*_p over an ascending list of distinct primes.
class CoProduct {
public:
    /// Throws DomainError unless primes are ascending, distinct and prime.
    explicit CoProduct(std::vector<std::uint64_t> primes);

    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
    const BigInt& period() const noexcept { return period_; }
    std::size_t size() const noexcept { return primes_.size(); }

    /// True iff some listed prime divides k. k = 0 vanishes.
    bool vanishes_at(std::uint64_t k) const noexcept;

    /// this (.) u*_p. p must exceed every listed prime.
    CoProduct extended(std::uint64_t p) const;

private:
    std::vector<std::uint64_t> primes_;
    BigInt period_;
};

/// Zero iff some prime of cp divides k, otherwise Root(k / P_N). Decided by
/// divisibility; the period is never materialized. Negative k throws DomainError.
Term coproduct_value(const CoProduct& cp, std::int64_t k);

/// For every 1 <= k <= bound: k has a divisor in {2..n} iff it has a prime divisor <= n.
bool zeros_equivalence_check(std::uint64_t n, std::uint64_t bound);

struct SieveState {
    CoProduct coproduct;
    std::uint64_t next_prime;   // p_{N+1}
    std::uint64_t bound_prime;  // p_{N+2}

    std::size_t iteration() const noexcept { return coproduct.size(); }
};

/// cp = {2}, next = 3, bound = 5: the first two nonzero phases of u*_2 past 2.
SieveState initial_state();

/// Throws DomainError when the SieveState invariants fail.
void validate(const SieveState& state);

struct ScanOptions {
    unsigned jobs = 1;
    std::uint64_t chunk_size = 1 << 16;
};

/// Nonzero phases of cp in [lo, hi), ascending. Chunks may be evaluated on
/// `jobs` threads; the merge order is always ascending regardless.
std::vector<std::uint64_t> scan_window(const CoProduct& cp, std::uint64_t lo, std::uint64_t hi,
                                       const ScanOptions& options = {});

struct WindowReport {
    std::size_t iteration = 0;
    std::uint64_t lo = 0;  // p_{N+1}
    std::uint64_t hi = 0;  // p_{N+1}^2, exclusive
    std::vector<std::uint64_t> surviving_phases;
    std::vector<std::uint64_t> oracle_primes;
    bool match = false;
    std::vector<std::uint64_t> spurious;  // survived but not prime
    std::vector<std::uint64_t> missing;   // prime but vanished
    std::chrono::nanoseconds elapsed{0};

    friend bool operator==(const WindowReport&, const WindowReport&) = default;
};

/// Mismatch details, e.g. "spurious phases: 25; missing phases: none".
std::string describe_mismatch(const WindowReport& report);

/// Thrown when a window disagrees with the oracle. Carries the full report.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(WindowReport report);
    const WindowReport& report() const noexcept { return report_; }

private:
    WindowReport report_;
};

/// Scan [next, next^2) of cp and compare against the oracle primes there.
WindowReport scan_and_verify(std::size_t iteration, const CoProduct& cp, std::uint64_t next,
                             const oracle::PrimeTable& truth, const ScanOptions& options = {});

/// Window [p_{N+1}, p_{N+1}^2) of the state, verified against a fresh sieve.
WindowReport window_primes(const SieveState& state, const ScanOptions& options = {});
/// Same, against a caller-supplied table (which must reach hi - 1).
WindowReport window_primes(const SieveState& state, const oracle::PrimeTable& truth,
                           const ScanOptions& options = {});

/// Advance one step using an already-computed window of this state.
/// Throws VerificationError when the report is a mismatch.
SieveState recursion_step(const SieveState& state, const WindowReport& window);
SieveState recursion_step(const SieveState& state, const ScanOptions& options = {});

enum class Mode { Conservative, Maximal };

struct RunOptions {
    std::uint64_t phase_budget = kDefaultPhaseBudget;
    ScanOptions scan;
};

struct ScheduleEntry {
    std::size_t iteration = 0;
    std::uint64_t lo = 0;
    BigInt hi;  // may exceed 64 bits once the budget stops the run
    std::optional<std::uint64_t> largest_prime;
    std::uint64_t count_identified = 0;
    std::optional<double> estimate;
    std::optional<double> relative_error;
    bool budget_exhausted = false;

    friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

struct RunResult {
    Mode mode = Mode::Conservative;
    std::vector<WindowReport> windows;
    std::vector<ScheduleEntry> schedule;
    std::vector<std::uint64_t> primes;  // every prime identified, ascending
    std::uint64_t phases_scanned = 0;
    bool budget_exhausted = false;
};

/// 7^{2(N-1)} / (2(N-1) ln 7); empty for N <= 1.
std::optional<double> count_estimate(std::size_t iteration);

/// Conservative: one prime joins the product per step. Maximal: every prime
/// identified so far joins, and the next window is [s, s^2) for the largest
/// identified s. A window that would push the scanned total past the phase
/// budget is not scanned; its entry is flagged and the run stops.
/// Throws VerificationError on any mismatch.
RunResult run_schedule(std::size_t iterations, Mode mode, const RunOptions& options = {});

/// Iterate until a window reaches past limit; primes are then trimmed to <= limit.
RunResult run_until(std::uint64_t limit, Mode mode, const RunOptions& options = {});

/// Sum of circle values of the listed primes at k, i.e. how many divide k.
std::uint64_t circle_sum(std::span<const std::uint64_t> primes, std::uint64_t k);

/// primes must be the first N primes and p_N < k < p_{N+1}^2; otherwise DomainError.
/// True (prime) iff the circle sum vanishes.
bool circle_sum_test(std::span<const std::uint64_t> primes, std::uint64_t k);

} // namespace wavenum
