#pragma once

// Classical ground truth. Nothing in here depends on the wave-number code.

#include <cstdint>
#include <vector>

namespace wavenum::oracle {

inline constexpr std::uint64_t kDefaultSieveBytes = std::uint64_t{1} << 30;

class PrimeTable {
public:
    PrimeTable() = default;
    PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
        : limit_(limit), primes_(std::move(primes)) {}

    std::uint64_t limit() const noexcept { return limit_; }
    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

    /// Only meaningful for n <= limit().
    bool contains(std::uint64_t n) const;
    std::uint64_t count_upto(std::uint64_t n) const;
    /// Ascending primes in [lo, hi).
    std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) const;

private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
};

/// Sieve of Eratosthenes over [0, limit]. limit < 2 gives an empty table;
/// a bit array larger than max_bytes throws CapacityError.
PrimeTable sieve(std::uint64_t limit, std::uint64_t max_bytes = kDefaultSieveBytes);

bool is_prime_trial(std::uint64_t n);

/// Greatest prime strictly below n. Throws DomainError for n <= 2.
std::uint64_t largest_prime_below(std::uint64_t n);

std::uint64_t prime_count(std::uint64_t limit);

/// limit / ln(limit), for report comparison only.
double gauss_estimate(std::uint64_t limit);

} // namespace wavenum::oracle
