#include "wavenum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavenum/errors.hpp"

namespace wavenum::oracle {

bool PrimeTable::contains(std::uint64_t n) const
{
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

std::uint64_t PrimeTable::count_upto(std::uint64_t n) const
{
    return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

std::vector<std::uint64_t> PrimeTable::range(std::uint64_t lo, std::uint64_t hi) const
{
    auto first = std::lower_bound(primes_.begin(), primes_.end(), lo);
    auto last = std::lower_bound(first, primes_.end(), hi);
    return {first, last};
}

PrimeTable sieve(std::uint64_t limit, std::uint64_t max_bytes)
{
    if (limit < 2)
        return PrimeTable(limit, {});

    const std::uint64_t bytes = limit / 8 + 1;
    if (bytes > max_bytes)
        throw CapacityError("sieve to " + std::to_string(limit) + " needs " + std::to_string(bytes) +
                                " bytes, budget is " + std::to_string(max_bytes),
                            bytes);

    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i])
            continue;
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }

    std::vector<std::uint64_t> primes;
    if (limit >= 100)
        primes.reserve(static_cast<std::size_t>(1.3 * limit / std::log(static_cast<double>(limit))));
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i])
            primes.push_back(i);
    return PrimeTable(limit, std::move(primes));
}

bool is_prime_trial(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t largest_prime_below(std::uint64_t n)
{
    if (n <= 2)
        throw DomainError("no prime below " + std::to_string(n));
    for (std::uint64_t c = n - 1;; --c)
        if (is_prime_trial(c))
            return c;
}

std::uint64_t prime_count(std::uint64_t limit)
{
    return sieve(limit).primes().size();
}

double gauss_estimate(std::uint64_t limit)
{
    const auto x = static_cast<double>(limit);
    return x / std::log(x);
}

} // namespace wavenum::oracle
