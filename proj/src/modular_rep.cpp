#include "wavenum/modular_rep.hpp"

#include <numeric>
#include <string>

#include "wavenum/errors.hpp"

namespace wavenum {

ModularFrequency ModularFrequency::residue(BigInt numerator, BigInt period)
{
    if (period < 1 || numerator < 0 || numerator >= period)
        throw DomainError("residue " + numerator.get_str() + "/" + period.get_str() + " out of range");
    ModularFrequency f;
    f.blank_ = false;
    f.num_ = std::move(numerator);
    f.period_ = std::move(period);
    return f;
}

std::string ModularFrequency::str() const
{
    if (blank_)
        return kBlankGlyph;
    return num_.get_str() + "/" + period_.get_str();
}

bool operator==(const ModularFrequency& a, const ModularFrequency& b)
{
    if (a.blank_ || b.blank_)
        return a.blank_ == b.blank_;
    return a.num_ == b.num_ && a.period_ == b.period_;
}

std::ostream& operator<<(std::ostream& os, const ModularFrequency& f)
{
    return os << f.str();
}

ModularFrequency modular_phase_value(std::uint64_t n, std::uint64_t k, bool starred)
{
    if (n == 0)
        throw DomainError("wavelength must be a natural number");
    if (starred && k % n == 0)
        return ModularFrequency::blank();
    return ModularFrequency::residue(to_big(k % n), to_big(n));
}

ModularCoProduct::ModularCoProduct(std::vector<std::uint64_t> primes) : primes_(std::move(primes)), period_(1)
{
    if (primes_.empty())
        throw DomainError("modular product needs at least one wavelength");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (primes_[i] < 2)
            throw DomainError("wavelength " + std::to_string(primes_[i]) + " is below 2");
        for (std::size_t j = 0; j < i; ++j)
            if (std::gcd(primes_[i], primes_[j]) != 1)
                throw DomainError("wavelengths " + std::to_string(primes_[j]) + " and " + std::to_string(primes_[i]) +
                                  " are not coprime");
        period_ *= to_big(primes_[i]);
    }
    weights_.reserve(primes_.size());
    for (std::uint64_t p : primes_)
        weights_.emplace_back(period_ / to_big(p));
}

BigInt ModularCoProduct::weighted_sum(std::uint64_t k) const
{
    BigInt sum = 0;
    for (std::size_t i = 0; i < primes_.size(); ++i)
        sum += weights_[i] * to_big(k % primes_[i]);
    return sum;
}

ModularFrequency modular_product_value(const ModularCoProduct& mcp, std::uint64_t k)
{
    if (k == 0)
        throw DomainError("modular phases start at 1");
    for (std::uint64_t p : mcp.primes())
        if (k % p == 0)
            return ModularFrequency::blank();
    BigInt r = mcp.weighted_sum(k) % mcp.period();
    return ModularFrequency::residue(std::move(r), mcp.period());
}

ModularTable modular_table(std::vector<std::uint64_t> primes, std::uint64_t cap)
{
    ModularCoProduct mcp(primes);
    if (mcp.period() > to_big(cap))
        throw CapacityError("table period " + mcp.period().get_str() + " exceeds cap " + std::to_string(cap),
                            fits_u64(mcp.period()) ? to_u64(mcp.period()) : UINT64_MAX);

    ModularTable table;
    table.period = mcp.period();
    const std::uint64_t period = to_u64(mcp.period());
    table.columns.reserve(period);
    for (std::uint64_t k = 1; k <= period; ++k) {
        TableColumn col;
        col.k = k;
        for (std::uint64_t p : primes)
            col.rows.push_back(modular_phase_value(p, k, true));
        col.product = modular_product_value(mcp, k);
        table.columns.push_back(std::move(col));
    }
    table.primes = std::move(primes);
    return table;
}

bool weights_idempotent_check(std::span<const std::uint64_t> primes)
{
    const ModularCoProduct mcp({primes.begin(), primes.end()});
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (mcp.weights()[i] % to_big(primes[i]) != 1)
            return false;
    return true;
}

Rational zeta_proportion(std::span<const std::uint64_t> primes)
{
    const ModularCoProduct mcp({primes.begin(), primes.end()});
    Rational q(1);
    for (std::uint64_t p : primes)
        q *= Rational(to_big(p - 1), to_big(p));
    q.canonicalize();
    return q;
}

EqualityFilterReport equality_filter(std::vector<std::uint64_t> primes, std::uint64_t next_prime)
{
    if (primes.empty())
        throw DomainError("equality filter needs at least one prime");

    // First N primes, each the next integer coprime to its predecessors.
    if (primes.front() != 2)
        throw DomainError("primes must start at 2");
    auto coprime_to_prefix = [&](std::uint64_t c, std::size_t len) {
        for (std::size_t j = 0; j < len; ++j)
            if (c % primes[j] == 0)
                return false;
        return true;
    };
    for (std::size_t i = 1; i <= primes.size(); ++i) {
        std::uint64_t expect = primes[i - 1] + 1;
        while (!coprime_to_prefix(expect, i))
            ++expect;
        const std::uint64_t got = i < primes.size() ? primes[i] : next_prime;
        if (got != expect)
            throw DomainError("expected prime " + std::to_string(expect) + ", got " + std::to_string(got));
    }

    if (next_prime > UINT32_MAX)
        throw CapacityError("window past 64-bit phases", UINT64_MAX);

    const ModularCoProduct mcp(primes);
    EqualityFilterReport report;
    report.period = mcp.period();
    report.next_prime = next_prime;
    report.weights_idempotent = weights_idempotent_check(primes);
    report.lo = next_prime;
    report.window_hi = next_prime * next_prime;
    report.truncated_hi = mcp.period() < to_big(report.window_hi) ? to_u64(mcp.period()) : report.window_hi;
    if (report.truncated_hi < report.lo)
        report.truncated_hi = report.lo;

    for (std::uint64_t k = report.lo; k < report.window_hi; ++k) {
        const ModularFrequency v = modular_product_value(mcp, k);
        if (v.is_blank())
            continue;
        const bool equal = v.numerator() == to_big(k) % mcp.period();
        const bool truncated = k < report.truncated_hi;

        report.window_nonzero_phases.push_back(k);
        if (truncated)
            report.nonzero_phases.push_back(k);
        if (equal) {
            report.window_equality_phases.push_back(k);
            if (truncated)
                report.equality_phases.push_back(k);
        } else {
            report.window_witnesses.emplace_back(k, v.numerator());
        }
    }
    report.agreement = report.equality_phases == report.nonzero_phases;
    report.window_agreement = report.window_equality_phases == report.window_nonzero_phases;
    report.primes = std::move(primes);
    return report;
}

} // namespace wavenum
