#pragma once

// Modular phase functions and the weighted-residue circular product.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wavenum/bigint.hpp"
#include "wavenum/wave_core.hpp"

namespace wavenum {

/// Residue r/P with 0 <= r < P, or Blank where the starred value is zero.
class ModularFrequency {
public:
    static ModularFrequency blank() { return ModularFrequency(); }
    /// Throws DomainError unless 0 <= numerator < period.
    static ModularFrequency residue(BigInt numerator, BigInt period);

    bool is_blank() const noexcept { return blank_; }
    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& period() const noexcept { return period_; }

    /// "□" or "r/P" (not reduced).
    std::string str() const;

    friend bool operator==(const ModularFrequency& a, const ModularFrequency& b);

private:
    ModularFrequency() = default;

    bool blank_ = true;
    BigInt num_;
    BigInt period_;
};

std::ostream& operator<<(std::ostream& os, const ModularFrequency& f);

inline constexpr const char* kBlankGlyph = "□";

/// plain: (k mod n)/n. starred: Blank where n | k.
ModularFrequency modular_phase_value(std::uint64_t n, std::uint64_t k, bool starred);

/// Modular circular product of the starred modular functions of pairwise
/// coprime wavelengths (in practice distinct primes).
class ModularCoProduct {
public:
    /// Throws DomainError on an empty list, a wavelength < 2 or a non-coprime pair.
    explicit ModularCoProduct(std::vector<std::uint64_t> primes);

    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
    const BigInt& period() const noexcept { return period_; }
    /// weights()[i] = period / primes[i].
    const std::vector<BigInt>& weights() const noexcept { return weights_; }

    /// The weighted sum before the final mod P; Blank handling is the caller's.
    BigInt weighted_sum(std::uint64_t k) const;

private:
    std::vector<std::uint64_t> primes_;
    BigInt period_;
    std::vector<BigInt> weights_;
};

/// Blank if any p_i | k, else Residue((sum_i w_i (k mod p_i)) mod P, P). k >= 1.
ModularFrequency modular_product_value(const ModularCoProduct& mcp, std::uint64_t k);

struct TableColumn {
    std::uint64_t k = 0;
    std::vector<ModularFrequency> rows;  // one per prime, starred
    ModularFrequency product = ModularFrequency::blank();
};

struct ModularTable {
    std::vector<std::uint64_t> primes;
    BigInt period;
    std::vector<TableColumn> columns;  // k = 1..period
};

/// One full period of the starred rows and their modular product.
/// Throws CapacityError when the period exceeds cap.
ModularTable modular_table(std::vector<std::uint64_t> primes = {2, 3, 5},
                           std::uint64_t cap = kDefaultMaterializationCap);

/// True iff P/p_i = 1 (mod p_i) for every i: then the weighted sum is the CRT
/// reconstruction of k itself and equality with k mod P holds at every unit.
bool weights_idempotent_check(std::span<const std::uint64_t> primes);

/// prod (p_i - 1)/p_i, exact.
Rational zeta_proportion(std::span<const std::uint64_t> primes);

/// The equality filter (value == k mod P_N) against the plain non-Blank set.
///
/// Two ranges are reported: the truncated range [p_{N+1}, min(P_N, p_{N+1}^2))
/// that also honours k <= P_N, and the full window [p_{N+1}, p_{N+1}^2).
struct EqualityFilterReport {
    std::vector<std::uint64_t> primes;
    std::uint64_t next_prime = 0;
    BigInt period;
    bool weights_idempotent = false;

    std::uint64_t lo = 0;
    std::uint64_t truncated_hi = 0;
    std::vector<std::uint64_t> equality_phases;
    std::vector<std::uint64_t> nonzero_phases;
    bool agreement = false;

    std::uint64_t window_hi = 0;
    std::vector<std::uint64_t> window_equality_phases;
    std::vector<std::uint64_t> window_nonzero_phases;
    bool window_agreement = false;

    /// Phases that are non-Blank but fail the equality, with their residues.
    std::vector<std::pair<std::uint64_t, BigInt>> window_witnesses;
};

/// primes = first N primes, next_prime = p_{N+1}; throws DomainError otherwise.
EqualityFilterReport equality_filter(std::vector<std::uint64_t> primes, std::uint64_t next_prime);

} // namespace wavenum
