#pragma once

// Natural wave numbers: periodic sequences of roots of unity indexed by an
// integer phase k, with term exp(2*pi*i*k/n). All values are exact; a root of
// unity is carried by its rational frequency.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wavenum/bigint.hpp"

namespace wavenum {

inline constexpr std::uint64_t kDefaultMaterializationCap = 10'000'000;

/// Exponent fraction of a root of unity.
///
/// The stored numerator/denominator are kept exactly as produced (no reduction),
/// because the branch of a fractional power depends on them: exp(2*pi*i*25/6)
/// and exp(2*pi*i*1/6) are the same root, but their fifth roots are not.
/// canonical() gives the reduced mod-1 form used for display and comparison.
class Frequency {
public:
    /// Throws DomainError when denominator < 1.
    Frequency(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    /// numerator mod denominator, then lowest terms.
    Frequency canonical() const;

    /// Equal modulo 1, i.e. the same point on the unit circle.
    bool same_root(const Frequency& other) const;
    /// Equal as rationals (no mod-1 wrap).
    bool same_value(const Frequency& other) const;

    /// Product of roots: exponents add over the common denominator d*d'.
    friend Frequency operator+(const Frequency& a, const Frequency& b);

    /// Principal branch of the order-th root taken on the stored exponent.
    /// Throws DomainError for order < 1.
    Frequency root(const BigInt& order) const;

    /// "num/den" exactly as stored.
    std::string str() const;

private:
    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Frequency& f);

/// Value of a sequence at one phase: Zero or a root of unity.
class Term {
public:
    static Term zero() { return Term(); }
    static Term root(Frequency f) { return Term(std::move(f)); }

    bool is_zero() const noexcept { return !freq_.has_value(); }
    /// Throws DomainError on Zero.
    const Frequency& frequency() const;

    /// Element-wise product; Zero absorbs.
    friend Term operator*(const Term& a, const Term& b);
    Term nth_root(const BigInt& order) const;

    /// Equality as roots (mod 1); Zero only equals Zero.
    friend bool operator==(const Term& a, const Term& b);
    /// Stricter: same exponent as rationals.
    bool same_value(const Term& other) const;

    /// Zero prints "0", a unit root prints "1", anything else its frequency.
    /// With unreduced=true a root prints its stored num/den.
    std::string str(bool unreduced = false) const;

private:
    Term() = default;
    explicit Term(Frequency f) : freq_(std::move(f)) {}

    std::optional<Frequency> freq_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

/// Arithmetic sum of two terms when at most one is nonzero (the partition
/// identities only ever add disjoint supports). Throws DomainError otherwise.
Term disjoint_sum(const Term& a, const Term& b);

enum class DecompositionKind { Plain, Star, Circle };

/// Plain: Root(k/n). Star (co-number): Zero where n | k. Circle: Root(k/n) where
/// n | k, Zero elsewhere. k = 0 counts as a multiple of every n.
Term term_at(const BigInt& n, const BigInt& k, DecompositionKind kind = DecompositionKind::Plain);

/// Terms for k = 1..m*n. Throws CapacityError when m*n exceeds cap.
std::vector<Term> principal_part(const BigInt& n, std::uint64_t m, DecompositionKind kind,
                                 std::uint64_t cap = kDefaultMaterializationCap);

/// R_j(u_n) at phase k: Root(j*k/n).
Term translate(const BigInt& n, const BigInt& j, const BigInt& k);
/// Period of k -> translate(n, j, k): n / gcd(j, n).
BigInt translation_period(const BigInt& n, const BigInt& j);

/// Natural wave number in factored form.
class WaveNumber {
public:
    using FactorMap = std::map<std::uint64_t, unsigned>;

    /// Empty map is u_1. Keys must be primes; throws DomainError otherwise.
    explicit WaveNumber(FactorMap factors = {});

    const BigInt& wavelength() const noexcept { return wavelength_; }
    const FactorMap& factors() const noexcept { return factors_; }
    bool is_prime() const;

    Term term_at(const BigInt& k, DecompositionKind kind = DecompositionKind::Plain) const
    {
        return wavenum::term_at(wavelength_, k, kind);
    }

    friend bool operator==(const WaveNumber& a, const WaveNumber& b)
    {
        return a.factors_ == b.factors_;
    }

private:
    FactorMap factors_;
    BigInt wavelength_;
};

std::ostream& operator<<(std::ostream& os, const WaveNumber& u);

WaveNumber circular_product(const WaveNumber& a, const WaveNumber& b);
/// Throws DomainError on an empty list.
WaveNumber circular_product_many(std::span<const WaveNumber> factors);

/// Factorizes n by trial division. Throws DomainError for n = 0.
WaveNumber to_wave(std::uint64_t n);
BigInt from_wave(const WaveNumber& u);

struct Component {
    BigInt wavelength;
    DecompositionKind kind = DecompositionKind::Plain;
};

/// The element-wise construction of an N-fold circular product at phase k:
/// multiply the component terms (exponents summed over the common denominator
/// P = prod n_i, never reduced), then take the (sum_i P/n_i)-th root on the
/// branch fixed by that unreduced exponent. Throws DomainError on empty input.
Term elementwise_product_term(std::span<const Component> components, const BigInt& k);

/// The four pieces of u_m (.) u_n split by circle/star on each side.
struct FourTerms {
    Term circle_circle;
    Term circle_star;
    Term star_circle;
    Term star_star;

    Term sum() const;
    int nonzero_count() const;
};

/// First factor of each product is the m side.
FourTerms four_term_expansion(const BigInt& m, const BigInt& n, const BigInt& k);

} // namespace wavenum
