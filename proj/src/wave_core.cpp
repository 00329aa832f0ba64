#include "wavenum/wave_core.hpp"

#include <string>

#include "wavenum/errors.hpp"

namespace wavenum {

namespace {

void require_wavelength(const BigInt& n)
{
    if (n < 1)
        throw DomainError("wavelength must be a natural number, got " + n.get_str());
}

bool divides(const BigInt& n, const BigInt& k)
{
    return mpz_divisible_p(k.get_mpz_t(), n.get_mpz_t()) != 0;
}

bool is_prime_factor(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d <= p / d; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

// Frequency

Frequency::Frequency(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_ < 1)
        throw DomainError("frequency denominator must be >= 1, got " + den_.get_str());
}

Frequency Frequency::canonical() const
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    const BigInt g = gcd(r, den_);
    return Frequency(r / g, den_ / g);
}

bool Frequency::same_root(const Frequency& other) const
{
    BigInt diff = num_ * other.den_ - other.num_ * den_;
    BigInt den = den_ * other.den_;
    return divides(den, diff);
}

bool Frequency::same_value(const Frequency& other) const
{
    return num_ * other.den_ == other.num_ * den_;
}

Frequency operator+(const Frequency& a, const Frequency& b)
{
    return Frequency(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Frequency Frequency::root(const BigInt& order) const
{
    if (order < 1)
        throw DomainError("root order must be >= 1, got " + order.get_str());
    if (divides(order, num_))
        return Frequency(BigInt(num_ / order), den_);
    return Frequency(num_, BigInt(den_ * order));
}

std::string Frequency::str() const
{
    return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Frequency& f)
{
    return os << f.str();
}

// Term

const Frequency& Term::frequency() const
{
    if (!freq_)
        throw DomainError("Zero term has no frequency");
    return *freq_;
}

Term operator*(const Term& a, const Term& b)
{
    if (a.is_zero() || b.is_zero())
        return Term::zero();
    return Term::root(*a.freq_ + *b.freq_);
}

Term Term::nth_root(const BigInt& order) const
{
    if (is_zero())
        return zero();
    return root(freq_->root(order));
}

bool operator==(const Term& a, const Term& b)
{
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    return a.freq_->same_root(*b.freq_);
}

bool Term::same_value(const Term& other) const
{
    if (is_zero() || other.is_zero())
        return is_zero() && other.is_zero();
    return freq_->same_value(*other.freq_);
}

std::string Term::str(bool unreduced) const
{
    if (is_zero())
        return "0";
    if (unreduced)
        return freq_->str();
    Frequency c = freq_->canonical();
    if (c.numerator() == 0)
        return "1";
    return c.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t)
{
    return os << t.str();
}

Term disjoint_sum(const Term& a, const Term& b)
{
    if (!a.is_zero() && !b.is_zero())
        throw DomainError("sum of two nonzero roots is not a root of unity");
    return a.is_zero() ? b : a;
}

// Sequences

Term term_at(const BigInt& n, const BigInt& k, DecompositionKind kind)
{
    require_wavelength(n);
    const bool principal = divides(n, k);
    switch (kind) {
    case DecompositionKind::Star:
        if (principal)
            return Term::zero();
        break;
    case DecompositionKind::Circle:
        if (!principal)
            return Term::zero();
        break;
    case DecompositionKind::Plain:
        break;
    }
    return Term::root(Frequency(k, n));
}

std::vector<Term> principal_part(const BigInt& n, std::uint64_t m, DecompositionKind kind, std::uint64_t cap)
{
    require_wavelength(n);
    if (m == 0)
        throw DomainError("repetition count must be >= 1");
    const BigInt total = n * to_big(m);
    if (total > to_big(cap))
        throw CapacityError("principal part of " + total.get_str() + " terms exceeds cap " + std::to_string(cap),
                            fits_u64(total) ? to_u64(total) : UINT64_MAX);

    const std::uint64_t count = to_u64(total);
    std::vector<Term> out;
    out.reserve(count);
    for (std::uint64_t k = 1; k <= count; ++k)
        out.push_back(term_at(n, to_big(k), kind));
    return out;
}

Term translate(const BigInt& n, const BigInt& j, const BigInt& k)
{
    require_wavelength(n);
    return Term::root(Frequency(j * k, n));
}

BigInt translation_period(const BigInt& n, const BigInt& j)
{
    require_wavelength(n);
    return n / gcd(j, n);
}

// WaveNumber

WaveNumber::WaveNumber(FactorMap factors) : factors_(std::move(factors)), wavelength_(1)
{
    for (auto it = factors_.begin(); it != factors_.end();) {
        if (!is_prime_factor(it->first))
            throw DomainError("wave number factor " + std::to_string(it->first) + " is not prime");
        if (it->second == 0) {
            it = factors_.erase(it);
            continue;
        }
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), to_big(it->first).get_mpz_t(), it->second);
        wavelength_ *= power;
        ++it;
    }
}

bool WaveNumber::is_prime() const
{
    return factors_.size() == 1 && factors_.begin()->second == 1;
}

std::ostream& operator<<(std::ostream& os, const WaveNumber& u)
{
    os << "u_" << u.wavelength().get_str() << " {";
    bool first = true;
    for (const auto& [p, a] : u.factors()) {
        os << (first ? "" : ", ") << p;
        if (a > 1)
            os << '^' << a;
        first = false;
    }
    return os << '}';
}

WaveNumber circular_product(const WaveNumber& a, const WaveNumber& b)
{
    WaveNumber::FactorMap merged = a.factors();
    for (const auto& [p, e] : b.factors())
        merged[p] += e;
    return WaveNumber(std::move(merged));
}

WaveNumber circular_product_many(std::span<const WaveNumber> factors)
{
    if (factors.empty())
        throw DomainError("circular product of an empty list");
    WaveNumber acc = factors.front();
    for (const auto& u : factors.subspan(1))
        acc = circular_product(acc, u);
    return acc;
}

WaveNumber to_wave(std::uint64_t n)
{
    if (n == 0)
        throw DomainError("0 has no wave number");
    WaveNumber::FactorMap factors;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        while (n % d == 0) {
            ++factors[d];
            n /= d;
        }
    }
    if (n > 1)
        ++factors[n];
    return WaveNumber(std::move(factors));
}

BigInt from_wave(const WaveNumber& u)
{
    return u.wavelength();
}

Term elementwise_product_term(std::span<const Component> components, const BigInt& k)
{
    if (components.empty())
        throw DomainError("circular product of an empty list");

    BigInt period = 1;
    for (const auto& c : components) {
        require_wavelength(c.wavelength);
        period *= c.wavelength;
    }

    Term acc = term_at(components.front().wavelength, k, components.front().kind);
    BigInt order = period / components.front().wavelength;
    for (const auto& c : components.subspan(1)) {
        acc = acc * term_at(c.wavelength, k, c.kind);
        order += period / c.wavelength;
    }
    return acc.nth_root(order);
}

// Four-term expansion

Term FourTerms::sum() const
{
    return disjoint_sum(disjoint_sum(circle_circle, circle_star), disjoint_sum(star_circle, star_star));
}

int FourTerms::nonzero_count() const
{
    return !circle_circle.is_zero() + !circle_star.is_zero() + !star_circle.is_zero() + !star_star.is_zero();
}

FourTerms four_term_expansion(const BigInt& m, const BigInt& n, const BigInt& k)
{
    using K = DecompositionKind;
    auto piece = [&](K left, K right) {
        const Component pair[] = {{m, left}, {n, right}};
        return elementwise_product_term(pair, k);
    };
    return FourTerms{piece(K::Circle, K::Circle), piece(K::Circle, K::Star), piece(K::Star, K::Circle),
                     piece(K::Star, K::Star)};
}

} // namespace wavenum
