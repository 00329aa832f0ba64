#include <gtest/gtest.h>

#include "property.hpp"
#include "wavenum/errors.hpp"
#include "wavenum/wave_core.hpp"

using namespace wavenum;
using wavenum::testing::for_all;
using wavenum::testing::Gen;
using K = DecompositionKind;

namespace {

Term root(long num, long den)
{
    return Term::root(Frequency(BigInt(num), BigInt(den)));
}

Term at(long n, long k, K kind = K::Plain)
{
    return term_at(BigInt(n), BigInt(k), kind);
}

// Frequency / Term

TEST(Frequency, CanonicalReducesModOneThenLowestTerms)
{
    const Frequency f(BigInt(25), BigInt(6));
    EXPECT_EQ(f.canonical().str(), "1/6");
    EXPECT_EQ(f.str(), "25/6");
    EXPECT_EQ(Frequency(BigInt(-3), BigInt(2)).canonical().str(), "1/2");
    EXPECT_EQ(Frequency(BigInt(8), BigInt(4)).canonical().str(), "0/1");
}

TEST(Frequency, RejectsNonPositiveDenominator)
{
    EXPECT_THROW(Frequency(BigInt(1), BigInt(0)), DomainError);
    EXPECT_THROW(Frequency(BigInt(1), BigInt(-2)), DomainError);
}

TEST(Term, ZeroAbsorbs)
{
    EXPECT_TRUE((Term::zero() * root(1, 2)).is_zero());
    EXPECT_TRUE((root(1, 2) * Term::zero()).is_zero());
    EXPECT_TRUE(Term::zero().nth_root(BigInt(5)).is_zero());
    EXPECT_THROW(Term::zero().frequency(), DomainError);
}

TEST(Term, ExponentsAdd)
{
    const Term t = root(1, 2) * root(1, 3);
    EXPECT_TRUE(t.same_value(root(5, 6)));
    EXPECT_EQ(root(7, 6), root(1, 6));
    EXPECT_FALSE(root(7, 6).same_value(root(1, 6)));
    EXPECT_NE(root(1, 6), Term::zero());
}

TEST(Term, Display)
{
    EXPECT_EQ(Term::zero().str(), "0");
    EXPECT_EQ(root(4, 4).str(), "1");
    EXPECT_EQ(root(25, 6).str(), "1/6");
    EXPECT_EQ(root(25, 6).str(true), "25/6");
}

// term_at

TEST(TermAt, Examples)
{
    EXPECT_TRUE(at(6, 5, K::Star).same_value(root(5, 6)));
    EXPECT_EQ(at(4, 8, K::Circle), root(0, 1));
    EXPECT_TRUE(at(2, -3).same_value(root(-3, 2)));
    EXPECT_EQ(at(2, -3), root(1, 2));
}

TEST(TermAt, PhaseZeroIsAMultipleOfEveryWavelength)
{
    for (long n = 1; n <= 30; ++n) {
        EXPECT_TRUE(at(n, 0, K::Star).is_zero());
        EXPECT_EQ(at(n, 0, K::Circle), root(0, 1));
    }
}

TEST(TermAt, RejectsZeroWavelength)
{
    EXPECT_THROW(at(0, 1), DomainError);
    EXPECT_THROW(at(0, 1, K::Star), DomainError);
}

TEST(TermAt, PeriodicInWavelength)
{
    Gen gen(2);
    for_all(
        2000, [&] { return std::pair{gen.i64(1, 1000), gen.i64(-100000, 100000)}; },
        [](auto in, std::string& why) {
            auto [n, k] = in;
            why = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            for (K kind : {K::Plain, K::Star, K::Circle})
                if (!(at(n, k, kind) == at(n, k + n, kind)))
                    return false;
            return true;
        });
}

// principal_part

TEST(PrincipalPart, Examples)
{
    const auto star2 = principal_part(BigInt(2), 1, K::Star);
    ASSERT_EQ(star2.size(), 2u);
    EXPECT_TRUE(star2[0].same_value(root(1, 2)));
    EXPECT_TRUE(star2[1].is_zero());

    const auto circle3 = principal_part(BigInt(3), 1, K::Circle);
    ASSERT_EQ(circle3.size(), 3u);
    EXPECT_TRUE(circle3[0].is_zero());
    EXPECT_TRUE(circle3[1].is_zero());
    EXPECT_EQ(circle3[2], root(0, 1));

    const auto plain1 = principal_part(BigInt(1), 4, K::Plain);
    ASSERT_EQ(plain1.size(), 4u);
    for (const auto& t : plain1)
        EXPECT_EQ(t.str(), "1");
}

TEST(PrincipalPart, Errors)
{
    EXPECT_THROW(principal_part(BigInt(3), 0, K::Plain), DomainError);
    EXPECT_THROW(principal_part(BigInt(0), 1, K::Plain), DomainError);
    EXPECT_THROW(principal_part(BigInt(1000), 1000, K::Plain, 1000), CapacityError);
}

// translation

TEST(Translate, Examples)
{
    EXPECT_TRUE(translate(BigInt(5), BigInt(1), BigInt(2)).same_value(root(2, 5)));
    EXPECT_EQ(translate(BigInt(6), BigInt(6), BigInt(1)), root(0, 1));

    const char* expected[] = {"1/3", "2/3", "1", "1/3", "2/3", "1"};
    for (long k = 1; k <= 6; ++k)
        EXPECT_EQ(translate(BigInt(6), BigInt(2), BigInt(k)).str(), expected[k - 1]);
    EXPECT_EQ(translation_period(BigInt(6), BigInt(2)), 3);
}

TEST(Translate, ExactPeriodOverTwoPeriods)
{
    Gen gen(3);
    for_all(
        300, [&] { return std::pair{gen.u64(1, 200), gen.u64(0, 400)}; },
        [](auto in, std::string& why) {
            const BigInt n = to_big(in.first), j = to_big(in.second);
            why = "n=" + n.get_str() + " j=" + j.get_str();
            const std::uint64_t period = to_u64(translation_period(n, j));
            std::vector<Term> seq;
            for (std::uint64_t k = 0; k < 2 * period; ++k)
                seq.push_back(translate(n, j, to_big(k)));
            for (std::uint64_t d = 1; d <= period; ++d) {
                bool repeats = true;
                for (std::uint64_t k = 0; k + d < seq.size() && repeats; ++k)
                    repeats = seq[k] == seq[k + d];
                if (repeats != (d == period))
                    return false;
            }
            return true;
        });
}

// Partition and annihilation

TEST(Decomposition, StarPlusCircleIsPlain)
{
    Gen gen(4);
    for_all(
        5000, [&] { return std::pair{gen.i64(1, 1000), gen.i64(-1000, 1000)}; },
        [](auto in, std::string& why) {
            auto [n, k] = in;
            why = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            const Term star = at(n, k, K::Star);
            const Term circle = at(n, k, K::Circle);
            return star.is_zero() != circle.is_zero() && disjoint_sum(star, circle).same_value(at(n, k));
        });
}

TEST(Decomposition, StarTimesCircleIsZero)
{
    for (long n = 1; n <= 60; ++n)
        for (long k = -2 * n; k <= 2 * n; ++k)
            ASSERT_TRUE((at(n, k, K::Star) * at(n, k, K::Circle)).is_zero()) << n << " " << k;
}

TEST(Decomposition, DisjointSumRejectsTwoRoots)
{
    EXPECT_THROW(disjoint_sum(root(1, 2), root(1, 3)), DomainError);
}

// Wave numbers

TEST(WaveNumber, CircularProductExamples)
{
    EXPECT_EQ(circular_product(to_wave(2), to_wave(3)), to_wave(6));
    for (std::uint64_t n = 1; n <= 50; ++n)
        EXPECT_EQ(circular_product(to_wave(1), to_wave(n)), to_wave(n));

    const WaveNumber u24 = circular_product(to_wave(4), to_wave(6));
    EXPECT_EQ(u24.wavelength(), 24);
    const Component parts[] = {{BigInt(4), K::Plain}, {BigInt(6), K::Plain}};
    for (long k = 1; k <= 48; ++k) {
        const Term built = elementwise_product_term(parts, BigInt(k));
        EXPECT_TRUE(built.same_value(root(k, 24))) << k;
        EXPECT_EQ(u24.term_at(BigInt(k)), built) << k;
    }
}

TEST(WaveNumber, ManyFoldProduct)
{
    const WaveNumber a[] = {to_wave(2), to_wave(3), to_wave(5)};
    EXPECT_EQ(circular_product_many(a).wavelength(), 30);

    const WaveNumber single[] = {to_wave(7)};
    EXPECT_EQ(circular_product_many(single), to_wave(7));

    const WaveNumber repeated[] = {to_wave(2), to_wave(2), to_wave(3)};
    const WaveNumber u12 = circular_product_many(repeated);
    EXPECT_EQ(u12.wavelength(), 12);
    EXPECT_EQ(u12.factors(), (WaveNumber::FactorMap{{2, 2}, {3, 1}}));
    EXPECT_EQ(u12, to_wave(12));

    EXPECT_THROW(circular_product_many(std::span<const WaveNumber>{}), DomainError);
}

TEST(WaveNumber, Factorization)
{
    const WaveNumber u6 = to_wave(6);
    EXPECT_EQ(u6.wavelength(), 6);
    EXPECT_EQ(u6.factors(), (WaveNumber::FactorMap{{2, 1}, {3, 1}}));
    EXPECT_FALSE(u6.is_prime());
    EXPECT_EQ(from_wave(circular_product(to_wave(4), to_wave(9))), 36);
    EXPECT_EQ(to_wave(97).factors(), (WaveNumber::FactorMap{{97, 1}}));
    EXPECT_TRUE(to_wave(97).is_prime());
    EXPECT_EQ(to_wave(1).wavelength(), 1);
    EXPECT_THROW(to_wave(0), DomainError);
    EXPECT_THROW(WaveNumber(WaveNumber::FactorMap{{4, 1}}), DomainError);
}

TEST(WaveNumber, ClosureAndIsomorphism)
{
    Gen gen(5);
    for_all(
        2000, [&] { return std::pair{gen.u64(1, 10000), gen.u64(1, 10000)}; },
        [&](auto in, std::string& why) {
            auto [m, n] = in;
            why = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            const WaveNumber prod = circular_product(to_wave(m), to_wave(n));
            if (from_wave(prod) != to_big(m) * to_big(n) || !(prod == to_wave(m * n)))
                return false;
            const Component parts[] = {{to_big(m), K::Plain}, {to_big(n), K::Plain}};
            for (int s = 0; s < 100; ++s) {
                const BigInt k(static_cast<long>(gen.i64(-1'000'000'000, 1'000'000'000)));
                const Term expected = Term::root(Frequency(k, to_big(m) * to_big(n)));
                if (!elementwise_product_term(parts, k).same_value(expected) || !(prod.term_at(k) == expected)) {
                    why += " k=" + k.get_str();
                    return false;
                }
            }
            return true;
        });
}

// Element-wise construction

TEST(ElementwiseProduct, UnreducedBranchIsDeterministic)
{
    // u_2 (.) u_3 at k = 5: the product exponent is 25/6; its fifth root is 5/6.
    const Component parts[] = {{BigInt(2), K::Plain}, {BigInt(3), K::Plain}};
    const Term built = elementwise_product_term(parts, BigInt(5));
    EXPECT_TRUE(built.same_value(root(5, 6)));

    // Reducing 25/6 to 1/6 first lands on a different fifth root.
    const Term reduced_first = root(1, 6).nth_root(BigInt(5));
    EXPECT_TRUE(reduced_first.same_value(root(1, 30)));
    EXPECT_NE(reduced_first, built);
}

TEST(ElementwiseProduct, ReproducesProductWavelength)
{
    for (long m = 1; m <= 12; ++m)
        for (long n = 1; n <= 12; ++n) {
            const Component parts[] = {{BigInt(m), K::Plain}, {BigInt(n), K::Plain}};
            for (long k = -m * n; k <= 2 * m * n; ++k)
                ASSERT_TRUE(elementwise_product_term(parts, BigInt(k)).same_value(root(k, m * n)))
                    << m << " " << n << " " << k;
        }
}

TEST(ElementwiseProduct, CoNumberPairMatchesDisplayedSequence)
{
    const Component parts[] = {{BigInt(2), K::Star}, {BigInt(3), K::Star}};
    const char* expected[] = {"1/6", "0", "0", "0", "5/6", "0"};
    for (long k = 1; k <= 6; ++k)
        EXPECT_EQ(elementwise_product_term(parts, BigInt(k)).str(), expected[k - 1]) << k;
}

TEST(ElementwiseProduct, ThreeFold)
{
    const Component parts[] = {{BigInt(2), K::Plain}, {BigInt(3), K::Plain}, {BigInt(5), K::Plain}};
    for (long k = 1; k <= 60; ++k)
        EXPECT_TRUE(elementwise_product_term(parts, BigInt(k)).same_value(root(k, 30))) << k;
    EXPECT_THROW(elementwise_product_term(std::span<const Component>{}, BigInt(1)), DomainError);
}

// Four-term expansion

TEST(FourTerm, Examples)
{
    const FourTerms a = four_term_expansion(BigInt(2), BigInt(3), BigInt(5));
    EXPECT_TRUE(a.circle_circle.is_zero());
    EXPECT_TRUE(a.circle_star.is_zero());
    EXPECT_TRUE(a.star_circle.is_zero());
    EXPECT_TRUE(a.star_star.same_value(root(5, 6)));

    const FourTerms b = four_term_expansion(BigInt(2), BigInt(3), BigInt(6));
    EXPECT_EQ(b.circle_circle, root(0, 1));
    EXPECT_EQ(b.nonzero_count(), 1);

    // k = 3: odd on the m = 2 side, a multiple on the n = 3 side.
    const FourTerms c = four_term_expansion(BigInt(2), BigInt(3), BigInt(3));
    EXPECT_TRUE(c.circle_circle.is_zero());
    EXPECT_TRUE(c.circle_star.is_zero());
    EXPECT_TRUE(c.star_circle.same_value(root(3, 6)));
    EXPECT_TRUE(c.star_star.is_zero());
    EXPECT_TRUE(c.sum().same_value(root(3, 6)));
}

TEST(FourTerm, ExhaustiveSumAndSupport)
{
    for (long m = 1; m <= 20; ++m)
        for (long n = 1; n <= 20; ++n)
            for (long k = 1; k <= 2 * m * n; ++k) {
                const FourTerms t = four_term_expansion(BigInt(m), BigInt(n), BigInt(k));
                ASSERT_EQ(t.nonzero_count(), 1) << m << " " << n << " " << k;
                ASSERT_TRUE(t.sum().same_value(root(k, m * n))) << m << " " << n << " " << k;
            }
}

} // namespace
