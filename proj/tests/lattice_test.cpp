#include "k3fib/lattice.hpp"

#include "k3fib/fibgen.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace k3fib {
namespace {

IntMatrix2 M(long a, long b, long c, long d) { return {Integer(a), Integer(b), Integer(c), Integer(d)}; }

Rational Q(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

TEST(EvenLattice2, MakeLma) {
    EXPECT_EQ(EvenLattice2::make_Lma(1, 2).gram(), M(2, 2, 2, -2));
    EXPECT_EQ(EvenLattice2::make_Lma(2, 1).gram(), M(4, 2, 2, -4));
    EXPECT_EQ(EvenLattice2::make_Lma(3, 1).discriminant(), -45);
    EXPECT_TRUE(EvenLattice2::make_Lma(3, 1).hyperbolic());
    ASSERT_TRUE(EvenLattice2::make_Lma(7, 2).provenance());
    EXPECT_EQ(EvenLattice2::make_Lma(7, 2).provenance()->m, 7u);
    EXPECT_THROW(EvenLattice2::make_Lma(0, 1), std::invalid_argument);
    EXPECT_THROW(EvenLattice2::make_Lma(1, 0), std::invalid_argument);
}

TEST(EvenLattice2, RejectsOddOrAsymmetricGram) {
    EXPECT_THROW(EvenLattice2(M(1, 0, 0, 2)), std::invalid_argument);
    EXPECT_THROW(EvenLattice2(M(2, 1, 0, 2)), std::invalid_argument);
}

TEST(Isometry, Examples) {
    const auto L = EvenLattice2::make_Lma(1, 1);
    EXPECT_TRUE(is_isometry(generator_A(1), L));
    EXPECT_TRUE(is_isometry(generator_B(1), L));
    EXPECT_TRUE(is_isometry(Isometry2::identity(), EvenLattice2::make_Lma(9, 4)));
    EXPECT_FALSE(is_isometry({M(1, 1, 0, 1)}, L));
}

TEST(AbPower, Examples) {
    EXPECT_EQ(ab_power(1, 1).matrix, M(1, 1, 1, 2));
    EXPECT_EQ(ab_power(1, 0).matrix, IntMatrix2::identity());
    EXPECT_EQ(ab_power(1, 2).matrix, M(2, 3, 3, 5));
    EXPECT_EQ((ab_power(3, -4) * ab_power(3, 4)).matrix, IntMatrix2::identity());
}

TEST(AbPower, MatchesLiteralPowersAndIsIsometry) {
    for (std::uint64_t a = 1; a <= 5; ++a) {
        const IntMatrix2 AB = generator_A(a).matrix * generator_B(a).matrix;
        EXPECT_EQ(generator_A(a).matrix.det(), -1);
        EXPECT_EQ(generator_B(a).matrix.det(), -1);
        const GenFibParams p(a);
        for (unsigned n = 0; n <= 60; ++n) {
            const Isometry2 g = ab_power(a, n);
            ASSERT_EQ(g.matrix, oracle::naive_power(AB, n)) << a << " " << n;
            ASSERT_EQ(g.matrix.det(), 1);
            ASSERT_EQ(g.matrix.trace(), salem_trace_of_power(p, n));
            if (n <= 40) {
                for (std::uint64_t m : {1u, 2u, 3u, 7u}) ASSERT_TRUE(is_isometry(g, EvenLattice2::make_Lma(m, a)));
            }
        }
    }
}

TEST(DiscAction, Examples) {
    EXPECT_TRUE(disc_action(ab_power(1, 4), EvenLattice2::make_Lma(3, 1), Sign::plus).holds);
    EXPECT_TRUE(disc_action(ab_power(1, 7), EvenLattice2::make_Lma(13, 1), Sign::minus).holds);
    EXPECT_FALSE(disc_action(ab_power(1, 3), EvenLattice2::make_Lma(2, 1), Sign::plus).holds);
    EXPECT_THROW(disc_action({M(1, 1, 0, 1)}, EvenLattice2::make_Lma(2, 1), Sign::plus), std::invalid_argument);
}

TEST(IntegralityMatrix, HandComputedEntries) {
    EXPECT_TRUE(is_integral(integrality_matrix(4, 3, 1, Sign::plus)));

    const RationalMatrix2 m1 = integrality_matrix(1, 1, 1, Sign::plus);
    EXPECT_EQ(m1, (RationalMatrix2{Q(1, 5), Q(-2, 5), Q(3, 5), Q(-1, 5)}));

    const RationalMatrix2 m2 = integrality_matrix(2, 5, 1, Sign::plus);
    EXPECT_EQ(m2, (RationalMatrix2{Q(1, 5), Q(-1, 5), Q(2, 5), Q(-1, 5)}));
    EXPECT_FALSE(is_integral(m2));
}

TEST(IntegralityMatrix, TopLeftEntryMatchesTraceClosedForm) {
    for (std::uint64_t a = 1; a <= 3; ++a) {
        const GenFibParams p(a);
        for (std::uint64_t m = 2; m <= 12; ++m) {
            for (std::int64_t n = 1; n <= 20; ++n) {
                for (Sign eps : {Sign::plus, Sign::minus}) {
                    const Integer an = gen_fib(p, n);
                    Rational expected(p.discriminant() * an * an + (n % 2 == 0 ? 2 : -2) - 2 * value(eps),
                                      Integer(static_cast<unsigned long>(m)) * p.discriminant());
                    expected.canonicalize();
                    ASSERT_EQ(integrality_matrix(n, m, a, eps)(0, 0), expected);
                }
            }
        }
    }
}

TEST(DiscAction, IntegralityForwardAndConverse) {
    for (std::uint64_t a = 1; a <= 3; ++a) {
        const GenFibParams p(a);
        for (std::uint64_t m = 2; m <= 50; ++m) {
            const auto L = EvenLattice2::make_Lma(m, a);
            const Integer mi(static_cast<unsigned long>(m));
            for (std::int64_t n = 1; n <= 40; ++n) {
                const bool m_divides = divides(mi, gen_fib(p, n));
                const Sign natural = (n % 2 == 0) ? Sign::plus : Sign::minus;
                const bool holds = disc_action(ab_power(a, n), L, natural).holds;
                if (m_divides) ASSERT_TRUE(holds) << a << " " << m << " " << n;
                if (holds) ASSERT_TRUE(m_divides) << a << " " << m << " " << n;
            }
        }
    }
}

TEST(DiscAction, MatchesCosetEnumeration) {
    for (std::uint64_t a = 1; a <= 3; ++a) {
        for (std::uint64_t m = 1; m <= 30; ++m) {
            const auto L = EvenLattice2::make_Lma(m, a);
            const auto& G = L.gram();
            const auto group = oracle::discriminant_group(G(0, 0).get_si(), G(0, 1).get_si(), G(1, 1).get_si());
            ASSERT_EQ(static_cast<long>(group.elements.size()), Integer(abs(L.discriminant())).get_si());
            for (std::int64_t n = 0; n <= 20; ++n) {
                const Isometry2 g = ab_power(a, n);
                for (Sign eps : {Sign::plus, Sign::minus}) {
                    ASSERT_EQ(disc_action(g, L, eps).holds, oracle::acts_as_scalar(group, g.matrix, value(eps)))
                        << "a=" << a << " m=" << m << " n=" << n << " eps=" << value(eps);
                }
            }
        }
    }
}

TEST(PositiveCone, Examples) {
    const auto L = EvenLattice2::make_Lma(3, 1);
    EXPECT_TRUE(in_positive_cone(1, 0, L));
    EXPECT_FALSE(in_positive_cone(0, 1, L));
    EXPECT_FALSE(in_positive_cone(-1, 0, L));
    EXPECT_THROW(in_positive_cone(1, 0, EvenLattice2(M(2, 0, 0, 2))), std::invalid_argument);
}

TEST(PositiveCone, MatchesXPositiveRuleOnLma) {
    for (std::uint64_t a = 1; a <= 4; ++a) {
        for (std::uint64_t m : {1u, 2u, 5u}) {
            const auto L = EvenLattice2::make_Lma(m, a);
            for (long x = -15; x <= 15; ++x) {
                for (long y = -15; y <= 15; ++y) {
                    const bool expected = sgn(L.square(x, y)) > 0 && x > 0;
                    ASSERT_EQ(in_positive_cone(x, y, L), expected) << x << " " << y;
                }
            }
        }
    }
}

TEST(PositiveCone, ReferenceVectorForOtherHyperbolicForms) {
    // (1,0)^2 <= 0 in all of these, so the reference vector comes from the other branches.
    for (const auto& g : {M(-8, 6, 6, -2), M(0, 1, 1, 0), M(-2, 3, 3, 0), M(-2, 1, 1, 2)}) {
        const EvenLattice2 L(g);
        const auto [rx, ry] = L.cone_reference();
        EXPECT_GT(sgn(L.square(rx, ry)), 0);
        EXPECT_TRUE(in_positive_cone(rx, ry, L));
        EXPECT_FALSE(in_positive_cone(-rx, -ry, L));
    }
}

TEST(PlusIsometry, Examples) {
    for (std::uint64_t m = 1; m <= 5; ++m) {
        EXPECT_TRUE(is_plus_isometry(generator_A(1), EvenLattice2::make_Lma(m, 1)));
        EXPECT_FALSE(is_plus_isometry({-IntMatrix2::identity()}, EvenLattice2::make_Lma(m, 1)));
    }
    EXPECT_TRUE(is_plus_isometry(ab_power(1, 5), EvenLattice2::make_Lma(2, 1)));
    EXPECT_THROW(is_plus_isometry({M(1, 1, 0, 1)}, EvenLattice2::make_Lma(2, 1)), std::invalid_argument);
}

TEST(WordDecompose, Examples) {
    auto w = word_decompose(ab_power(1, 2), 1, 1);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->sign, Sign::plus);
    EXPECT_EQ(w->word, "ABAB");

    w = word_decompose(Isometry2::identity(), 4, 2);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->word, "");

    w = word_decompose(generator_A(3), 2, 3);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->word, "A");

    w = word_decompose({-IntMatrix2::identity()}, 2, 3);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->sign, Sign::minus);
    EXPECT_EQ(w->word, "");

    EXPECT_THROW(word_decompose({M(1, 1, 0, 1)}, 1, 1), std::invalid_argument);
}

TEST(WordDecompose, InvertsEvaluationOnRandomWords) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::uint64_t a = 1 + rng() % 5;
        const std::size_t len = rng() % 21;
        std::string word;
        char c = (rng() % 2) ? 'A' : 'B';
        for (std::size_t i = 0; i < len; ++i) {
            word.push_back(c);
            c = (c == 'A') ? 'B' : 'A';
        }
        const Sign sign = (rng() % 2) ? Sign::plus : Sign::minus;
        const Isometry2 g = evaluate_word(sign, word, a);
        const auto w = word_decompose(g, 1 + rng() % 7, a);
        ASSERT_TRUE(w) << "a=" << a << " word=" << word;
        EXPECT_EQ(w->word, word) << "a=" << a;
        EXPECT_EQ(w->sign, sign);
    }
}

}  // namespace
}  // namespace k3fib
