#include "k3fib/salem.hpp"

#include "k3fib/errors.hpp"
#include "k3fib/fibgen.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace k3fib {
namespace {

IntPolynomial P(std::initializer_list<long> ascending) {
    std::vector<Integer> v;
    for (long c : ascending) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial random_poly(std::mt19937& rng, int max_degree, long bound, bool monic) {
    const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    std::vector<Integer> v;
    for (int i = 0; i <= deg; ++i) v.emplace_back(static_cast<long>(rng() % static_cast<unsigned>(2 * bound + 1)) - bound);
    if (monic) v.back() = 1;
    if (sgn(v.back()) == 0) v.back() = 1;
    return IntPolynomial(std::move(v));
}

std::vector<long> as_longs(const IntPolynomial& p) {
    std::vector<long> out;
    for (const auto& c : p.coefficients()) out.push_back(c.get_si());
    return out;
}

TEST(Polynomial, BasicsAndFormatting) {
    const IntPolynomial s = salem_quadratic(3);
    EXPECT_EQ(s.degree(), 2);
    EXPECT_EQ(s.to_string(), "x^2 - 3x + 1");
    EXPECT_EQ(P({0, 0}).degree(), -1);
    EXPECT_EQ((P({-1, 1}) * P({1, 1})), P({-1, 0, 1}));
    EXPECT_EQ(s.evaluate(2), -1);
    auto [q, r] = divmod_monic(P({-1, 0, 0, 1}), P({-1, 1}));
    EXPECT_EQ(q, P({1, 1, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_THROW(divmod_monic(P({1, 1}), P({1, 2})), std::invalid_argument);
}

TEST(Cyclotomic, Examples) {
    EXPECT_EQ(cyclotomic(1), P({-1, 1}));
    EXPECT_EQ(cyclotomic(5), P({1, 1, 1, 1, 1}));
    EXPECT_EQ(cyclotomic(10), P({1, -1, 1, -1, 1}));
    EXPECT_EQ(cyclotomic(50), IntPolynomial::monomial(1, 20) - IntPolynomial::monomial(1, 15) +
                                  IntPolynomial::monomial(1, 10) - IntPolynomial::monomial(1, 5) +
                                  IntPolynomial::constant(1));
    EXPECT_THROW(cyclotomic(0), std::invalid_argument);
}

TEST(Cyclotomic, DivisibilityStructureUpTo50) {
    for (unsigned l = 1; l <= 50; ++l) {
        const IntPolynomial phi = cyclotomic(l);
        EXPECT_EQ(phi.degree(), static_cast<int>(euler_phi(l)));
        IntPolynomial product = IntPolynomial::constant(1);
        for (unsigned d = 1; d <= l; ++d) {
            if (l % d == 0) product = product * cyclotomic(d);
        }
        const IntPolynomial xl1 = IntPolynomial::monomial(1, l) - IntPolynomial::constant(1);
        ASSERT_EQ(product, xl1) << l;
        EXPECT_TRUE(divmod_monic(xl1, phi).second.is_zero());
        for (unsigned d = 1; d < l; ++d) {
            if (l % d != 0) continue;
            // Phi_l shares no root with x^d - 1: the resultant is nonzero.
            const IntPolynomial xd1 = IntPolynomial::monomial(1, d) - IntPolynomial::constant(1);
            EXPECT_NE(resultant(phi, xd1), 0) << l << " " << d;
        }
    }
}

TEST(Resultant, Examples) {
    const IntPolynomial s = salem_quadratic(3);
    EXPECT_EQ(resultant(s, cyclotomic(5)), 121);
    EXPECT_EQ(resultant(P({-1, 1}), P({1, 1})), 2);
    EXPECT_EQ(resultant(s, cyclotomic(25)), Integer("232593001"));
    EXPECT_EQ(resultant(s, cyclotomic(25)), Integer(15251) * 15251);
    EXPECT_EQ(resultant(s, cyclotomic(50)), Integer("225150025"));
    EXPECT_EQ(resultant(s, cyclotomic(10)), 25);
    EXPECT_THROW(resultant(IntPolynomial{}, s), std::invalid_argument);
}

TEST(Resultant, ConstantsAndSwapSign) {
    EXPECT_EQ(resultant(P({3}), P({1, 2, 1})), 9);
    EXPECT_EQ(resultant(P({1, 2, 1}), P({-2})), 4);
    EXPECT_EQ(resultant(P({5}), P({7})), 1);
    // Res(P, Q) = (-1)^{deg P deg Q} Res(Q, P)
    const IntPolynomial p = P({1, 2, 3, 1});
    const IntPolynomial q = P({-4, 0, 1, 1, 2});
    EXPECT_EQ(resultant(p, q), resultant(q, p));
    EXPECT_EQ(resultant(p, P({1, 1})), -resultant(P({1, 1}), p));
}

TEST(Resultant, AlgorithmsAgreeOnRandomPairs) {
    std::mt19937 rng(99);
    for (int i = 0; i < 500; ++i) {
        const IntPolynomial p = random_poly(rng, 8, 50, false);
        const IntPolynomial q = random_poly(rng, 8, 50, false);
        ASSERT_EQ(resultant_sylvester(p, q), resultant_subresultant(p, q)) << p.to_string() << " | " << q.to_string();
    }
    // Shared factors force both to zero.
    for (int i = 0; i < 50; ++i) {
        const IntPolynomial f = random_poly(rng, 3, 9, true);
        if (f.degree() < 1) continue;
        const IntPolynomial p = f * random_poly(rng, 4, 9, false);
        const IntPolynomial q = f * random_poly(rng, 4, 9, false);
        EXPECT_EQ(resultant_sylvester(p, q), 0);
        EXPECT_EQ(resultant_subresultant(p, q), 0);
    }
}

TEST(Resultant, MultiplicativeInSecondArgument) {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const IntPolynomial p = random_poly(rng, 4, 20, true);
        const IntPolynomial q1 = random_poly(rng, 4, 20, true);
        const IntPolynomial q2 = random_poly(rng, 4, 20, true);
        ASSERT_EQ(resultant(p, q1 * q2), resultant(p, q1) * resultant(p, q2));
    }
}

TEST(Resultant, PrimeDividesIffCommonFactorModP) {
    std::mt19937 rng(31);
    const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    int hits = 0;
    for (int i = 0; i < 200; ++i) {
        IntPolynomial p = random_poly(rng, 5, 6, true);
        IntPolynomial q = random_poly(rng, 5, 6, true);
        if (p.degree() < 1) p = P({1, 1});
        if (q.degree() < 1) q = P({2, 0, 1});
        const Integer r = resultant(p, q);
        for (long pr : primes) {
            const bool div = divides(Integer(pr), r);
            const bool common = oracle::gcd_degree_mod_p(as_longs(p), as_longs(q), pr) >= 1;
            ASSERT_EQ(div, common) << p.to_string() << " | " << q.to_string() << " p=" << pr;
            hits += div;
        }
    }
    EXPECT_GT(hits, 50);
}

TEST(Lemma51, Examples) {
    EXPECT_EQ(lemma51_closed_form(10, 1), 25);
    EXPECT_EQ(lemma51_closed_form(5, 3), 116281);
    EXPECT_EQ(lemma51_closed_form(5, 3), resultant(salem_quadratic(18), cyclotomic(5)));
    EXPECT_EQ(lemma51_closed_form(5, 6), Integer("10817040025"));
    EXPECT_EQ(lemma51_closed_form(5, 6), Integer(104005) * 104005);
    EXPECT_THROW(lemma51_closed_form(2, 1), std::invalid_argument);
    EXPECT_THROW(lemma51_closed_form(5, 0), std::invalid_argument);
}

TEST(Lemma51, MatchesGenericResultant) {
    const GenFibParams f(1);
    for (unsigned l : {5u, 10u, 25u, 50u}) {
        const IntPolynomial phi = cyclotomic(l);
        for (std::int64_t n = 1; n <= 30; ++n) {
            ASSERT_EQ(lemma51_closed_form(l, n), resultant(salem_quadratic(salem_trace_of_power(f, n)), phi)) << l << " " << n;
        }
    }
}

TEST(SalemData, Examples) {
    const SalemData d = salem_data(3);
    EXPECT_EQ(d.polynomial, salem_quadratic(3));
    EXPECT_NEAR(d.lambda, (3.0 + std::sqrt(5.0)) / 2.0, 1e-15);
    EXPECT_NEAR(d.entropy, 2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0), 1e-15);
    EXPECT_LT(d.relative_residual, 1e-15);
    EXPECT_EQ(salem_data(47).polynomial.to_string(), "x^2 - 47x + 1");
    EXPECT_EQ(salem_data(322).polynomial.to_string(), "x^2 - 322x + 1");
    EXPECT_THROW(salem_data(2), std::invalid_argument);
    EXPECT_THROW(salem_data(-7), std::invalid_argument);
}

TEST(SalemData, PrecisionAcrossRange) {
    for (Integer tau = 3; tau <= Integer("1000000000000000000"); tau *= 7) {
        const SalemData d = salem_data(tau);
        ASSERT_LT(d.relative_residual, 1e-12) << to_string(tau);
        const double t = tau.get_d();
        ASSERT_NEAR((d.lambda + 1.0 / d.lambda) / t, 1.0, 1e-14);
    }
    const SalemData huge = salem_data(pow(Integer(10), 400));
    EXPECT_TRUE(std::isinf(huge.lambda));
    EXPECT_NEAR(huge.entropy, 400.0 * std::log(10.0), 1e-9);
}

TEST(Palindromic, Examples) {
    EXPECT_TRUE(is_palindromic(salem_quadratic(3)));
    EXPECT_FALSE(is_palindromic(P({-1, 1})));
    EXPECT_TRUE(is_palindromic(cyclotomic(10)));
    for (std::uint64_t a = 1; a <= 6; ++a) {
        const GenFibParams p(a);
        for (std::int64_t n = 1; n <= 40; ++n) {
            const Integer tau = salem_trace_of_power(p, n);
            ASSERT_GT(tau, 2);
            ASSERT_TRUE(is_palindromic(salem_quadratic(tau)));
        }
    }
}

TEST(Hkl, Examples) {
    EXPECT_EQ(*hkl_trace_admissible(47, Sign::plus), 7);
    EXPECT_FALSE(hkl_trace_admissible(3, Sign::minus));
    EXPECT_FALSE(hkl_trace_admissible(3, Sign::plus));
    EXPECT_FALSE(hkl_trace_admissible(23, Sign::minus));
    EXPECT_FALSE(hkl_trace_admissible(51, Sign::minus));
    EXPECT_EQ(*hkl_trace_admissible(49 - 2, Sign::plus), 7);
    EXPECT_EQ(*hkl_trace_admissible(1860498, Sign::minus), 1364);
}

TEST(PropCycloFilter, Examples) {
    EXPECT_TRUE(prop_cyclo_filter(3, 50));
    EXPECT_FALSE(prop_cyclo_filter(3, 5));
    EXPECT_TRUE(prop_cyclo_filter(322, 5));
    EXPECT_TRUE(prop_cyclo_filter(18, 10));
    EXPECT_THROW(prop_cyclo_filter(3, 3), std::invalid_argument);
    for (unsigned l : kAdmissibleOrders) {
        EXPECT_EQ(prop_cyclo_filter(3, l), l == 10 || l == 50) << l;
    }
    // For l = 2 the square 3 - 2 = 1^2 exists but its root is not admissible.
    const auto d = prop_cyclo_filter_detail(3, 2);
    ASSERT_TRUE(d.root_plus);
    EXPECT_EQ(*d.root_plus, 1);
    EXPECT_FALSE(d.root_admissible);
}

TEST(Pell, Examples) {
    const auto plus = pell_solutions(5, Sign::plus, 10);
    EXPECT_NE(std::find(plus.begin(), plus.end(), PellSolution{3, 1}), plus.end());
    EXPECT_NE(std::find(plus.begin(), plus.end(), PellSolution{7, 3}), plus.end());
    const auto minus = pell_solutions(5, Sign::minus, 10);
    EXPECT_NE(std::find(minus.begin(), minus.end(), PellSolution{1, 1}), minus.end());
    const auto d45 = pell_solutions(45, Sign::plus, 10);
    ASSERT_GE(d45.size(), 2u);
    EXPECT_EQ(d45[0], (PellSolution{2, 0}));
    EXPECT_EQ(d45[1], (PellSolution{7, 1}));
    EXPECT_THROW(pell_solutions(9, Sign::plus, 10), std::invalid_argument);
    EXPECT_THROW(pell_solutions(0, Sign::plus, 10), std::invalid_argument);
}

TEST(Pell, SolutionsSatisfyEquationAndContainSquareWitness) {
    for (std::uint64_t a = 1; a <= 3; ++a) {
        const GenFibParams p(a);
        for (std::int64_t k = 1; k <= 12; ++k) {
            const Integer ak = gen_fib(p, k);
            const Integer D = p.discriminant() * ak * ak;
            const Sign eps = (k % 2 == 0) ? Sign::plus : Sign::minus;
            const auto sols = pell_solutions(D, eps, 30);
            for (const auto& s : sols) ASSERT_EQ(s.alpha * s.alpha - D * s.beta * s.beta, 4 * value(eps));
            const auto witness = classify_membership(p, ak);
            Integer alpha = 0;
            for (const auto& m : witness.matches) {
                if (m.index == k) alpha = m.square_witness;
            }
            EXPECT_NE(std::find(sols.begin(), sols.end(), PellSolution{alpha, 1}), sols.end()) << a << " " << k;
        }
    }
}

TEST(CharPolyMultiplicity, Table) {
    EXPECT_EQ(char_poly_multiplicity(1), 20u);
    EXPECT_EQ(char_poly_multiplicity(2), 20u);
    EXPECT_EQ(char_poly_multiplicity(5), 5u);
    EXPECT_EQ(char_poly_multiplicity(10), 5u);
    EXPECT_EQ(char_poly_multiplicity(25), 1u);
    EXPECT_EQ(char_poly_multiplicity(50), 1u);
    for (unsigned l : kAdmissibleOrders) EXPECT_EQ(2 + char_poly_multiplicity(l) * cyclotomic(l).degree(), 22);
    EXPECT_THROW(char_poly_multiplicity(3), std::invalid_argument);
}

}  // namespace
}  // namespace k3fib
