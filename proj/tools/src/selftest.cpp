#include "k3fib_cli/selftest.hpp"

#include "k3fib/engine.hpp"
#include "k3fib/fibgen.hpp"
#include "k3fib/lattice.hpp"
#include "k3fib/salem.hpp"

#include <map>
#include <random>
#include <sstream>

namespace k3fib::cli {
namespace {

class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++r_.checked;
        if (ok) return;
        if (r_.failures++ == 0) r_.first_counterexample = describe();
    }

    SuiteResult result() && { return std::move(r_); }

private:
    SuiteResult r_;
};

std::string cat() { return {}; }
template <class T, class... Rest>
std::string cat(const T& first, const Rest&... rest) {
    std::ostringstream os;
    os << first;
    return os.str() + cat(rest...);
}

std::vector<Integer> iterate_terms(std::uint64_t a, std::size_t count) {
    std::vector<Integer> t{0, 1};
    const Integer ai = from_uint64(a);
    while (t.size() < count) t.push_back(ai * t[t.size() - 1] + t[t.size() - 2]);
    return t;
}

SuiteResult cassini() {
    Tally t("cassini");
    for (std::uint64_t a = 1; a <= 8; ++a) {
        const auto f = iterate_terms(a, 302);
        for (std::size_t n = 1; n <= 300; ++n) {
            const Integer lhs = f[n + 1] * f[n - 1] - f[n] * f[n];
            t.check(lhs == (n % 2 == 0 ? 1 : -1), [&] { return cat("a=", a, " n=", n, " got ", lhs); });
        }
    }
    return std::move(t).result();
}

SuiteResult addition() {
    Tally t("addition");
    for (std::uint64_t a = 1; a <= 8; ++a) {
        const auto f = iterate_terms(a, 402);
        for (std::size_t n = 1; n <= 200; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                t.check(f[n + k] == f[k] * f[n + 1] + f[k - 1] * f[n], [&] { return cat("a=", a, " n=", n, " k=", k); });
            }
        }
    }
    return std::move(t).result();
}

SuiteResult doubling() {
    Tally t("doubling");
    for (std::uint64_t a = 1; a <= 8; ++a) {
        const GenFibParams p(a);
        const auto f = iterate_terms(a, 1001);
        for (std::int64_t n = 0; n <= 1000; ++n) {
            t.check(gen_fib(p, n) == f[n], [&] { return cat("a=", a, " n=", n); });
            const Integer neg = (n % 2 == 1) ? Integer(f[n]) : Integer(-f[n]);
            t.check(gen_fib(p, -n) == neg, [&] { return cat("a=", a, " n=-", n); });
        }
        for (std::int64_t n = -40; n <= 120; ++n) {
            t.check(gen_fib_naive(p, n) == gen_fib(p, n), [&] { return cat("naive a=", a, " n=", n); });
        }
    }
    return std::move(t).result();
}

SuiteResult traces() {
    Tally t("traces");
    for (std::uint64_t a = 1; a <= 8; ++a) {
        const GenFibParams p(a);
        for (std::int64_t n = 0; n <= 300; ++n) {
            t.check(salem_trace_of_power(p, n) == gen_fib(p, 2 * n - 1) + gen_fib(p, 2 * n + 1),
                    [&] { return cat("trace a=", a, " n=", n); });
            if (n >= 1) {
                t.check(shifted_trace(p, n) == gen_fib(p, 2 * n - 2) + gen_fib(p, 2 * n),
                        [&] { return cat("shifted a=", a, " n=", n); });
            }
        }
    }
    return std::move(t).result();
}

SuiteResult membership() {
    Tally t("membership");
    constexpr std::uint64_t kMax = 20000;
    for (std::uint64_t a : {1u, 2u, 3u, 5u}) {
        const GenFibParams p(a);
        std::map<std::uint64_t, std::vector<std::int64_t>> table;
        std::uint64_t x = 0, y = 1;
        for (std::int64_t k = 0; x <= kMax; ++k) {
            table[x].push_back(k);
            const std::uint64_t z = a * y + x;
            x = y;
            y = z;
        }
        for (std::uint64_t n = 0; n <= kMax; ++n) {
            const auto r = classify_membership(p, from_uint64(n));
            const auto it = table.find(n);
            bool ok = r.member == (it != table.end());
            if (ok && r.member) {
                ok = r.matches.size() == it->second.size();
                for (std::size_t i = 0; ok && i < r.matches.size(); ++i) {
                    ok = r.matches[i].index == it->second[i] && r.matches[i].parity == parity_of(it->second[i]);
                }
            }
            t.check(ok, [&] { return cat("a=", a, " n=", n); });
        }
    }
    return std::move(t).result();
}

SuiteResult entry() {
    Tally t("entry");
    for (std::uint64_t a = 1; a <= 2; ++a) {
        const GenFibParams p(a);
        const auto f = iterate_terms(a, 501);
        for (std::uint64_t m = 2; m <= 200; ++m) {
            const std::uint64_t e = entry_point(p, m);
            const Integer mi = from_uint64(m);
            for (std::uint64_t n = 1; n <= 500; ++n) {
                t.check(divides(mi, f[n]) == (n % e == 0), [&] { return cat("a=", a, " m=", m, " n=", n, " e=", e); });
            }
        }
    }
    return std::move(t).result();
}

// Strong divisibility for terms a_k > 1; a_k = 1 divides everything.
SuiteResult divisibility() {
    Tally t("divisibility");
    for (std::uint64_t a = 1; a <= 5; ++a) {
        const GenFibParams p(a);
        const auto f = iterate_terms(a, 202);
        for (std::size_t k = 1; k <= 200; ++k) {
            t.check(gcd(f[k], f[k + 1]) == 1, [&] { return cat("gcd a=", a, " k=", k); });
        }
        for (std::int64_t k = 1; k <= 150; ++k) {
            if (f[k] == 1) continue;
            for (std::int64_t q = 1; q <= 150; ++q) {
                const bool d = divides_in_sequence(p, k, q);
                t.check(d == (q % k == 0), [&] { return cat("a=", a, " k=", k, " q=", q); });
                if (d && q > k) t.check(divides(f[k], f[q - k]), [&] { return cat("descent a=", a, " k=", k, " q=", q); });
            }
        }
    }
    return std::move(t).result();
}

SuiteResult abpow() {
    Tally t("abpow");
    for (std::uint64_t a = 1; a <= 3; ++a) {
        const IntMatrix2 AB = generator_A(a).matrix * generator_B(a).matrix;
        IntMatrix2 acc = IntMatrix2::identity();
        for (std::int64_t n = 0; n <= 60; ++n) {
            t.check(ab_power(a, n).matrix == acc, [&] { return cat("a=", a, " n=", n); });
            acc = acc * AB;
        }
        for (std::uint64_t m = 1; m <= 10; ++m) {
            const auto L = EvenLattice2::make_Lma(m, a);
            t.check(is_isometry(generator_A(a), L) && is_isometry(generator_B(a), L), [&] { return cat("A/B m=", m, " a=", a); });
            for (std::int64_t n = -20; n <= 20; ++n) {
                t.check(is_isometry(ab_power(a, n), L), [&] { return cat("m=", m, " a=", a, " n=", n); });
            }
        }
    }
    return std::move(t).result();
}

SuiteResult integrality() {
    Tally t("integrality");
    for (std::uint64_t a = 1; a <= 3; ++a) {
        const GenFibParams p(a);
        for (std::uint64_t m = 2; m <= 50; ++m) {
            const auto L = EvenLattice2::make_Lma(m, a);
            const Integer mi = from_uint64(m);
            for (std::int64_t n = 1; n <= 40; ++n) {
                const Sign natural = (n % 2 == 0) ? Sign::plus : Sign::minus;
                const bool holds = disc_action(ab_power(a, n), L, natural).holds;
                t.check(holds == divides(mi, gen_fib(p, n)), [&] { return cat("a=", a, " m=", m, " n=", n); });
            }
        }
    }
    return std::move(t).result();
}

SuiteResult words() {
    Tally t("words");
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t a = 1 + rng() % 5;
        const std::size_t len = rng() % 21;
        std::string word;
        char c = (rng() % 2) ? 'A' : 'B';
        for (std::size_t i = 0; i < len; ++i) {
            word.push_back(c);
            c = (c == 'A') ? 'B' : 'A';
        }
        const Sign sign = (rng() % 2) ? Sign::plus : Sign::minus;
        const auto w = word_decompose(evaluate_word(sign, word, a), 1 + rng() % 7, a);
        t.check(w && w->word == word && w->sign == sign, [&] { return cat("a=", a, " word=", word); });
    }
    return std::move(t).result();
}

SuiteResult lemma51() {
    Tally t("lemma51");
    const GenFibParams p(1);
    for (unsigned l : {5u, 10u, 25u, 50u}) {
        const IntPolynomial phi = cyclotomic(l);
        for (std::int64_t n = 1; n <= 30; ++n) {
            const Integer generic = resultant(salem_quadratic(salem_trace_of_power(p, n)), phi);
            t.check(lemma51_closed_form(l, n) == generic, [&] { return cat("l=", l, " n=", n); });
        }
    }
    return std::move(t).result();
}

SuiteResult resultants() {
    Tally t("resultant");
    std::mt19937 rng(1);
    const auto random_poly = [&] {
        const unsigned deg = rng() % 9;
        std::vector<Integer> c;
        for (unsigned i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 101) - 50);
        if (sgn(c.back()) == 0) c.back() = 1;
        return IntPolynomial(std::move(c));
    };
    for (int i = 0; i < 500; ++i) {
        const IntPolynomial p = random_poly();
        const IntPolynomial q = random_poly();
        t.check(resultant_sylvester(p, q) == resultant_subresultant(p, q),
                [&] { return cat(p.to_string(), " | ", q.to_string()); });
    }
    return std::move(t).result();
}

SuiteResult cyclotomics() {
    Tally t("cyclotomic");
    for (unsigned l = 1; l <= 50; ++l) {
        IntPolynomial prod = IntPolynomial::constant(1);
        for (unsigned d = 1; d <= l; ++d) {
            if (l % d == 0) prod = prod * cyclotomic(d);
        }
        t.check(prod == IntPolynomial::monomial(1, l) - IntPolynomial::constant(1), [&] { return cat("l=", l); });
        t.check(cyclotomic(l).degree() == static_cast<int>(euler_phi(l)), [&] { return cat("degree l=", l); });
    }
    return std::move(t).result();
}

SuiteResult pell() {
    Tally t("pell");
    for (std::uint64_t a = 1; a <= 3; ++a) {
        const GenFibParams p(a);
        for (std::int64_t k = 1; k <= 12; ++k) {
            const Integer ak = gen_fib(p, k);
            const Integer D = p.discriminant() * ak * ak;
            const Integer rhs = D + (k % 2 == 0 ? 4 : -4);
            const auto alpha = is_perfect_square(rhs);
            t.check(alpha.has_value(), [&] { return cat("no square a=", a, " k=", k); });
            if (!alpha) continue;
            const auto sols = pell_solutions(D, k % 2 == 0 ? Sign::plus : Sign::minus, 4);
            bool found = false;
            for (const auto& s : sols) found = found || (s.alpha == *alpha && s.beta == 1);
            t.check(found, [&] { return cat("a=", a, " k=", k); });
        }
    }
    return std::move(t).result();
}

SuiteResult engine() {
    Tally t("engine");
    for (std::uint64_t a = 1; a <= 3; ++a) {
        for (std::uint64_t m = 2; m <= 100; ++m) {
            const AnalysisReport g = theorem1_generator(m, a);
            if (!g.theorem1_applies) continue;
            const auto s = generator_candidates(m, a).survivors();
            t.check(s.size() == 1 && s[0].key() == g.generator->key(), [&] { return cat("m=", m, " a=", a); });
        }
    }
    return std::move(t).result();
}

}  // namespace

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {"cassini", "a_{n+1}a_{n-1} - a_n^2 = (-1)^n, a <= 8, n <= 300", cassini},
        {"addition", "a_{n+k} = a_k a_{n+1} + a_{k-1} a_n, a <= 8, k <= n <= 200", addition},
        {"doubling", "doubling evaluation against iteration, including negative indices", doubling},
        {"traces", "trace and shifted-trace identities, a <= 8, n <= 300", traces},
        {"membership", "square criterion against enumeration, a in {1,2,3,5}, n <= 20000", membership},
        {"entry", "m | a_n iff e(m) | n, a <= 2, m <= 200, n <= 500", entry},
        {"divisibility", "consecutive coprimality and strong divisibility for a_k > 1", divisibility},
        {"abpow", "closed-form powers of AB and isometry of A, B, (AB)^n", abpow},
        {"integrality", "(AB)^n acts as (-1)^n on A(L) iff m | a_n", integrality},
        {"words", "decomposition inverts evaluation on random words", words},
        {"lemma51", "closed-form cyclotomic resultants equal generic ones, n <= 30", lemma51},
        {"resultant", "Sylvester and subresultant algorithms agree on random pairs", resultants},
        {"cyclotomic", "product of Phi_d over d | l equals x^l - 1, l <= 50", cyclotomics},
        {"pell", "square witnesses appear among Pell solutions, a <= 3, k <= 12", pell},
        {"engine", "closure rule agrees with the entry-point generator when 5 does not divide e", engine},
    };
    return all;
}

const Suite* find_suite(const std::string& name) {
    for (const auto& s : suites()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

}  // namespace k3fib::cli
