#include "k3fib/salem.hpp"

#include "k3fib/errors.hpp"
#include "k3fib/fibgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace k3fib {

bool is_admissible_order(unsigned l) {
    return std::find(kAdmissibleOrders.begin(), kAdmissibleOrders.end(), l) != kAdmissibleOrders.end();
}

void require_admissible_order(unsigned l) {
    if (!is_admissible_order(l)) {
        throw std::invalid_argument("cyclotomic order must be one of 1, 2, 5, 10, 25, 50 (got " +
                                    std::to_string(l) + ")");
    }
}

Sign order_epsilon(unsigned l) {
    require_admissible_order(l);
    return (l % 2 == 1) ? Sign::plus : Sign::minus;
}

IntPolynomial cyclotomic(unsigned l) {
    if (l == 0) throw std::invalid_argument("cyclotomic polynomial index must be >= 1");
    std::map<unsigned, IntPolynomial> phi;
    for (unsigned d = 1; d <= l; ++d) {
        if (l % d != 0) continue;
        IntPolynomial p = IntPolynomial::monomial(1, d) - IntPolynomial::constant(1);
        for (const auto& [e, phi_e] : phi) {
            if (d % e != 0) continue;
            auto [quot, rem] = divmod_monic(p, phi_e);
            if (!rem.is_zero()) throw InvariantViolation("cyclotomic division left a remainder");
            p = std::move(quot);
        }
        phi.emplace(d, std::move(p));
    }
    return phi.at(l);
}

IntPolynomial salem_quadratic(const Integer& tau) { return IntPolynomial({1, -tau, 1}); }

ResultantValue resultant_checked(const IntPolynomial& p, const IntPolynomial& q) {
    ResultantValue r{0, resultant_sylvester(p, q), resultant_subresultant(p, q)};
    if (r.sylvester != r.subresultant) {
        throw InvariantViolation("resultant algorithms disagree for (" + p.to_string() + ", " + q.to_string() +
                                 "): Sylvester " + to_string(r.sylvester) + " vs subresultant " +
                                 to_string(r.subresultant));
    }
    r.value = r.sylvester;
    return r;
}

Integer lemma51_closed_form(unsigned l, std::int64_t n) {
    if (l != 5 && l != 10 && l != 25 && l != 50) {
        throw std::invalid_argument("closed form defined for l in {5, 10, 25, 50} only");
    }
    if (n < 1) throw std::invalid_argument("closed form requires n >= 1");
    const GenFibParams fib(1);
    const Integer f = gen_fib(fib, (l >= 25) ? 5 * n : n);
    const Integer f2 = f * f;
    const Integer f4 = f2 * f2;
    const bool even = (n % 2 == 0);
    // Phi_5-type (l = 5, 25) and Phi_10-type (l = 10, 50) share the same shape.
    const bool five_type = (l == 5 || l == 25);
    Integer base;
    Integer scale = 1;
    if (five_type == even) {
        base = 5 * f4 + (five_type ? 5 : -5) * f2 + 1;
        scale = 25;
    } else {
        base = 25 * f4 + (five_type ? -15 : 15) * f2 + 1;
    }
    return scale * base * base;
}

SalemData salem_data(const Integer& tau) {
    if (tau <= 2) throw std::invalid_argument("a Salem trace must exceed 2 (got " + to_string(tau) + ")");
    SalemData d{tau, salem_quadratic(tau), 0.0, 0.0, 0.0};

    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, tau.get_mpz_t());
    const double log_tau = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    if (exp2 < 1000) {
        const double t = tau.get_d();
        d.lambda = 0.5 * (t + std::sqrt(t - 2.0) * std::sqrt(t + 2.0));
        d.entropy = std::log(d.lambda);
        d.relative_residual = std::abs(d.lambda + 1.0 / d.lambda - t) / t;
    } else {
        // lambda = tau (1 + sqrt(1 - 4/tau^2)) / 2 and 4/tau^2 underflows to zero here.
        d.lambda = std::numeric_limits<double>::infinity();
        d.entropy = log_tau;
        d.relative_residual = std::numeric_limits<double>::quiet_NaN();
    }
    return d;
}

bool is_palindromic(const IntPolynomial& p) {
    const auto& c = p.coefficients();
    return std::equal(c.begin(), c.end(), c.rbegin());
}

namespace {

bool in_admissible_root_set(const Integer& alpha, Sign epsilon) {
    if (alpha < 4) return false;
    if (epsilon == Sign::minus) {
        for (int excluded : {5, 7, 13, 17}) {
            if (alpha == excluded) return false;
        }
    }
    return true;
}

}  // namespace

std::optional<Integer> hkl_trace_admissible(const Integer& tau, Sign epsilon) {
    auto root = is_perfect_square(tau + 2 * value(epsilon));
    if (root && in_admissible_root_set(*root, epsilon)) return root;
    return std::nullopt;
}

CycloFilterResult prop_cyclo_filter_detail(const Integer& tau, unsigned l) {
    CycloFilterResult r{false, order_epsilon(l), std::nullopt, std::nullopt};
    const int eps = value(r.epsilon);
    r.root_plus = is_perfect_square(tau + 2 * eps);
    if (l <= 2) {
        r.root_admissible = r.root_plus && in_admissible_root_set(*r.root_plus, r.epsilon);
        r.passed = r.root_admissible;
    } else {
        r.root_five = is_perfect_square(5 * (tau - 2 * eps));
        r.passed = r.root_plus.has_value() && r.root_five.has_value();
    }
    return r;
}

std::vector<PellSolution> pell_solutions(const Integer& D, Sign epsilon, std::uint64_t beta_bound) {
    if (D <= 0) throw std::invalid_argument("Pell equation requires D > 0");
    if (is_perfect_square(D)) throw std::invalid_argument("Pell equation requires a nonsquare D");
    std::vector<PellSolution> out;
    const int rhs = 4 * value(epsilon);
    Integer beta = 0;
    for (std::uint64_t b = 0; b <= beta_bound; ++b, ++beta) {
        if (auto alpha = is_perfect_square(D * beta * beta + rhs)) out.push_back({*alpha, beta});
        if (b == std::numeric_limits<std::uint64_t>::max()) break;
    }
    return out;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

unsigned char_poly_multiplicity(unsigned l) {
    require_admissible_order(l);
    return 20 / euler_phi(l);
}

}  // namespace k3fib
