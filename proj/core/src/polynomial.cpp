#include "k3fib/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3fib {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1, Integer(0));
    v[k] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Integer IntPolynomial::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

IntPolynomial operator+(const IntPolynomial& l, const IntPolynomial& r) {
    std::vector<Integer> v(std::max(l.coeffs_.size(), r.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i) v[i] += l.coeffs_[i];
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) v[i] += r.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& p) {
    std::vector<Integer> v = p.coeffs_;
    for (auto& c : v) c = -c;
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& l, const IntPolynomial& r) { return l + (-r); }

IntPolynomial operator*(const IntPolynomial& l, const IntPolynomial& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Integer> v(l.coeffs_.size() + r.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) v[i + j] += l.coeffs_[i] * r.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
    std::vector<Integer> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = coeffs_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        const Integer mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (mag != 1 || k == 0) out += k3fib::to_string(mag);
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const Integer& lead = den.leading();
    if (lead != 1 && lead != -1) throw std::invalid_argument("divisor must have leading coefficient +-1");
    if (num.degree() < den.degree()) return {IntPolynomial{}, num};

    std::vector<Integer> rem = num.coefficients();
    const auto& d = den.coefficients();
    const std::size_t dd = d.size() - 1;
    std::vector<Integer> quot(rem.size() - dd, Integer(0));
    for (std::size_t k = rem.size(); k-- > dd;) {
        const Integer factor = rem[k] * lead;  // lead^{-1} == lead
        quot[k - dd] = factor;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * d[j];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial pseudo_remainder(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("pseudo-division by the zero polynomial");
    if (num.degree() < den.degree()) return num;
    std::vector<Integer> rem = num.coefficients();
    const auto& d = den.coefficients();
    const Integer& lead = den.leading();
    const std::size_t dd = d.size() - 1;
    const std::size_t steps = rem.size() - dd;
    // Each step multiplies through by lc(den) and cancels the top term.
    for (std::size_t s = 0; s < steps; ++s) {
        const std::size_t k = rem.size() - 1 - s;
        const Integer top = rem[k];
        for (auto& c : rem) c *= lead;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= top * d[j];
    }
    return IntPolynomial(std::move(rem));
}

IntPolynomial exact_divide(const IntPolynomial& p, const Integer& c) {
    std::vector<Integer> v = p.coefficients();
    for (auto& x : v) {
        if (!divides(c, x)) throw std::logic_error("inexact polynomial division by a constant");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return IntPolynomial(std::move(v));
}

namespace {

void require_nonzero(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
}

// Bareiss fraction-free elimination over Z; every intermediate division is exact.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && sgn(m[pivot][k]) == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Integer resultant_sylvester(const IntPolynomial& p, const IntPolynomial& q) {
    require_nonzero(p, q);
    const std::size_t dp = static_cast<std::size_t>(p.degree());
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    const std::size_t n = dp + dq;
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> s(n, std::vector<Integer>(n, Integer(0)));
    // dq shifted rows of p, then dp shifted rows of q, descending coefficients.
    for (std::size_t r = 0; r < dq; ++r) {
        for (std::size_t j = 0; j <= dp; ++j) s[r][r + j] = p.coefficient(dp - j);
    }
    for (std::size_t r = 0; r < dp; ++r) {
        for (std::size_t j = 0; j <= dq; ++j) s[dq + r][r + j] = q.coefficient(dq - j);
    }
    return bareiss_determinant(std::move(s));
}

Integer resultant_subresultant(const IntPolynomial& p, const IntPolynomial& q) {
    require_nonzero(p, q);
    if (p.degree() == 0) return pow(p.leading(), static_cast<unsigned long>(q.degree()));
    if (q.degree() == 0) return pow(q.leading(), static_cast<unsigned long>(p.degree()));

    const Integer cp = p.content();
    const Integer cq = q.content();
    IntPolynomial A = exact_divide(p, cp);
    IntPolynomial B = exact_divide(q, cq);
    const Integer t = pow(cp, static_cast<unsigned long>(q.degree())) * pow(cq, static_cast<unsigned long>(p.degree()));
    Integer s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    }

    Integer g = 1;
    Integer h = 1;
    for (;;) {
        const int delta = A.degree() - B.degree();
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
        IntPolynomial R = pseudo_remainder(A, B);
        A = std::move(B);
        B = exact_divide(R, g * pow(h, static_cast<unsigned long>(delta)));
        g = A.leading();
        // h <- h^(1 - delta) g^delta
        if (delta == 0) {
            // unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Integer num = pow(g, static_cast<unsigned long>(delta));
            Integer den = pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.is_zero()) return 0;
        if (B.degree() == 0) break;
    }
    // h <- h^(1 - deg A) lc(B)^(deg A)
    const unsigned long da = static_cast<unsigned long>(A.degree());
    Integer num = pow(B.leading(), da);
    Integer final_h;
    if (da == 0) {
        final_h = h;
    } else {
        Integer den = pow(h, da - 1);
        mpz_divexact(final_h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return s * t * final_h;
}

}  // namespace k3fib
