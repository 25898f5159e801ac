#pragma once

#include "k3fib/integer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace k3fib {

/// Dense polynomial over Z, coefficients in ascending degree.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> ascending);

    static IntPolynomial constant(const Integer& c) { return IntPolynomial({c}); }
    /// c x^k
    static IntPolynomial monomial(const Integer& c, std::size_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^k (zero beyond the degree).
    Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
    const Integer& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Integer evaluate(const Integer& x) const;
    /// Greatest common divisor of the coefficients (nonnegative).
    Integer content() const;

    friend IntPolynomial operator+(const IntPolynomial& l, const IntPolynomial& r);
    friend IntPolynomial operator-(const IntPolynomial& l, const IntPolynomial& r);
    friend IntPolynomial operator-(const IntPolynomial& p);
    friend IntPolynomial operator*(const IntPolynomial& l, const IntPolynomial& r);
    friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
    friend bool operator==(const IntPolynomial& l, const IntPolynomial& r) { return l.coeffs_ == r.coeffs_; }

    /// Human form, e.g. "x^2 - 3x + 1".
    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Quotient and remainder of num / den when den's leading coefficient is +-1.
/// Throws std::invalid_argument for other divisors.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& num, const IntPolynomial& den);

/// Pseudo-remainder: lc(den)^(deg num - deg den + 1) num = q den + r, deg r < deg den.
IntPolynomial pseudo_remainder(const IntPolynomial& num, const IntPolynomial& den);

/// Divides every coefficient exactly by c; throws std::logic_error if inexact.
IntPolynomial exact_divide(const IntPolynomial& p, const Integer& c);

/// Determinant of the Sylvester matrix, by fraction-free (Bareiss) elimination.
Integer resultant_sylvester(const IntPolynomial& p, const IntPolynomial& q);

/// Resultant by the subresultant polynomial remainder sequence.
Integer resultant_subresultant(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace k3fib
