#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace k3fib {

/// Arbitrary-precision signed integer used for every sequence value,
/// matrix entry and polynomial coefficient.
using Integer = mpz_class;
using Rational = mpq_class;

/// Floor square root of a nonnegative integer by Newton iteration.
/// Throws std::domain_error for negative input.
Integer isqrt(const Integer& n);

/// The nonnegative root r with r*r == n, or nullopt if n is not a square.
std::optional<Integer> is_perfect_square(const Integer& n);

/// Parses a base-10 integer with optional sign; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Exact conversion; throws std::out_of_range when the value does not fit.
std::int64_t to_int64(const Integer& n);
std::uint64_t to_uint64(const Integer& n);
Integer from_uint64(std::uint64_t v);
Integer from_int64(std::int64_t v);

inline Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline bool divides(const Integer& d, const Integer& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace k3fib
