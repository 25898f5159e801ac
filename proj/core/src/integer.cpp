#include "k3fib/integer.hpp"

#include <limits>
#include <stdexcept>

namespace k3fib {

Integer isqrt(const Integer& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt of a negative integer");
    if (n < 2) return n;

    // Start above the root: 2^ceil(bits/2) > sqrt(n), then descend monotonically.
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Integer x;
    mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
    for (;;) {
        Integer y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

std::optional<Integer> is_perfect_square(const Integer& n) {
    if (sgn(n) < 0) return std::nullopt;
    Integer r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

Integer parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

std::int64_t to_int64(const Integer& n) {
    if (n < Integer(std::to_string(std::numeric_limits<std::int64_t>::min())) ||
        n > Integer(std::to_string(std::numeric_limits<std::int64_t>::max()))) {
        throw std::out_of_range("integer does not fit in 64 bits: " + to_string(n));
    }
    return std::stoll(to_string(n));
}

std::uint64_t to_uint64(const Integer& n) {
    if (sgn(n) < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
        throw std::out_of_range("integer does not fit in unsigned 64 bits: " + to_string(n));
    }
    return std::stoull(to_string(n));
}

Integer from_uint64(std::uint64_t v) { return Integer(std::to_string(v), 10); }

Integer from_int64(std::int64_t v) { return Integer(std::to_string(v), 10); }

}  // namespace k3fib
