#include "k3fib/fibgen.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace k3fib {

GenFibParams::GenFibParams(std::uint64_t a) : a_(a), a_int_(from_uint64(a)) {
    if (a == 0) throw std::invalid_argument("sequence parameter a must be >= 1");
    disc_ = a_int_ * a_int_ + 4;
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::pair<Integer, Integer> gen_fib_pair(const GenFibParams& p, std::uint64_t n) {
    // Invariant: (x, y) = (a_j, a_{j+1}) for the prefix j of n's bits.
    // a_{2j}   = a_j (2 a_{j+1} - a a_j)
    // a_{2j+1} = a_{j+1}^2 + a_j^2
    Integer x = 0;
    Integer y = 1;
    const int width = std::bit_width(n);
    for (int bit = width - 1; bit >= 0; --bit) {
        Integer even = x * (2 * y - p.a_int() * x);
        Integer odd = x * x + y * y;
        if ((n >> bit) & 1u) {
            x = odd;
            y = p.a_int() * odd + even;
        } else {
            x = std::move(even);
            y = std::move(odd);
        }
    }
    return {x, y};
}

namespace {

std::uint64_t magnitude(std::int64_t n) {
    return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
}

// a_{-k} = (-1)^{k+1} a_k
Integer reflect(Integer value, std::uint64_t k) {
    if (k % 2 == 0) value = -value;
    return value;
}

}  // namespace

Integer gen_fib(const GenFibParams& p, std::int64_t n) {
    const std::uint64_t k = magnitude(n);
    Integer value = gen_fib_pair(p, k).first;
    return n < 0 ? reflect(std::move(value), k) : value;
}

Integer gen_fib_naive(const GenFibParams& p, std::int64_t n) {
    Integer prev = 0;  // a_j
    Integer next = 1;  // a_{j+1}
    if (n >= 0) {
        for (std::int64_t j = 0; j < n; ++j) {
            Integer t = p.a_int() * next + prev;
            prev = std::move(next);
            next = std::move(t);
        }
        return prev;
    }
    // Backwards: a_{j-1} = a_{j+1} - a a_j.
    for (std::int64_t j = 0; j > n; --j) {
        Integer before = next - p.a_int() * prev;
        next = std::move(prev);
        prev = std::move(before);
    }
    return prev;
}

Integer salem_trace_of_power(const GenFibParams& p, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("salem_trace_of_power requires n >= 0");
    Integer an = gen_fib(p, n);
    Integer sign_term = (n % 2 == 0) ? 2 : -2;
    return p.discriminant() * an * an + sign_term;
}

Integer shifted_trace(const GenFibParams& p, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("shifted_trace requires n >= 1");
    auto [prev, cur] = gen_fib_pair(p, static_cast<std::uint64_t>(n - 1));
    Integer numerator = p.discriminant() * (cur * cur - prev * prev) + ((n % 2 == 0) ? 4 : -4);
    Integer quotient;
    Integer remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
                p.a_int().get_mpz_t());
    if (sgn(remainder) != 0) {
        throw std::logic_error("shifted trace closed form is not divisible by a (n=" +
                               std::to_string(n) + ")");
    }
    return quotient;
}

MembershipResult classify_membership(const GenFibParams& p, const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("classify_membership requires n >= 0");
    const Integer base = p.discriminant() * n * n;
    const std::optional<Integer> even_root = is_perfect_square(base + 4);
    const std::optional<Integer> odd_root = is_perfect_square(base - 4);

    MembershipResult result;
    if (!even_root && !odd_root) return result;

    // The sequence is nondecreasing from a_1 on, so a forward scan to the
    // first term above n sees every index with a_k == n.
    Integer prev = 0;
    Integer cur = 1;
    if (n == 0 && even_root) result.matches.push_back({0, Parity::even, *even_root});
    for (std::int64_t k = 1; cur <= n; ++k) {
        if (cur == n) {
            const Parity parity = parity_of(k);
            const auto& root = (parity == Parity::even) ? even_root : odd_root;
            if (root) result.matches.push_back({k, parity, *root});
        }
        Integer t = p.a_int() * cur + prev;
        prev = std::move(cur);
        cur = std::move(t);
    }
    if (result.matches.empty()) {
        throw std::logic_error("square witness found for " + to_string(n) +
                               " but no sequence index matches");
    }
    result.member = true;
    return result;
}

std::uint64_t entry_point(const GenFibParams& p, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("entry_point requires m >= 2");
    __extension__ using u128 = unsigned __int128;
    const u128 mod = m;
    const u128 a = p.a() % m;
    // (x, y) = (a_n, a_{n+1}) mod m; the pair map is invertible mod m, so the
    // orbit of (0, 1) is purely periodic and reaches x == 0 again.
    u128 x = 1;
    u128 y = a;
    std::uint64_t n = 1;
    while (x != 0) {
        u128 t = (a * y + x) % mod;
        x = y;
        y = t;
        ++n;
    }
    return n;
}

bool divides_in_sequence(const GenFibParams& p, std::int64_t k, std::int64_t q) {
    if (k < 1 || q < 1) throw std::invalid_argument("divides_in_sequence requires k, q >= 1");
    return divides(gen_fib(p, k), gen_fib(p, q));
}

}  // namespace k3fib
