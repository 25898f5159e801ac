#include "k3fib/factor.hpp"

#include <algorithm>

namespace k3fib {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

constexpr std::uint64_t kTrialLimit = 1'000'000;

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are conclusive for every n < 2^64.
    for (std::uint64_t base : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = pow_mod(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    Integer rest = abs(n);
    std::vector<Integer> primes;
    for (std::uint64_t p = 2; p <= kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
        const Integer pi = from_uint64(p);
        if (pi * pi > rest) break;
        if (divides(pi, rest)) {
            primes.push_back(pi);
            while (divides(pi, rest)) rest /= pi;
        }
    }
    if (rest > 1) {
        const Integer limit = from_uint64(kTrialLimit);
        const bool below_square_bound = rest < limit * limit;
        const bool fits = mpz_sizeinbase(rest.get_mpz_t(), 2) <= 64;
        if (!below_square_bound && !(fits && is_prime_u64(to_uint64(rest)))) {
            throw FactorizationError("cannot certify the factorization of " + to_string(n) +
                                     " (cofactor " + to_string(rest) + ")");
        }
        primes.push_back(rest);
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

}  // namespace k3fib
