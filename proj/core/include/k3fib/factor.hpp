#pragma once

#include "k3fib/integer.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace k3fib {

/// The number could not be completely factored with trial division
/// and a deterministic 64-bit primality test.
class FactorizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Distinct prime divisors of |n| in ascending order (empty for |n| <= 1).
/// Trial division up to 10^6; the remaining cofactor must be provably prime.
std::vector<Integer> prime_divisors(const Integer& n);

}  // namespace k3fib
