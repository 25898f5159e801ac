#pragma once

// Generalized Fibonacci sequences a_{n+2} = a*a_{n+1} + a_n, a_0 = 0, a_1 = 1.

#include "k3fib/integer.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace k3fib {

/// The sequence parameter a >= 1.
class GenFibParams {
public:
    /// Throws std::invalid_argument unless a >= 1.
    explicit GenFibParams(std::uint64_t a);

    std::uint64_t a() const noexcept { return a_; }
    const Integer& a_int() const noexcept { return a_int_; }
    /// a^2 + 4.
    const Integer& discriminant() const noexcept { return disc_; }

    friend bool operator==(const GenFibParams& l, const GenFibParams& r) { return l.a_ == r.a_; }

private:
    std::uint64_t a_;
    Integer a_int_;
    Integer disc_;
};

enum class Parity { even, odd };

inline Parity parity_of(std::int64_t k) { return (k % 2 == 0) ? Parity::even : Parity::odd; }
const char* to_string(Parity p);

struct MembershipMatch {
    std::int64_t index;
    Parity parity;
    /// Root of (a^2+4)n^2 + 4 (even index) or (a^2+4)n^2 - 4 (odd index).
    Integer square_witness;
};

struct MembershipResult {
    bool member = false;
    std::vector<MembershipMatch> matches;  // ascending index
};

/// a_n for any n; negative indices follow a_{-n} = (-1)^{n+1} a_n.
/// Evaluated by index doubling.
Integer gen_fib(const GenFibParams& p, std::int64_t n);

/// Same value by running the recurrence step by step (forward or backward).
Integer gen_fib_naive(const GenFibParams& p, std::int64_t n);

/// (a_n, a_{n+1}) for n >= 0 by index doubling.
std::pair<Integer, Integer> gen_fib_pair(const GenFibParams& p, std::uint64_t n);

/// trace((AB)^n) = (a^2+4) a_n^2 + (-1)^n 2, n >= 0.
Integer salem_trace_of_power(const GenFibParams& p, std::int64_t n);

/// a_{2n-2} + a_{2n} from ((a^2+4)(a_n^2 - a_{n-1}^2) + (-1)^n 4) / a, n >= 1.
/// Throws std::logic_error if the division leaves a remainder.
Integer shifted_trace(const GenFibParams& p, std::int64_t n);

/// Decides whether n is a term of the sequence from the squareness of
/// (a^2+4)n^2 +- 4, then recovers every matching index. Both signs can
/// be squares at once (a = 1, n = 1).
MembershipResult classify_membership(const GenFibParams& p, const Integer& n);

/// Smallest e >= 1 with m | a_e, found by iterating the sequence modulo m.
std::uint64_t entry_point(const GenFibParams& p, std::uint64_t m);

/// Whether a_k divides a_q (k, q >= 1), by exact division.
bool divides_in_sequence(const GenFibParams& p, std::int64_t k, std::int64_t q);

}  // namespace k3fib
