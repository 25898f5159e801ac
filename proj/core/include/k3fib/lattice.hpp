#pragma once

// Rank-2 even lattices, in particular L_m(a) = m [[2, a], [a, -2]], and
// the isometries generated by A = [[1,0],[a,-1]] and B = [[1,a],[0,-1]].

#include "k3fib/matrix2.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace k3fib {

struct LatticeParams {
    std::uint64_t m;
    std::uint64_t a;
};

class EvenLattice2 {
public:
    /// Validates symmetry and even diagonal; throws std::invalid_argument.
    explicit EvenLattice2(IntMatrix2 gram);

    /// m [[2, a], [a, -2]]; rejects m == 0 or a == 0.
    static EvenLattice2 make_Lma(std::uint64_t m, std::uint64_t a);

    const IntMatrix2& gram() const noexcept { return gram_; }
    Integer discriminant() const { return gram_.det(); }
    bool non_degenerate() const { return sgn(discriminant()) != 0; }
    /// A 2x2 form has signature (1,1) exactly when its determinant is negative.
    bool hyperbolic() const { return sgn(discriminant()) < 0; }
    const std::optional<LatticeParams>& provenance() const noexcept { return provenance_; }

    /// v^T Q w
    Integer pair(const Integer& x1, const Integer& y1, const Integer& x2, const Integer& y2) const;
    Integer square(const Integer& x, const Integer& y) const { return pair(x, y, x, y); }

    /// A fixed vector of positive square; C_L is the cone component containing it.
    /// It is (1, 0) whenever (1, 0)^2 > 0, which holds for every L_m(a).
    std::pair<Integer, Integer> cone_reference() const;

private:
    IntMatrix2 gram_;
    std::optional<LatticeParams> provenance_;
};

/// Strong type for a 2x2 integer matrix used as a candidate isometry.
struct Isometry2 {
    IntMatrix2 matrix;

    static Isometry2 identity() { return {IntMatrix2::identity()}; }
    friend Isometry2 operator*(const Isometry2& l, const Isometry2& r) { return {l.matrix * r.matrix}; }
    friend bool operator==(const Isometry2& l, const Isometry2& r) { return l.matrix == r.matrix; }
};

Isometry2 generator_A(std::uint64_t a);
Isometry2 generator_B(std::uint64_t a);

/// g^T Q g == Q.
bool is_isometry(const Isometry2& g, const EvenLattice2& L);

/// (AB)^n = [[a_{2n-1}, a_{2n}], [a_{2n}, a_{2n+1}]] for any integer n.
Isometry2 ab_power(std::uint64_t a, std::int64_t n);

enum class Sign : int { plus = 1, minus = -1 };

inline int value(Sign s) { return static_cast<int>(s); }
/// Accepts exactly +1 or -1; throws std::invalid_argument otherwise.
Sign sign_from_int(long v);

struct DiscriminantAction {
    Sign epsilon;
    bool holds;
};

/// Whether g acts on A(L) = L*/L as epsilon * id, i.e. whether
/// (g - epsilon I) Q^{-1} is an integer matrix. Rejects non-isometries.
DiscriminantAction disc_action(const Isometry2& g, const EvenLattice2& L, Sign epsilon);

/// ((AB)^n - epsilon I) Q_{L_m(a)}^{-1} with exact rational entries.
RationalMatrix2 integrality_matrix(std::int64_t n, std::uint64_t m, std::uint64_t a, Sign epsilon);

/// v^2 > 0 and v lies in the component C_L of the positive cone.
/// Rejects lattices that are not of signature (1,1).
bool in_positive_cone(const Integer& x, const Integer& y, const EvenLattice2& L);

/// Whether g maps C_L to itself. Rejects non-isometries.
bool is_plus_isometry(const Isometry2& g, const EvenLattice2& L);

struct WordDecomposition {
    Sign sign;
    std::string word;  // letters 'A' / 'B', alternating
};

/// Product of the letters of `word` (empty word is the identity) times the sign.
Isometry2 evaluate_word(Sign sign, const std::string& word, std::uint64_t a);

/// Writes g = sign * (alternating word in A, B) by greedy length reduction.
/// Returns nullopt when g is not in +-<A, B>. Rejects non-isometries of L_m(a).
std::optional<WordDecomposition> word_decompose(const Isometry2& g, std::uint64_t m, std::uint64_t a);

}  // namespace k3fib
