#include "k3fib/lattice.hpp"

#include "k3fib/fibgen.hpp"

#include <stdexcept>

namespace k3fib {

EvenLattice2::EvenLattice2(IntMatrix2 gram) : gram_(std::move(gram)) {
    if (gram_(0, 1) != gram_(1, 0)) throw std::invalid_argument("Gram matrix must be symmetric");
    if (!divides(2, gram_(0, 0)) || !divides(2, gram_(1, 1))) {
        throw std::invalid_argument("Gram matrix must have even diagonal");
    }
}

EvenLattice2 EvenLattice2::make_Lma(std::uint64_t m, std::uint64_t a) {
    if (m == 0) throw std::invalid_argument("L_m(a) requires m >= 1");
    if (a == 0) throw std::invalid_argument("L_m(a) requires a >= 1");
    const Integer mi = from_uint64(m);
    const Integer ai = from_uint64(a);
    EvenLattice2 L({2 * mi, mi * ai, mi * ai, -2 * mi});
    L.provenance_ = LatticeParams{m, a};
    return L;
}

Integer EvenLattice2::pair(const Integer& x1, const Integer& y1, const Integer& x2,
                           const Integer& y2) const {
    return x1 * (gram_(0, 0) * x2 + gram_(0, 1) * y2) + y1 * (gram_(1, 0) * x2 + gram_(1, 1) * y2);
}

std::pair<Integer, Integer> EvenLattice2::cone_reference() const {
    const Integer& q11 = gram_(0, 0);
    const Integer& q12 = gram_(0, 1);
    const Integer& q22 = gram_(1, 1);
    if (!hyperbolic()) throw std::invalid_argument("lattice is not of signature (1,1)");
    if (sgn(q11) > 0) return {1, 0};
    if (sgn(q22) > 0) return {0, 1};
    // (-q22, q12)^2 = q22 * det > 0 when q22 < 0 and det < 0.
    if (sgn(q22) < 0) return {-q22, q12};
    // q22 == 0 forces q12 != 0; (1, t) with |t| > |q11| and sign(t) = sign(q12).
    Integer t = abs(q11) + 1;
    return {1, sgn(q12) > 0 ? t : Integer(-t)};
}

Isometry2 generator_A(std::uint64_t a) {
    return {IntMatrix2{1, 0, from_uint64(a), -1}};
}

Isometry2 generator_B(std::uint64_t a) {
    return {IntMatrix2{1, from_uint64(a), 0, -1}};
}

bool is_isometry(const Isometry2& g, const EvenLattice2& L) {
    return g.matrix.transpose() * L.gram() * g.matrix == L.gram();
}

Isometry2 ab_power(std::uint64_t a, std::int64_t n) {
    const GenFibParams p(a);
    Integer lower = gen_fib(p, 2 * n - 1);
    Integer mid = gen_fib(p, 2 * n);
    Integer upper = p.a_int() * mid + lower;
    return {IntMatrix2{std::move(lower), mid, mid, std::move(upper)}};
}

Sign sign_from_int(long v) {
    if (v == 1) return Sign::plus;
    if (v == -1) return Sign::minus;
    throw std::invalid_argument("epsilon must be +1 or -1");
}

namespace {

void require_isometry(const Isometry2& g, const EvenLattice2& L) {
    if (!L.non_degenerate()) throw std::invalid_argument("lattice is degenerate");
    if (!is_isometry(g, L)) throw std::invalid_argument("matrix is not an isometry of the lattice");
}

RationalMatrix2 shifted_times_inverse(const IntMatrix2& g, const IntMatrix2& gram, Sign epsilon) {
    const IntMatrix2 shifted = g - IntMatrix2::scalar(Integer(value(epsilon)));
    RationalMatrix2 product = to_rational(shifted) * inverse(gram);
    for (auto& x : product.e) x.canonicalize();
    return product;
}

}  // namespace

DiscriminantAction disc_action(const Isometry2& g, const EvenLattice2& L, Sign epsilon) {
    require_isometry(g, L);
    return {epsilon, is_integral(shifted_times_inverse(g.matrix, L.gram(), epsilon))};
}

RationalMatrix2 integrality_matrix(std::int64_t n, std::uint64_t m, std::uint64_t a, Sign epsilon) {
    const EvenLattice2 L = EvenLattice2::make_Lma(m, a);
    return shifted_times_inverse(ab_power(a, n).matrix, L.gram(), epsilon);
}

bool in_positive_cone(const Integer& x, const Integer& y, const EvenLattice2& L) {
    const auto [rx, ry] = L.cone_reference();
    // Two positive vectors of a hyperbolic plane share a component iff they pair positively.
    return sgn(L.square(x, y)) > 0 && sgn(L.pair(x, y, rx, ry)) > 0;
}

bool is_plus_isometry(const Isometry2& g, const EvenLattice2& L) {
    require_isometry(g, L);
    if (!L.hyperbolic()) throw std::invalid_argument("lattice is not of signature (1,1)");
    const auto [rx, ry] = L.cone_reference();
    const IntMatrix2& h = g.matrix;
    return in_positive_cone(h(0, 0) * rx + h(0, 1) * ry, h(1, 0) * rx + h(1, 1) * ry, L);
}

Isometry2 evaluate_word(Sign sign, const std::string& word, std::uint64_t a) {
    const Isometry2 A = generator_A(a);
    const Isometry2 B = generator_B(a);
    Isometry2 result{IntMatrix2::scalar(Integer(value(sign)))};
    for (char c : word) {
        if (c == 'A') {
            result = result * A;
        } else if (c == 'B') {
            result = result * B;
        } else {
            throw std::invalid_argument(std::string("word letter must be A or B, got '") + c + "'");
        }
    }
    return result;
}

namespace {

Integer l1_norm(const IntMatrix2& m) {
    Integer s = 0;
    for (const auto& x : m.e) s += abs(x);
    return s;
}

bool alternating(const std::string& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1]) return false;
    }
    return true;
}

}  // namespace

std::optional<WordDecomposition> word_decompose(const Isometry2& g, std::uint64_t m, std::uint64_t a) {
    require_isometry(g, EvenLattice2::make_Lma(m, a));
    const IntMatrix2 A = generator_A(a).matrix;
    const IntMatrix2 B = generator_B(a).matrix;
    const IntMatrix2 I = IntMatrix2::identity();

    // g = prefix * h * reverse(suffix); A and B are involutions, so peeling L off
    // the left of h means h <- L h.
    std::string prefix;
    std::string suffix;
    IntMatrix2 h = g.matrix;
    Integer norm = l1_norm(h);
    for (;;) {
        if (h == I || h == -I) break;
        struct Step {
            IntMatrix2 next;
            char letter;
            bool left;
        };
        const Step steps[] = {{A * h, 'A', true}, {B * h, 'B', true}, {h * A, 'A', false}, {h * B, 'B', false}};
        const Step* best = nullptr;
        Integer best_norm = norm;
        for (const Step& s : steps) {
            Integer n = l1_norm(s.next);
            if (n < best_norm) {
                best_norm = std::move(n);
                best = &s;
            }
        }
        if (best == nullptr) return std::nullopt;
        (best->left ? prefix : suffix).push_back(best->letter);
        h = best->next;
        norm = std::move(best_norm);
    }

    WordDecomposition result{h == I ? Sign::plus : Sign::minus, prefix + std::string(suffix.rbegin(), suffix.rend())};
    if (!alternating(result.word)) return std::nullopt;
    if (!(evaluate_word(result.sign, result.word, a) == g)) return std::nullopt;
    return result;
}

}  // namespace k3fib
