#pragma once

#include "k3fib/integer.hpp"

#include <array>
#include <string>

namespace k3fib {

/// Row-major 2x2 matrix over T (Integer or Rational).
template <class T>
struct Matrix2 {
    std::array<T, 4> e{};

    Matrix2() = default;
    Matrix2(T a00, T a01, T a10, T a11) : e{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

    static Matrix2 identity() { return {T(1), T(0), T(0), T(1)}; }
    static Matrix2 scalar(const T& s) { return {s, T(0), T(0), s}; }

    const T& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
    T& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }

    T det() const { return e[0] * e[3] - e[1] * e[2]; }
    T trace() const { return e[0] + e[3]; }
    Matrix2 transpose() const { return {e[0], e[2], e[1], e[3]}; }

    friend Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
        return {l.e[0] * r.e[0] + l.e[1] * r.e[2], l.e[0] * r.e[1] + l.e[1] * r.e[3],
                l.e[2] * r.e[0] + l.e[3] * r.e[2], l.e[2] * r.e[1] + l.e[3] * r.e[3]};
    }
    friend Matrix2 operator+(const Matrix2& l, const Matrix2& r) {
        return {l.e[0] + r.e[0], l.e[1] + r.e[1], l.e[2] + r.e[2], l.e[3] + r.e[3]};
    }
    friend Matrix2 operator-(const Matrix2& l, const Matrix2& r) {
        return {l.e[0] - r.e[0], l.e[1] - r.e[1], l.e[2] - r.e[2], l.e[3] - r.e[3]};
    }
    friend Matrix2 operator-(const Matrix2& m) { return {-m.e[0], -m.e[1], -m.e[2], -m.e[3]}; }
    friend bool operator==(const Matrix2& l, const Matrix2& r) { return l.e == r.e; }
};

using IntMatrix2 = Matrix2<Integer>;
using RationalMatrix2 = Matrix2<Rational>;

inline RationalMatrix2 to_rational(const IntMatrix2& m) {
    RationalMatrix2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = Rational(m.e[i]);
    return r;
}

/// Exact inverse via adjugate over determinant; throws std::domain_error if singular.
RationalMatrix2 inverse(const IntMatrix2& m);

bool is_integral(const RationalMatrix2& m);

/// "[[a,b],[c,d]]"
std::string to_string(const IntMatrix2& m);
std::string to_string(const RationalMatrix2& m);

}  // namespace k3fib
