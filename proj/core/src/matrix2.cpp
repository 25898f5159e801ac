#include "k3fib/matrix2.hpp"

#include <stdexcept>

namespace k3fib {

RationalMatrix2 inverse(const IntMatrix2& m) {
    const Integer d = m.det();
    if (sgn(d) == 0) throw std::domain_error("singular matrix has no inverse");
    Rational inv_det(Integer(1), d);
    inv_det.canonicalize();
    RationalMatrix2 adj{Rational(m.e[3]), Rational(-m.e[1]), Rational(-m.e[2]), Rational(m.e[0])};
    for (auto& x : adj.e) {
        x *= inv_det;
        x.canonicalize();
    }
    return adj;
}

bool is_integral(const RationalMatrix2& m) {
    for (const auto& x : m.e) {
        if (x.get_den() != 1) return false;
    }
    return true;
}

std::string to_string(const IntMatrix2& m) {
    return "[[" + to_string(m.e[0]) + "," + to_string(m.e[1]) + "],[" + to_string(m.e[2]) + "," +
           to_string(m.e[3]) + "]]";
}

std::string to_string(const RationalMatrix2& m) {
    return "[[" + to_string(m.e[0]) + "," + to_string(m.e[1]) + "],[" + to_string(m.e[2]) + "," +
           to_string(m.e[3]) + "]]";
}

}  // namespace k3fib
