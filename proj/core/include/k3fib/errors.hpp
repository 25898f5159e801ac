#pragma once

#include <stdexcept>

namespace k3fib {

/// Two computations that must agree did not. Reported by the CLI with exit code 2.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace k3fib
