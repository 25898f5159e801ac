#pragma once

// Salem trace quadratics x^2 - tau x + 1, cyclotomic polynomials, their
// resultants, and the square-number filters on Salem traces.

#include "k3fib/integer.hpp"
#include "k3fib/lattice.hpp"
#include "k3fib/polynomial.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace k3fib {

/// The cyclotomic orders that can occur next to a degree-2 Salem factor
/// on a rank-22 lattice.
inline constexpr std::array<unsigned, 6> kAdmissibleOrders{1, 2, 5, 10, 25, 50};

bool is_admissible_order(unsigned l);
/// Throws std::invalid_argument unless l is one of kAdmissibleOrders.
void require_admissible_order(unsigned l);
/// +1 for l in {1, 5, 25}, -1 for l in {2, 10, 50}.
Sign order_epsilon(unsigned l);

/// Phi_l by exact division of x^l - 1 by Phi_d for the proper divisors d of l.
IntPolynomial cyclotomic(unsigned l);

/// x^2 - tau x + 1 (no range check).
IntPolynomial salem_quadratic(const Integer& tau);

struct ResultantValue {
    Integer value;
    Integer sylvester;
    Integer subresultant;
};

/// Resultant by both algorithms; throws InvariantViolation on disagreement.
ResultantValue resultant_checked(const IntPolynomial& p, const IntPolynomial& q);
inline Integer resultant(const IntPolynomial& p, const IntPolynomial& q) { return resultant_checked(p, q).value; }

/// Closed form of res{x^2 - tau_n x + 1, Phi_l} for a = 1, l in {5, 10, 25, 50}, n >= 1.
Integer lemma51_closed_form(unsigned l, std::int64_t n);

/// Floating quantities attached to a Salem trace. Relative error of
/// lambda is below 1e-12 while tau <= 1e18; past the double range lambda
/// becomes +inf while entropy stays finite.
struct SalemData {
    Integer tau;
    IntPolynomial polynomial;
    double lambda;
    double entropy;
    /// |lambda + 1/lambda - tau| / tau, evaluated in double precision.
    double relative_residual;
};

/// Rejects tau <= 2.
SalemData salem_data(const Integer& tau);

bool is_palindromic(const IntPolynomial& p);

/// alpha with alpha^2 = tau + 2 epsilon and alpha in A_epsilon, where
/// A_{+1} = {alpha >= 4} and A_{-1} = {alpha >= 4} \ {5, 7, 13, 17}.
std::optional<Integer> hkl_trace_admissible(const Integer& tau, Sign epsilon);

struct CycloFilterResult {
    bool passed;
    Sign epsilon;
    /// Root of tau + 2 epsilon, when a square.
    std::optional<Integer> root_plus;
    /// Root of 5 (tau - 2 epsilon), when a square; only evaluated for l > 2.
    std::optional<Integer> root_five;
    /// For l in {1, 2}: whether root_plus lies in A_epsilon.
    bool root_admissible = true;
};

/// Square conditions on tau + 2 epsilon and, for l not in {1, 2}, on
/// 5 (tau - 2 epsilon). For l in {1, 2} the root must also lie in A_epsilon.
CycloFilterResult prop_cyclo_filter_detail(const Integer& tau, unsigned l);
inline bool prop_cyclo_filter(const Integer& tau, unsigned l) { return prop_cyclo_filter_detail(tau, l).passed; }

struct PellSolution {
    Integer alpha;
    Integer beta;
    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Nonnegative solutions of alpha^2 - D beta^2 = 4 epsilon with beta <= beta_bound,
/// ascending in beta, by exhaustive search over beta. Rejects D <= 0 or square D.
std::vector<PellSolution> pell_solutions(const Integer& D, Sign epsilon, std::uint64_t beta_bound);

/// mult with 2 + mult * phi(l) = 22.
unsigned char_poly_multiplicity(unsigned l);

unsigned euler_phi(unsigned n);

}  // namespace k3fib
