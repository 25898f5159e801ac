#pragma once

// Generator-candidate analysis for automorphisms acting on the lattice
// L_m(a) as powers of AB. Every verdict is a necessary condition only:
// a surviving candidate is not proven to be realized geometrically.

#include "k3fib/integer.hpp"
#include "k3fib/lattice.hpp"
#include "k3fib/salem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3fib {

enum class ActionClass { symplectic, anti_symplectic, order_l };
enum class Verdict { survives, excluded };

const char* to_string(ActionClass c);
const char* to_string(Verdict v);
ActionClass action_class_for(unsigned l);

/// Filter identifiers.
namespace filter {
inline constexpr const char* kProp26 = "F-PROP26";
inline constexpr const char* kHkl = "F-HKL";
inline constexpr const char* kResultant = "F-RESULTANT";
inline constexpr const char* kIntegrality = "F-INTEGRALITY";
// Target-exponent scenario only.
inline constexpr const char* kOrderDividesTarget = "F-ORDER-DIVIDES-TARGET";
inline constexpr const char* kParity = "F-PARITY";
inline constexpr const char* kHalfTarget = "F-HALF-TARGET";
inline constexpr const char* kRealize = "F-REALIZE";
inline constexpr const char* kReferenceLiteral = "F-REFERENCE-LITERAL";
}  // namespace filter

struct FilterCheck {
    std::string id;
    bool passed;
    /// Witness data: roots, failing primes, resultant values.
    std::string detail;
};

struct CandidatePair {
    unsigned l = 1;
    std::int64_t k = 1;
    Integer tau;
    ActionClass action = ActionClass::symplectic;
    Verdict verdict = Verdict::survives;
    /// Every filter evaluated on this candidate, in evaluation order.
    std::vector<FilterCheck> checks;

    /// Failing checks; nonempty exactly when excluded.
    std::vector<FilterCheck> reasons() const;
    std::pair<unsigned, std::int64_t> key() const { return {l, k}; }
};

struct CharPolyShape {
    unsigned l;
    unsigned multiplicity;
    /// e.g. "(x^2 - 47x + 1)(x - 1)^20"
    std::string text;
};

struct AnalysisReport {
    std::uint64_t m = 0;
    std::uint64_t a = 0;
    Integer discriminant;
    std::vector<Integer> discriminant_primes;
    std::uint64_t entry_point = 0;
    bool theorem1_applies = false;
    std::optional<CandidatePair> generator;
    std::vector<CandidatePair> candidates;  // sorted by (l, k)
    /// "determined" (one survivor), "inconclusive" (several) or "none".
    std::string conclusion;
    std::vector<CharPolyShape> char_poly_shapes;  // one per survivor
    std::vector<SalemData> salem;                 // one per survivor
    std::vector<std::string> errata_flags;

    std::vector<CandidatePair> survivors() const;
};

/// Entry-point generator when 5 does not divide e = entry_point(a, m):
/// (l = 1, k = e) for e even, (l = 2, k = e) for e odd. Rejects m < 2.
AnalysisReport theorem1_generator(std::uint64_t m, std::uint64_t a);

/// Closure-rule candidates with every filter evaluated. Rejects m < 2.
AnalysisReport generator_candidates(std::uint64_t m, std::uint64_t a);

struct Realization {
    bool realized;
    std::optional<Sign> epsilon;
};

/// Whether (AB)^n acts on A(L_m(a)) as +id (n even) or -id (n odd).
Realization verify_realization(std::uint64_t m, std::uint64_t a, std::int64_t n);

/// Characteristic polynomial shape S(x) Phi_l(x)^mult on the rank-22 lattice.
CharPolyShape char_poly_shape(const Integer& tau, unsigned l);

struct TargetScenarioReport {
    std::uint64_t m = 0;
    std::uint64_t target = 100;
    /// Every (l, k) with k | target, all filters evaluated; sorted by (l, k).
    std::vector<CandidatePair> considered;
    /// Survivors of every filter including the reference's literal exclusion.
    std::vector<std::pair<unsigned, std::int64_t>> literal_survivors;
    /// Survivors when the literal exclusion without derivation is dropped.
    std::vector<std::pair<unsigned, std::int64_t>> derived_survivors;
    AnalysisReport closure;
    std::vector<std::string> errata_flags;
};

/// Thrown when the scenario's divisibility preconditions fail.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Reference-style enumeration for a = 1 when m | f_100 and m does not divide f_50.
TargetScenarioReport example_100_scenario(std::uint64_t m);

/// Values printed in the reference worked examples, checked against our
/// computations. `published_resultant_flag` returns an erratum line when
/// (p, q) is a published pair and `value` differs from the printed constant.
struct PublishedResultant {
    Integer tau;
    unsigned l;
    Integer printed;
    const char* printed_text;
};
const std::vector<PublishedResultant>& published_resultants();
std::optional<std::string> published_resultant_flag(const IntPolynomial& p, const IntPolynomial& q,
                                                    const Integer& value);

}  // namespace k3fib
