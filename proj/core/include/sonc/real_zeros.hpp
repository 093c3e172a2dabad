#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sonc/circuit.hpp"
#include "sonc/magnitude.hpp"

namespace sonc {

// One zero in (R*)^n: coordinates signs[i] * magnitudes[i].
struct AffineZero {
    std::vector<int> signs;  // +1 or -1
    std::vector<ExactMagnitude> magnitudes;
    bool operator==(const AffineZero&) const = default;
};

// Zeros on a coordinate subspace: coordinates in zero_coords vanish, the
// rest carry sign/magnitude data like an AffineZero over the complement.
struct SubspaceZeros {
    std::vector<int> zero_coords;
    std::vector<AffineZero> points;  // indexed over the complement, ascending
};

struct CoordinateZeroReport {
    bool origin = false;
    // Minimal hitting sets of all outer supports: the strata of coordinate
    // subspaces contained in the zero set.
    std::vector<std::vector<int>> hitting_sets;
    std::vector<SubspaceZeros> strata;  // finite case only
};

struct InfiniteWitness {
    enum class Kind { DegenerateDirection, CoordinateFamily, FreeVariable };
    Kind kind = Kind::CoordinateFamily;
    std::vector<Rational> direction;  // kernel of the exponent-difference matrix
    std::vector<int> stratum;         // zero-coordinate set of an infinite family
    std::string to_json() const;
};

struct ZeroSet {
    enum class Kind { Finite, Infinite };
    Kind kind = Kind::Finite;
    std::vector<AffineZero> zeros;  // V*(f), lex order on sign vectors
    std::optional<CoordinateZeroReport> coordinate_zeros;
    std::optional<InfiniteWitness> infinite_witness;

    // Total number of affine zeros in the finite case (V* + subspace zeros
    // + origin).
    Integer count() const;
    std::string to_json() const;
};

struct DegenerateMagnitudes {
    std::vector<Rational> direction;
};
using MagnitudeResult = std::variant<std::vector<ExactMagnitude>, DegenerateMagnitudes>;

// Solves <s, alpha(j)-alpha(0)> = log rho_j exactly; |v_i| = prod rho_j^{c_ij}.
// Requires a proper boundary circuit; r < n yields the degenerate marker
// with the kernel direction of the infinite zero family.
MagnitudeResult circuit_zero_magnitudes(const Circuit& c);

struct SignPatterns {
    bool enumerated = false;                 // explicit list present (n <= 20)
    std::vector<std::vector<int>> patterns;  // lex order, +1 before -1
    Integer count;                           // closed form, valid for all n
};

// All sign vectors sigma with sigma^beta = -sgn(f_beta) (all of them when
// beta is even); requires a proper boundary circuit.
SignPatterns circuit_sign_patterns(const Circuit& c);

// Complete affine zero set of a nonnegative circuit: magnitudes x signs for
// boundary circuits, empty for interior ones, coordinate-subspace zeros
// reported separately, infinite families flagged with a witness.
ZeroSet circuit_zeros(const Circuit& c);

// Common zeros of a SONC decomposition; a sum vanishes exactly where every
// part does.
ZeroSet sonc_common_zeros(const std::vector<Circuit>& parts);

// f''(v) > 0 at every zero v of a univariate proper boundary circuit,
// decided in exact arithmetic.
bool univariate_second_order_check(const Circuit& c);

struct CircuitParity {
    bool beta_all_even = true;
    bool has_constant_term = true;
};

struct CountPredicate {
    std::vector<Integer> admissible;  // ascending
    bool allows_infinite = false;

    bool admits(const Integer& count) const;
    std::string to_json() const;
};

// Admissible total zero counts for a sum of nonnegative circuits with the
// given inner parities, for cross-checking enumerated results.
CountPredicate count_zeros_formula(int n, const std::vector<CircuitParity>& parts);

// A rational point with f < 0 for a circuit with verdict "outside":
// float magnitudes from the zero formula, rounded dyadically and certified
// by exact evaluation.
std::vector<Rational> negativity_witness(const Circuit& c);

// The equal-weighted-terms identity at a claimed zero, checked as exact
// power products, plus the sign condition on the inner term.
bool verify_circuit_zero(const Circuit& c, const AffineZero& zero);

}  // namespace sonc
