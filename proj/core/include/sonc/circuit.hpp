#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sonc/sparse_poly.hpp"

namespace sonc {

struct CircuitTerm {
    Exponent exp;
    Rational coef;
    bool operator==(const CircuitTerm&) const = default;
};

// Validated circuit polynomial: outer monomial squares whose exponents are
// the vertices of a simplex, plus at most one inner term whose exponent has
// positive barycentric coordinates with respect to those vertices. Improper
// circuits (sums of monomial squares) carry no inner term.
struct Circuit {
    int n = 0;
    std::vector<CircuitTerm> outer;   // graded-lex order, positive coefficients
    std::optional<CircuitTerm> inner;
    std::vector<Rational> lambda;     // barycentric coordinates, proper only
    bool proper = false;
    bool degenerate = false;          // Newton simplex not full-dimensional
    bool inner_even = true;
    bool has_constant_term = false;

    int r() const { return static_cast<int>(outer.size()) - 1; }
    SparsePoly to_poly() const;
    std::vector<int> active_variables() const;
    std::string to_json() const;
};

enum class Verdict { Interior, Boundary, Outside, EvenNonnegative };
std::string verdict_name(Verdict v);

// Theta comparisons never leave rational arithmetic: both |f_beta| and the
// circuit number are raised to the power q = lcm of the lambda denominators.
struct ThetaComparison {
    Integer q;
    Rational theta_q;  // Theta^q, exact
    Verdict verdict = Verdict::Interior;
    double theta_float = 0.0;  // display only

    std::string to_json() const;
};

// Accepts exactly the polynomials whose support is a circuit: even,
// affinely independent vertices with positive coefficients and one inner
// exponent interior to their simplex. Sums of monomial squares on a simplex
// support are accepted as improper circuits.
Circuit detect_circuit(const SparsePoly& p);

// Exact barycentric coordinates of beta relative to the vertices; nullopt
// when beta is outside the affine hull or some coordinate is <= 0. Rejects
// affinely dependent vertex lists.
std::optional<std::vector<Rational>> barycentric(const std::vector<Exponent>& vertices,
                                                 const Exponent& beta);

ThetaComparison theta_compare(const Circuit& c);

inline bool is_nonnegative_verdict(Verdict v) { return v != Verdict::Outside; }

struct SoncMembership {
    bool accepted = true;
    long offending_index = -1;
    SparsePoly sum;

    std::string to_json() const;
};

// Checks every weighted part for nonnegativity and returns the summed
// polynomial for cross-checking a claimed decomposition.
SoncMembership is_sonc_member_given_decomposition(
    const std::vector<std::pair<Rational, Circuit>>& parts, int n);

// Whether a proper circuit with the requested inner parity can exist in n
// variables at degree two_d.
bool realizability(int n, int two_d, bool inner_even);

// Homogenizes the circuit, recomputes the barycentric coordinates and checks
// they match the affine ones (hence equal circuit numbers).
bool theta_homogenization_check(const Circuit& c);

Circuit homogenize_circuit(const Circuit& c, int target_degree = -1);
Circuit scale_circuit(const Circuit& c, const Rational& mu);

Circuit parse_circuit_json(std::string_view text);
std::vector<std::pair<Rational, Circuit>> parse_decomposition_json(std::string_view text);

}  // namespace sonc
