#pragma once

#include <string>
#include <vector>

#include "sonc/circuit.hpp"
#include "sonc/real_zeros.hpp"

namespace sonc {

// Zeros [0:v] of a homogeneous SONC form. A point with zero-coordinate set Z
// kills the surviving monomial squares iff Z hits every surviving support,
// so the analysis is a minimal-transversal computation.
struct InfinityReport {
    enum class Kind { Finite, Infinite };
    // Variable index sets use the form's numbering x1..xn (x0 is the
    // homogenizing variable and never appears).
    std::vector<std::vector<int>> surviving_supports;
    std::vector<std::vector<int>> minimal_hitting_sets;
    Kind kind = Kind::Finite;
    std::vector<int> axis_zeros;  // i with [0:...:1:...:0] a zero (axis x_i)
    Integer additional_count;     // -1 when infinite

    std::string to_json() const;
};

// form must be homogeneous; every term surviving at x0 = 0 must be a
// monomial square, except for the fully homogeneous case (x0 absent), which
// reports zero additional zeros by definition.
InfinityReport zeros_at_infinity(const SparsePoly& form);

struct ProjectiveCount {
    bool finite = true;
    Integer affine = 0;       // zeros of the dehomogenization, subspace zeros included
    Integer at_infinity = 0;  // additional zeros at x0 = 0
    Integer total = 0;

    std::string to_json() const;
};

// Counts the projective zeros of the sum of the given nonnegative circuits
// homogenized at degree two_d (default: the maximum part degree).
ProjectiveCount projective_zero_count(const std::vector<Circuit>& parts, int two_d = -1);

struct BNumberReport {
    int n_plus_1 = 0;
    int two_d = 0;
    Integer value;
    std::string regime;
    SparsePoly witness{0};
    Integer witness_zero_count;

    std::string to_json() const;
};

// Largest finite projective zero count over SONC forms in n_plus_1 variables
// of degree two_d, together with a witness form achieving it; the witness
// count is verified before the report is returned. (n_plus_1, 2) is only
// covered for n_plus_1 = 2.
BNumberReport b_double_prime(int n_plus_1, int two_d);

// The witness form alone.
SparsePoly witness_form(int n_plus_1, int two_d);

// The witness as affine circuits to be homogenized at two_d.
std::vector<Circuit> witness_decomposition(int n_plus_1, int two_d);

}  // namespace sonc
