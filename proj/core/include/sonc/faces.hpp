#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sonc/circuit.hpp"

namespace sonc {

// A prescribed vanishing set. The orbit kinds are the sign-vector choices:
// the full orbit {+-1}^n and the half orbit of sign vectors with coordinate
// product +1.
struct FaceQuery {
    enum class Gamma { FullOrbit, HalfOrbit, Explicit };

    int n = 1;
    int two_d = 2;
    Gamma kind = Gamma::FullOrbit;
    std::vector<std::vector<Rational>> points;  // Explicit only
    bool override_budget = false;

    Integer gamma_size() const;
    std::string gamma_name() const;
};

// All agiforms (outer coefficients lambda_j, inner coefficient -1) over
// affinely independent even support sets of degree <= two_d that vanish on
// every point of Gamma. Sub-simplex vertex sets are included.
std::vector<Circuit> enumerate_agiforms(const FaceQuery& q);

struct BoundReport {
    Integer naive;                    // binom(n+d,d) full, binom(n+2d,2d) half
    std::optional<Integer> bivariate;  // d^2+2d+1, half orbit with n = 2
    std::optional<Integer> even_n;     // sum_i binom(n+2i-1,2i), half orbit, even n

    std::string to_json() const;
};

BoundReport dimension_bounds(const FaceQuery& q);

// binom(n+2d,2d) - |Gamma|*(n+1); the flag is false where the generic count
// is not available (degree 2, and the univariate degree-4 two-point case).
std::pair<Integer, bool> dim_p_generic(int n, int two_d, const Integer& gamma_size);

// Closed-form dimension of the univariate exposed face: gamma_size 2 needs
// two_d >= 4 and gives d-1; gamma_size 1 needs two_d >= 2 and gives 2d-1.
int univariate_face_dim(int two_d, int gamma_size);

struct FaceReport {
    int n = 0;
    int two_d = 0;
    std::string gamma;
    Integer gamma_size;
    long dim_c = 0;  // exact rank of the agiform coefficient matrix
    std::optional<Integer> dim_p_generic_value;
    bool dim_p_valid = false;
    BoundReport bounds;
    long agiform_count = 0;
    long basis_size = 0;

    std::string to_json() const;
};

FaceReport face_dimension(const FaceQuery& q);

// A maximal linearly independent agiform subset (the rank witness).
std::vector<Circuit> face_basis(const FaceQuery& q);

}  // namespace sonc
