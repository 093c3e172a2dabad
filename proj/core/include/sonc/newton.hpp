#pragma once

#include <string>
#include <vector>

#include "sonc/sparse_poly.hpp"

namespace sonc {

// Newton-polytope view of a polynomial's support.
struct SupportReport {
    std::vector<Exponent> vertices;  // graded-lex sorted
    int affine_dim = 0;
    bool has_constant_term = false;
    bool full_dimensional = false;  // affine_dim == variable count

    std::string to_json() const;
};

// Vertex set of New(p), affine dimension of the support, and flags.
// Rejects the zero polynomial. Vertices are found by the exact test
// "not a rational convex combination of the other support points".
SupportReport newton_support_classify(const SparsePoly& p);

std::vector<Exponent> support_points(const SparsePoly& p);

}  // namespace sonc
