#pragma once

#include <optional>
#include <vector>

#include "sonc/exponent.hpp"
#include "sonc/rational.hpp"

namespace sonc {

using QMatrix = std::vector<std::vector<Rational>>;

// Exact solve of A x = b. Returns nullopt if inconsistent. When the system is
// underdetermined one solution is returned (free variables set to zero) and
// *unique, if given, is cleared.
std::optional<std::vector<Rational>> solve_linear(QMatrix a, std::vector<Rational> b,
                                                  bool* unique = nullptr);

// Fraction-free Bareiss elimination over the integers; rational rows are
// admitted by clearing denominators per row first.
int exact_rank(const QMatrix& a);
int exact_rank_int(std::vector<std::vector<Integer>> m);

// Indices of a maximal linearly independent subset of the rows, greedily from
// the front. Size equals exact_rank(a).
std::vector<std::size_t> independent_rows(const QMatrix& a);

// Nonzero rational vector in the null space of a, or nullopt if a has full
// column rank.
std::optional<std::vector<Rational>> kernel_vector(QMatrix a);

// Exact feasibility of target = sum mu_i points_i with mu_i >= 0 summing to
// one; phase-1 simplex with Bland's rule.
bool in_convex_hull(const std::vector<Exponent>& points, const Exponent& target);

// Affine dimension of a point set (rank of differences); -1 for empty input.
int affine_dimension(const std::vector<Exponent>& points);

}  // namespace sonc
