#pragma once

#include <optional>
#include <string_view>

#include "sonc/sparse_poly.hpp"

namespace sonc {

// Text grammar: terms separated by + or -; a term is a rational coefficient
// and/or *-separated powers x<k>^<e>. index_base 1 reads affine input
// (x1..xn, x0 rejected as reserved), 0 reads forms (x0..xn).
// n_vars forces the variable count; by default it is inferred from the
// largest index seen.
SparsePoly parse_poly_text(std::string_view text, int index_base = 1,
                           std::optional<int> n_vars = std::nullopt);

// {"n": int, "terms": [{"exp": [int...], "coef": "a/b"}...]}
SparsePoly parse_poly_json(std::string_view text);

// Dispatches on a leading '{'.
SparsePoly parse_poly_auto(std::string_view text, int index_base = 1,
                           std::optional<int> n_vars = std::nullopt);

}  // namespace sonc
