#pragma once

#include <numeric>
#include <vector>

namespace sonc {

// A lattice exponent vector; entry i is the power of variable i.
using Exponent = std::vector<int>;

inline int degree(const Exponent& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

// Every entry even.
inline bool is_even_point(const Exponent& a) {
    for (int e : a)
        if (e % 2 != 0) return false;
    return true;
}

// Graded lexicographic: degree first, then lex. Canonical term order.
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

inline std::vector<int> exponent_support(const Exponent& a) {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        if (a[i] != 0) s.push_back(i);
    return s;
}

}  // namespace sonc
