#pragma once

#include <map>
#include <span>
#include <string>

#include "sonc/exponent.hpp"
#include "sonc/rational.hpp"

namespace sonc {

// Sparse multivariate polynomial with exact rational coefficients.
// Immutable by convention once built; no zero coefficients are stored and
// terms are kept in graded-lex order, so equal polynomials have identical
// serializations.
class SparsePoly {
public:
    using TermMap = std::map<Exponent, Rational, GradedLex>;

    explicit SparsePoly(int n = 0) : n_(n) {}

    static SparsePoly monomial(int n, Exponent e, Rational c) {
        SparsePoly p(n);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    int var_count() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Max term degree; -1 for the zero polynomial.
    int degree() const {
        return terms_.empty() ? -1 : sonc::degree(terms_.rbegin()->first);
    }

    bool has_constant_term() const {
        return !terms_.empty() && sonc::degree(terms_.begin()->first) == 0;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        return sonc::degree(terms_.begin()->first) == degree();
    }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Accumulates; erases the term when the sum cancels.
    void add_term(Exponent e, Rational c);

    SparsePoly& operator+=(const SparsePoly& other);
    SparsePoly operator+(const SparsePoly& other) const;
    SparsePoly operator-() const;
    SparsePoly operator-(const SparsePoly& other) const;
    SparsePoly scaled(const Rational& c) const;
    SparsePoly times_monomial(const Exponent& e, const Rational& c) const;
    bool operator==(const SparsePoly& other) const = default;

    Rational evaluate(std::span<const Rational> point) const;

    // x0^{2d} * p(x1/x0, ..., xn/x0) as a polynomial in n+1 variables,
    // variable 0 the homogenizing one. target_degree (even, >= degree)
    // defaults to the degree of p; odd-degree input is rejected.
    SparsePoly homogenize(int target_degree = -1) const;

    // Sets variable 0 to one and drops it.
    SparsePoly dehomogenize() const;

    // Componentwise minimum of all exponents; rejects the zero polynomial.
    Exponent monomial_gcd() const;

    SparsePoly partial_derivative(int var) const;

    // index_base 1 prints affine variables x1..xn, 0 prints form variables
    // x0..xn.
    std::string to_text(int index_base = 1) const;
    std::string to_json() const;

private:
    int n_;
    TermMap terms_;
};

}  // namespace sonc
