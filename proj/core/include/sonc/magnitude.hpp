#pragma once

#include <map>
#include <string>
#include <vector>

#include "sonc/rational.hpp"

namespace sonc {

// Positive real stored as a prime-factored power product prod p^{e_p} with
// rational exponents. Equality of factor maps is equality of the reals, so
// zero coordinates of different circuits can be compared exactly.
class ExactMagnitude {
public:
    ExactMagnitude() = default;  // the number one

    static ExactMagnitude from_rational(const Rational& q);

    ExactMagnitude pow(const Rational& e) const;
    ExactMagnitude operator*(const ExactMagnitude& other) const;
    ExactMagnitude inverse() const;

    bool operator==(const ExactMagnitude& other) const = default;
    bool is_one() const { return factors_.empty(); }

    // Exact rational value when all exponents are integers.
    bool as_rational(Rational* out = nullptr) const;

    double to_double() const;
    const std::map<Integer, Rational>& factors() const { return factors_; }

    std::string to_json() const;

private:
    std::map<Integer, Rational> factors_;
};

// Prime factorization of n >= 1, ascending primes. Trial division with a
// Pollard rho fallback; inputs here are desk scale.
std::vector<std::pair<Integer, int>> factorize(Integer n);

}  // namespace sonc
