#pragma once

#include <gmpxx.h>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sonc {

using Integer = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Recoverable input problems: bad circuits, uncovered parameter regimes, ...
struct DomainError : Error {
    using Error::Error;
};

struct NotACircuit : DomainError {
    explicit NotACircuit(const std::string& reason)
        : DomainError("not a circuit polynomial: " + reason) {}
};

struct BudgetExceeded : DomainError {
    using DomainError::DomainError;
};

struct ParseError : Error {
    int line = 1;
    int column = 1;
    ParseError(int line_, int column_, const std::string& what_)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) +
                ": " + what_),
          line(line_), column(column_) {}
};

// Canonical rational: lowest terms, positive denominator.
inline Rational make_rational(Integer num, Integer den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational rational_from_string(std::string_view s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0 || sgn(q.get_den()) <= 0)
        throw DomainError("invalid rational literal: '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

// "a" when integral, "a/b" otherwise.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw DomainError("zero raised to a negative power");
        return Rational(0);
    }
    Rational r;
    unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), mag);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), mag);
    if (e < 0) {
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
        if (sgn(r.get_den()) < 0) {
            mpz_neg(r.get_num_mpz_t(), r.get_num_mpz_t());
            mpz_neg(r.get_den_mpz_t(), r.get_den_mpz_t());
        }
    }
    return r;
}

inline Integer integer_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// 17 significant digits, enough for exact double round-trip.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace sonc
