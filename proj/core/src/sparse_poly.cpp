#include "sonc/sparse_poly.hpp"

#include <sstream>

#include "sonc/json_writer.hpp"

namespace sonc {

void SparsePoly::add_term(Exponent e, Rational c) {
    if (static_cast<int>(e.size()) != n_)
        throw DomainError("exponent length does not match variable count");
    for (int v : e)
        if (v < 0) throw DomainError("negative exponent entry");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(e), std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    if (other.n_ != n_) throw DomainError("variable count mismatch in addition");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
    SparsePoly r = *this;
    r += other;
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
    return *this + (-other);
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
    SparsePoly r(n_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

SparsePoly SparsePoly::times_monomial(const Exponent& e, const Rational& c) const {
    if (static_cast<int>(e.size()) != n_)
        throw DomainError("exponent length does not match variable count");
    SparsePoly r(n_);
    if (c == 0) return r;
    for (const auto& [e0, coef] : terms_) {
        Exponent e1 = e0;
        for (int i = 0; i < n_; ++i) e1[i] += e[i];
        r.terms_.emplace(std::move(e1), coef * c);
    }
    return r;
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != n_)
        throw DomainError("evaluation point has wrong dimension");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            term *= rational_pow(point[i], e[i]);
        }
        total += term;
    }
    return total;
}

SparsePoly SparsePoly::homogenize(int target_degree) const {
    int d = degree();
    if (d < 0) throw DomainError("cannot homogenize the zero polynomial");
    if (target_degree < 0) target_degree = d;
    if (target_degree % 2 != 0)
        throw DomainError("homogenization degree must be even, got " +
                          std::to_string(target_degree));
    if (target_degree < d)
        throw DomainError("homogenization degree below polynomial degree");
    SparsePoly r(n_ + 1);
    for (const auto& [e, c] : terms_) {
        Exponent e1(n_ + 1);
        e1[0] = target_degree - sonc::degree(e);
        for (int i = 0; i < n_; ++i) e1[i + 1] = e[i];
        r.terms_.emplace(std::move(e1), c);
    }
    return r;
}

SparsePoly SparsePoly::dehomogenize() const {
    if (n_ < 1) throw DomainError("no variable to dehomogenize");
    SparsePoly r(n_ - 1);
    for (const auto& [e, c] : terms_)
        r.add_term(Exponent(e.begin() + 1, e.end()), c);
    return r;
}

Exponent SparsePoly::monomial_gcd() const {
    if (terms_.empty()) throw DomainError("monomial gcd of the zero polynomial");
    Exponent g = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < n_; ++i) g[i] = std::min(g[i], e[i]);
    return g;
}

SparsePoly SparsePoly::partial_derivative(int var) const {
    if (var < 0 || var >= n_) throw DomainError("derivative variable out of range");
    SparsePoly r(n_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent e1 = e;
        e1[var] -= 1;
        r.add_term(std::move(e1), c * e[var]);
    }
    return r;
}

std::string SparsePoly::to_text(int index_base) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool has_vars = sonc::degree(e) > 0;
        bool need_star = false;
        if (a != 1 || !has_vars) {
            out << to_string(a);
            need_star = true;
        }
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << "x" << (i + index_base);
            if (e[i] != 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

std::string SparsePoly::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("n").value(static_cast<long>(n_));
    w.key("terms").begin_array();
    for (const auto& [e, c] : terms_) {
        w.begin_object();
        w.key("exp").begin_array();
        for (int v : e) w.value(static_cast<long>(v));
        w.end_array();
        w.key("coef").value(to_string(c));
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

}  // namespace sonc
