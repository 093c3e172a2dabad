#include "sonc/projective.hpp"

#include <algorithm>

#include "sonc/combinatorics.hpp"
#include "sonc/json_writer.hpp"

namespace sonc {

namespace {

struct SurvivorAnalysis {
    std::vector<std::vector<int>> supports;  // 0-based affine indices, deduped
    std::vector<std::vector<int>> hitting_sets;
    bool infinite = false;
    std::vector<int> axis;  // 0-based affine indices
};

SurvivorAnalysis analyze_survivors(std::vector<std::vector<int>> supports, int n) {
    SurvivorAnalysis a;
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    a.supports = supports;
    a.hitting_sets = minimal_hitting_sets(supports, n);

    for (const auto& h : a.hitting_sets)
        if (static_cast<int>(h.size()) <= n - 2) a.infinite = true;

    // Axis e_i is a zero iff no surviving monomial is a pure power of x_i.
    for (int i = 0; i < n; ++i) {
        bool pure_power = false;
        for (const auto& s : supports)
            if (s.size() == 1 && s[0] == i) pure_power = true;
        if (!pure_power) a.axis.push_back(i);
    }
    return a;
}

void check_monomial_square(const Exponent& e, const Rational& c) {
    if (c <= 0 || !is_even_point(Exponent(e.begin() + 1, e.end())))
        throw DomainError(
            "surviving terms at x0 = 0 are not all monomial squares; "
            "the form does not come from nonnegative circuits");
}

InfinityReport report_from_analysis(const SurvivorAnalysis& a) {
    InfinityReport rep;
    auto shift = [](const std::vector<int>& v) {
        std::vector<int> out;
        out.reserve(v.size());
        for (int k : v) out.push_back(k + 1);
        return out;
    };
    for (const auto& s : a.supports) rep.surviving_supports.push_back(shift(s));
    for (const auto& h : a.hitting_sets) rep.minimal_hitting_sets.push_back(shift(h));
    if (a.infinite) {
        rep.kind = InfinityReport::Kind::Infinite;
        rep.additional_count = -1;
    } else {
        rep.kind = InfinityReport::Kind::Finite;
        rep.axis_zeros = shift(a.axis);
        rep.additional_count = static_cast<long>(a.axis.size());
    }
    return rep;
}

}  // namespace

InfinityReport zeros_at_infinity(const SparsePoly& form) {
    if (form.is_zero()) throw DomainError("zeros_at_infinity: zero form");
    if (!form.is_homogeneous()) throw DomainError("zeros_at_infinity: form is not homogeneous");
    const int n = form.var_count() - 1;
    if (n < 1) throw DomainError("zeros_at_infinity: need at least one affine variable");

    bool uses_x0 = false;
    for (const auto& [e, c] : form.terms())
        if (e[0] != 0) uses_x0 = true;
    if (!uses_x0) {
        // Fully homogeneous input f = its own homogenization: no additional
        // zeros by definition.
        InfinityReport rep;
        rep.kind = InfinityReport::Kind::Finite;
        rep.additional_count = 0;
        return rep;
    }

    std::vector<std::vector<int>> supports;
    for (const auto& [e, c] : form.terms()) {
        if (e[0] != 0) continue;
        check_monomial_square(e, c);
        std::vector<int> s = exponent_support(e);
        for (int& k : s) --k;  // drop the x0 slot
        supports.push_back(std::move(s));
    }
    return report_from_analysis(analyze_survivors(std::move(supports), n));
}

ProjectiveCount projective_zero_count(const std::vector<Circuit>& parts, int two_d) {
    if (parts.empty()) throw DomainError("projective_zero_count: empty decomposition");
    const int n = parts.front().n;
    if (two_d < 0)
        for (const auto& c : parts) two_d = std::max(two_d, c.to_poly().degree());
    if (two_d % 2 != 0) throw DomainError("projective_zero_count: odd degree");

    // Zeros at infinity of the sum: since each part survives at x0 = 0 as a
    // sum of monomial squares, positive terms cannot cancel across parts and
    // the union of the surviving supports tells the whole story.
    std::vector<std::vector<int>> supports;
    for (const auto& c : parts) {
        SparsePoly form = c.to_poly().homogenize(two_d);
        for (const auto& [e, coef] : form.terms()) {
            if (e[0] != 0) continue;
            check_monomial_square(e, coef);
            std::vector<int> s = exponent_support(e);
            for (int& k : s) --k;
            supports.push_back(std::move(s));
        }
    }
    SurvivorAnalysis inf = analyze_survivors(std::move(supports), n);

    ProjectiveCount out;
    ZeroSet affine = sonc_common_zeros(parts);
    if (affine.kind == ZeroSet::Kind::Infinite || inf.infinite) {
        out.finite = false;
        out.affine = -1;
        out.at_infinity = -1;
        out.total = -1;
        return out;
    }
    out.affine = affine.count();
    out.at_infinity = static_cast<long>(inf.axis.size());
    out.total = out.affine + out.at_infinity;

    // Single-circuit sanity: at most 3 additional zeros with a constant
    // term, at most 2 without one.
    if (parts.size() == 1 && parts[0].proper) {
        Integer cap = parts[0].has_constant_term ? 3 : 2;
        if (out.at_infinity > cap)
            throw Error("zeros at infinity exceed the single-circuit bound");
    }
    return out;
}

namespace {

Circuit make_agiform(int n, std::vector<Exponent> vertices, Exponent beta) {
    auto lam = barycentric(vertices, beta);
    if (!lam) throw Error("witness template: inner exponent not interior");
    SparsePoly p(n);
    for (std::size_t j = 0; j < vertices.size(); ++j) p.add_term(vertices[j], (*lam)[j]);
    p.add_term(std::move(beta), Rational(-1));
    return detect_circuit(p);
}

Exponent unit_exp(int n, int i, int e) {
    Exponent x(n, 0);
    x[i] = e;
    return x;
}

// Core block achieving the bound at n_plus_1 = two_d: three cyclic pair
// vertices on x1..x2 plus pure powers, inner exponent all ones. Affine view
// over `n` variables of which only 1..two_d-1 are used.
Circuit padded_core_circuit(int n, int two_d) {
    const int used = two_d - 1;
    std::vector<Exponent> vertices;
    Exponent v0(n, 0);
    v0[0] = two_d - 2;
    vertices.push_back(v0);  // x1^{2d-2}
    Exponent v1(n, 0);
    v1[0] = 2;
    v1[1] = two_d - 2;
    vertices.push_back(v1);  // x1^2 x2^{2d-2}
    vertices.push_back(unit_exp(n, 1, 2));  // x2^2
    for (int j = 2; j < used; ++j) vertices.push_back(unit_exp(n, j, two_d));
    Exponent beta(n, 0);
    for (int j = 0; j < used; ++j) beta[j] = 1;
    return make_agiform(n, std::move(vertices), std::move(beta));
}

}  // namespace

std::vector<Circuit> witness_decomposition(int n_plus_1, int two_d) {
    const int m = n_plus_1;
    const int n = m - 1;
    if (m < 2 || two_d < 2 || two_d % 2 != 0)
        throw DomainError("b_double_prime: need n+1 >= 2 and even degree >= 2");
    if (two_d == 2 && m >= 3)
        throw DomainError("b_double_prime: degree 2 with 3+ variables is uncovered");

    std::vector<Circuit> parts;
    if (m == 2) {
        if (two_d == 2)
            parts.push_back(make_agiform(1, {unit_exp(1, 0, 0), unit_exp(1, 0, 2)},
                                         unit_exp(1, 0, 1)));
        else if (two_d <= 6)
            // degree-4 circuit; at degree 6 the same circuit homogenizes with
            // a slack x0 power and picks up the zero at infinity
            parts.push_back(make_agiform(1, {unit_exp(1, 0, 0), unit_exp(1, 0, 4)},
                                         unit_exp(1, 0, 2)));
        else
            parts.push_back(make_agiform(1, {unit_exp(1, 0, 2), unit_exp(1, 0, two_d - 2)},
                                         unit_exp(1, 0, two_d - 4)));
        return parts;
    }
    if (m == 3) {
        if (two_d == 4) {
            parts.push_back(detect_circuit(SparsePoly::monomial(2, {2, 0}, Rational(1))));
            parts.push_back(detect_circuit(SparsePoly::monomial(2, {2, 2}, Rational(1))));
            parts.push_back(detect_circuit(SparsePoly::monomial(2, {0, 2}, Rational(1))));
        } else {
            parts.push_back(make_agiform(
                2, {Exponent{2, 0}, Exponent{0, 4}, Exponent{two_d - 2, 2}}, Exponent{2, 2}));
        }
        return parts;
    }

    if (two_d < m) {
        parts.push_back(padded_core_circuit(n, two_d));
        for (int j = two_d - 1; j < n; ++j)
            parts.push_back(detect_circuit(SparsePoly::monomial(n, unit_exp(n, j, two_d),
                                                                Rational(1))));
        return parts;
    }

    // Constant term, n-3 pure powers, three cyclic pairs on the last three
    // variables; inner all ones (odd regime) or all twos (even regime).
    const bool even_inner = two_d >= 2 * m;
    std::vector<Exponent> vertices;
    vertices.push_back(Exponent(n, 0));
    for (int j = 0; j < n - 3; ++j) vertices.push_back(unit_exp(n, j, two_d));
    for (int t = 0; t < 3; ++t) {
        Exponent v(n, 0);
        v[n - 3 + t] = 2;
        v[n - 3 + (t + 1) % 3] = two_d - 2;
        vertices.push_back(std::move(v));
    }
    Exponent beta(n, even_inner ? 2 : 1);
    parts.push_back(make_agiform(n, std::move(vertices), std::move(beta)));
    return parts;
}

SparsePoly witness_form(int n_plus_1, int two_d) {
    SparsePoly form(n_plus_1);
    for (const auto& c : witness_decomposition(n_plus_1, two_d))
        form += c.to_poly().homogenize(two_d);
    return form;
}

BNumberReport b_double_prime(int n_plus_1, int two_d) {
    const int m = n_plus_1;
    BNumberReport rep;
    rep.n_plus_1 = m;
    rep.two_d = two_d;

    if (m == 2) {
        if (two_d == 2) {
            rep.value = 1;
            rep.regime = "binary degree 2";
        } else if (two_d == 4) {
            rep.value = 2;
            rep.regime = "binary degree 4";
        } else if (two_d == 6) {
            rep.value = 3;
            rep.regime = "binary degree 6";
        } else {
            rep.value = 4;
            rep.regime = "binary degree >= 8";
        }
    } else if (m == 3) {
        if (two_d == 4) {
            rep.value = 3;
            rep.regime = "ternary quartic (monomial squares)";
        } else {
            rep.value = 7;
            rep.regime = "ternary degree >= 6";
        }
    } else if (two_d < m) {
        rep.value = integer_pow(2, two_d - 2) + 3;
        rep.regime = "degree below variable count: padded core";
    } else if (two_d < 2 * m) {
        rep.value = integer_pow(2, m - 2) + 3;
        rep.regime = "odd inner exponent";
    } else {
        rep.value = integer_pow(2, m - 1) + 3;
        rep.regime = "even inner exponent";
    }

    std::vector<Circuit> parts = witness_decomposition(m, two_d);
    std::vector<std::pair<Rational, Circuit>> weighted;
    for (const auto& c : parts) weighted.emplace_back(Rational(1), c);
    if (!is_sonc_member_given_decomposition(weighted, m - 1).accepted)
        throw Error("witness decomposition is not SONC");

    ProjectiveCount count = projective_zero_count(parts, two_d);
    if (!count.finite || count.total != rep.value)
        throw Error("witness zero count does not match the b-number value");
    rep.witness = witness_form(m, two_d);
    rep.witness_zero_count = count.total;
    return rep;
}

std::string InfinityReport::to_json() const {
    JsonWriter w;
    w.begin_object();
    auto write_sets = [&](const char* key, const std::vector<std::vector<int>>& sets) {
        w.key(key).begin_array();
        for (const auto& s : sets) {
            w.begin_array();
            for (int k : s) w.value(static_cast<long>(k));
            w.end_array();
        }
        w.end_array();
    };
    write_sets("surviving_supports", surviving_supports);
    write_sets("minimal_hitting_sets", minimal_hitting_sets);
    w.key("kind").value(kind == Kind::Finite ? "finite" : "infinite");
    w.key("axis_zeros").begin_array();
    for (int k : axis_zeros) w.value(static_cast<long>(k));
    w.end_array();
    w.key("additional_count");
    if (kind == Kind::Finite)
        w.value_raw(additional_count.get_str());
    else
        w.null();
    w.end_object();
    return w.str();
}

std::string ProjectiveCount::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("finite").value(finite);
    auto emit = [&](const char* key, const Integer& v) {
        w.key(key);
        if (finite)
            w.value_raw(v.get_str());
        else
            w.null();
    };
    emit("affine", affine);
    emit("at_infinity", at_infinity);
    emit("total", total);
    w.end_object();
    return w.str();
}

std::string BNumberReport::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("n_plus_1").value(static_cast<long>(n_plus_1));
    w.key("two_d").value(static_cast<long>(two_d));
    w.key("value").value_raw(value.get_str());
    w.key("regime").value(regime);
    w.key("witness").value(witness.to_text(0));
    w.key("witness_zero_count").value_raw(witness_zero_count.get_str());
    w.end_object();
    return w.str();
}

}  // namespace sonc
