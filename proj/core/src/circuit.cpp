#include "sonc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "sonc/json_writer.hpp"
#include "sonc/linalg.hpp"
#include "sonc/newton.hpp"

namespace sonc {

SparsePoly Circuit::to_poly() const {
    SparsePoly p(n);
    for (const auto& t : outer) p.add_term(t.exp, t.coef);
    if (inner) p.add_term(inner->exp, inner->coef);
    return p;
}

std::vector<int> Circuit::active_variables() const {
    std::vector<bool> used(n, false);
    for (const auto& t : outer)
        for (int i = 0; i < n; ++i)
            if (t.exp[i] > 0) used[i] = true;
    if (inner)
        for (int i = 0; i < n; ++i)
            if (inner->exp[i] > 0) used[i] = true;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (used[i]) out.push_back(i);
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Interior: return "interior";
        case Verdict::Boundary: return "boundary";
        case Verdict::Outside: return "outside";
        case Verdict::EvenNonnegative: return "interior-of-monomial-square-region";
    }
    return "?";
}

std::optional<std::vector<Rational>> barycentric(const std::vector<Exponent>& vertices,
                                                 const Exponent& beta) {
    if (vertices.empty()) throw DomainError("barycentric: no vertices");
    const std::size_t n = vertices[0].size();
    if (affine_dimension(vertices) != static_cast<int>(vertices.size()) - 1)
        throw DomainError("barycentric: affinely dependent vertex list");

    QMatrix a(n + 1, std::vector<Rational>(vertices.size(), Rational(0)));
    std::vector<Rational> b(n + 1, Rational(0));
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) a[i][j] = vertices[j][i];
        a[n][j] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) b[i] = beta[i];
    b[n] = 1;

    auto sol = solve_linear(std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    for (const auto& l : *sol)
        if (l <= 0) return std::nullopt;
    return sol;
}

namespace {

Circuit finish_proper(int n, std::vector<CircuitTerm> outer, CircuitTerm inner) {
    std::sort(outer.begin(), outer.end(),
              [](const CircuitTerm& a, const CircuitTerm& b) { return GradedLex{}(a.exp, b.exp); });
    std::vector<Exponent> vertices;
    vertices.reserve(outer.size());
    for (const auto& t : outer) vertices.push_back(t.exp);

    if (affine_dimension(vertices) != static_cast<int>(vertices.size()) - 1)
        throw NotACircuit("affinely dependent vertices");
    auto lam = barycentric(vertices, inner.exp);
    if (!lam)
        throw NotACircuit("inner exponent not in the relative interior of the simplex");

    Circuit c;
    c.n = n;
    c.outer = std::move(outer);
    c.lambda = std::move(*lam);
    c.inner_even = is_even_point(inner.exp);
    c.inner = std::move(inner);
    c.proper = true;
    c.degenerate = c.r() < n;
    c.has_constant_term = false;
    for (const auto& t : c.outer)
        if (degree(t.exp) == 0) c.has_constant_term = true;
    return c;
}

}  // namespace

Circuit detect_circuit(const SparsePoly& p) {
    if (p.is_zero()) throw DomainError("detect_circuit: zero polynomial");
    const int n = p.var_count();

    std::vector<CircuitTerm> squares;
    std::vector<CircuitTerm> special;  // negative coefficient or odd exponent
    for (const auto& [e, c] : p.terms()) {
        if (c > 0 && is_even_point(e))
            squares.push_back({e, c});
        else
            special.push_back({e, c});
    }

    if (special.size() > 1)
        throw NotACircuit(
            "more than one candidate inner term (non-even vertex or negative outer coefficient)");

    if (special.size() == 1) {
        if (squares.empty()) throw NotACircuit("no outer terms");
        if (static_cast<int>(squares.size()) > n + 1)
            throw NotACircuit("too many terms: " + std::to_string(p.term_count()) +
                              " support points for " + std::to_string(n) + " variables");
        return finish_proper(n, std::move(squares), std::move(special.front()));
    }

    // All terms are monomial squares.
    const std::size_t s = squares.size();
    std::vector<Exponent> pts;
    pts.reserve(s);
    for (const auto& t : squares) pts.push_back(t.exp);

    if (s >= 2 && affine_dimension(pts) < static_cast<int>(s) - 1) {
        // One support point may be interior to the simplex of the others:
        // a proper circuit with nonnegative inner coefficient.
        for (std::size_t j = 0; j < s; ++j) {
            std::vector<CircuitTerm> outer;
            for (std::size_t i = 0; i < s; ++i)
                if (i != j) outer.push_back(squares[i]);
            std::vector<Exponent> vs;
            for (const auto& t : outer) vs.push_back(t.exp);
            if (affine_dimension(vs) != static_cast<int>(vs.size()) - 1) continue;
            if (barycentric(vs, squares[j].exp))
                return finish_proper(n, std::move(outer), squares[j]);
        }
        throw NotACircuit("support is not a simplex plus one interior point");
    }
    if (static_cast<int>(s) > n + 1)
        throw NotACircuit("too many terms: " + std::to_string(s) + " monomial squares for " +
                          std::to_string(n) + " variables");

    Circuit c;
    c.n = n;
    c.outer = std::move(squares);
    std::sort(c.outer.begin(), c.outer.end(),
              [](const CircuitTerm& a, const CircuitTerm& b) { return GradedLex{}(a.exp, b.exp); });
    c.proper = false;
    c.degenerate = affine_dimension(pts) < n;
    c.has_constant_term = p.has_constant_term();
    return c;
}

ThetaComparison theta_compare(const Circuit& c) {
    if (!c.proper)
        throw DomainError("theta_compare: improper circuit (sum of monomial squares)");

    ThetaComparison cmp;
    cmp.q = 1;
    for (const auto& l : c.lambda) cmp.q = lcm(cmp.q, l.get_den());
    if (cmp.q > 1000000)
        throw BudgetExceeded("lambda denominators too large for exact theta comparison");
    const unsigned long q = cmp.q.get_ui();

    cmp.theta_q = 1;
    double logt = 0.0;
    for (std::size_t j = 0; j < c.outer.size(); ++j) {
        Rational ratio = c.outer[j].coef / c.lambda[j];
        Integer pj = c.lambda[j].get_num() * (cmp.q / c.lambda[j].get_den());
        cmp.theta_q *= rational_pow(ratio, pj.get_si());
        logt += c.lambda[j].get_d() * std::log(ratio.get_d());
    }
    cmp.theta_float = std::exp(logt);

    const auto& inner = *c.inner;
    if (c.inner_even && inner.coef >= 0) {
        cmp.verdict = Verdict::EvenNonnegative;
        return cmp;
    }
    Rational lhs = rational_pow(abs(inner.coef), static_cast<long>(q));
    if (lhs == cmp.theta_q)
        cmp.verdict = Verdict::Boundary;
    else if (lhs < cmp.theta_q)
        cmp.verdict = Verdict::Interior;
    else
        cmp.verdict = Verdict::Outside;
    return cmp;
}

SoncMembership is_sonc_member_given_decomposition(
    const std::vector<std::pair<Rational, Circuit>>& parts, int n) {
    SoncMembership out{true, -1, SparsePoly(n)};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& [mu, c] = parts[i];
        if (mu < 0) throw DomainError("negative weight in SONC decomposition");
        if (c.n != n) throw DomainError("variable count mismatch in SONC decomposition");
        bool ok = !c.proper || is_nonnegative_verdict(theta_compare(c).verdict);
        if (!ok) {
            out.accepted = false;
            out.offending_index = static_cast<long>(i);
        }
        out.sum += c.to_poly().scaled(mu);
    }
    return out;
}

bool realizability(int n, int two_d, bool inner_even) {
    if (two_d <= 0 || two_d % 2 != 0)
        throw DomainError("realizability: degree must be even and positive");
    if (inner_even) return two_d / 2 >= n + 1;
    return two_d >= n + 1;
}

Circuit homogenize_circuit(const Circuit& c, int target_degree) {
    return detect_circuit(c.to_poly().homogenize(target_degree));
}

bool theta_homogenization_check(const Circuit& c) {
    if (!c.proper) throw DomainError("theta_homogenization_check: improper circuit");
    SparsePoly form = c.to_poly().homogenize();
    detect_circuit(form);  // validates; propagates any failure

    const int two_d = c.to_poly().degree();
    std::vector<Exponent> hom_vertices;
    for (const auto& t : c.outer) {
        Exponent v(c.n + 1);
        v[0] = two_d - degree(t.exp);
        for (int i = 0; i < c.n; ++i) v[i + 1] = t.exp[i];
        hom_vertices.push_back(std::move(v));
    }
    Exponent hom_beta(c.n + 1);
    hom_beta[0] = two_d - degree(c.inner->exp);
    for (int i = 0; i < c.n; ++i) hom_beta[i + 1] = c.inner->exp[i];

    auto lam_bar = barycentric(hom_vertices, hom_beta);
    return lam_bar && *lam_bar == c.lambda;
}

Circuit scale_circuit(const Circuit& c, const Rational& mu) {
    if (mu <= 0) throw DomainError("scale_circuit: positive scale required");
    return detect_circuit(c.to_poly().scaled(mu));
}

std::string Circuit::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("n").value(static_cast<long>(n));
    w.key("outer").begin_array();
    for (const auto& t : outer) {
        w.begin_object();
        w.key("exp").begin_array();
        for (int e : t.exp) w.value(static_cast<long>(e));
        w.end_array();
        w.key("coef").value(to_string(t.coef));
        w.end_object();
    }
    w.end_array();
    w.key("inner");
    if (inner) {
        w.begin_object();
        w.key("exp").begin_array();
        for (int e : inner->exp) w.value(static_cast<long>(e));
        w.end_array();
        w.key("coef").value(to_string(inner->coef));
        w.end_object();
    } else {
        w.null();
    }
    w.key("lambda").begin_array();
    for (const auto& l : lambda) w.value(to_string(l));
    w.end_array();
    w.key("proper").value(proper);
    w.key("degenerate").value(degenerate);
    w.key("inner_even").value(inner_even);
    w.key("has_constant_term").value(has_constant_term);
    w.end_object();
    return w.str();
}

std::string ThetaComparison::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("q").value_raw(q.get_str());
    w.key("theta_q").value(to_string(theta_q));
    w.key("theta_float").value_double(theta_float);
    w.key("verdict").value(verdict_name(verdict));
    w.end_object();
    return w.str();
}

std::string SoncMembership::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("accepted").value(accepted);
    w.key("offending_index");
    if (offending_index < 0)
        w.null();
    else
        w.value(offending_index);
    w.key("sum").value_raw(sum.to_json());
    w.end_object();
    return w.str();
}

namespace {

CircuitTerm term_from_json(const nlohmann::json& j) {
    CircuitTerm t;
    t.exp = j.at("exp").get<std::vector<int>>();
    t.coef = rational_from_string(j.at("coef").get<std::string>());
    return t;
}

Circuit circuit_from_json_value(const nlohmann::json& j) {
    std::vector<CircuitTerm> terms;
    for (const auto& o : j.at("outer")) terms.push_back(term_from_json(o));
    if (j.contains("inner") && !j.at("inner").is_null())
        terms.push_back(term_from_json(j.at("inner")));
    if (terms.empty()) throw DomainError("circuit JSON without terms");
    int n = j.contains("n") ? j.at("n").get<int>()
                            : static_cast<int>(terms.front().exp.size());
    SparsePoly p(n);
    for (auto& t : terms) p.add_term(std::move(t.exp), std::move(t.coef));
    return detect_circuit(p);  // lambda recomputed, structure validated
}

}  // namespace

Circuit parse_circuit_json(std::string_view text) {
    try {
        return circuit_from_json_value(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(1, 1, std::string("circuit JSON: ") + err.what());
    }
}

std::vector<std::pair<Rational, Circuit>> parse_decomposition_json(std::string_view text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        const nlohmann::json& arr = j.is_object() && j.contains("parts") ? j.at("parts") : j;
        if (!arr.is_array()) throw ParseError(1, 1, "decomposition JSON: expected an array");
        std::vector<std::pair<Rational, Circuit>> parts;
        for (const auto& item : arr) {
            Rational mu(1);
            if (item.contains("mu")) mu = rational_from_string(item.at("mu").get<std::string>());
            parts.emplace_back(std::move(mu), circuit_from_json_value(item));
        }
        return parts;
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(1, 1, std::string("decomposition JSON: ") + err.what());
    }
}

}  // namespace sonc
