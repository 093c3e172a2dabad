#include "sonc/faces.hpp"

#include <algorithm>
#include <map>

#include "sonc/json_writer.hpp"
#include "sonc/linalg.hpp"

namespace sonc {

namespace {

Integer binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Lattice points of degree <= two_d, even entries only when even is set.
std::vector<Exponent> lattice_points(int n, int two_d, bool even) {
    std::vector<Exponent> out;
    Exponent cur(n, 0);
    const int step = even ? 2 : 1;
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; e += step) {
            cur[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, two_d);
    return out;
}

// s^beta = 1 for every s in the orbit: full orbit forces every entry even,
// the half orbit (coordinate product +1) allows all-even or all-odd.
bool vanishes_on_orbit(const Exponent& beta, FaceQuery::Gamma kind) {
    bool all_even = true, all_odd = true;
    for (int e : beta) {
        if (e % 2 == 0)
            all_odd = false;
        else
            all_even = false;
    }
    if (kind == FaceQuery::Gamma::FullOrbit) return all_even;
    return all_even || all_odd;
}

struct WorkBudget {
    long long remaining;
    void spend(long long units) {
        remaining -= units;
        if (remaining < 0)
            throw BudgetExceeded(
                "agiform enumeration budget exceeded; pass override_budget for larger cases");
    }
};

}  // namespace

Integer FaceQuery::gamma_size() const {
    switch (kind) {
        case Gamma::FullOrbit: return integer_pow(2, n);
        case Gamma::HalfOrbit: return n == 0 ? Integer(1) : integer_pow(2, n - 1);
        case Gamma::Explicit: return Integer(points.size());
    }
    return 0;
}

std::string FaceQuery::gamma_name() const {
    switch (kind) {
        case Gamma::FullOrbit: return "full";
        case Gamma::HalfOrbit: return "half";
        case Gamma::Explicit: return "explicit";
    }
    return "?";
}

std::vector<Circuit> enumerate_agiforms(const FaceQuery& q) {
    if (!q.override_budget && (q.n > 4 || q.two_d > 16))
        throw BudgetExceeded("enumeration limited to n <= 4, 2d <= 16 by default");
    if (q.two_d % 2 != 0 || q.two_d <= 0) throw DomainError("degree must be even and positive");

    const int n = q.n;
    std::vector<Exponent> even_pts = lattice_points(n, q.two_d, true);
    std::vector<Exponent> all_pts = lattice_points(n, q.two_d, false);
    WorkBudget budget{q.override_budget ? 1ll << 40 : 20'000'000};

    std::vector<Circuit> agiforms;
    std::vector<int> chosen;

    auto try_support = [&](const std::vector<int>& idx) {
        std::vector<Exponent> vertices;
        vertices.reserve(idx.size());
        for (int i : idx) vertices.push_back(even_pts[i]);
        budget.spend(static_cast<long long>(idx.size() * idx.size()));
        if (affine_dimension(vertices) != static_cast<int>(vertices.size()) - 1) return;

        Exponent lo = vertices[0], hi = vertices[0];
        for (const auto& v : vertices)
            for (int k = 0; k < n; ++k) {
                lo[k] = std::min(lo[k], v[k]);
                hi[k] = std::max(hi[k], v[k]);
            }
        for (const auto& beta : all_pts) {
            bool in_box = true;
            for (int k = 0; k < n; ++k)
                if (beta[k] < lo[k] || beta[k] > hi[k]) in_box = false;
            if (!in_box) continue;
            if (q.kind != FaceQuery::Gamma::Explicit && !vanishes_on_orbit(beta, q.kind))
                continue;
            budget.spend(static_cast<long long>(idx.size() * idx.size() * n));
            auto lam = barycentric(vertices, beta);
            if (!lam) continue;

            SparsePoly p(n);
            for (std::size_t j = 0; j < vertices.size(); ++j) p.add_term(vertices[j], (*lam)[j]);
            p.add_term(beta, Rational(-1));
            if (q.kind == FaceQuery::Gamma::Explicit) {
                bool vanishes = true;
                for (const auto& s : q.points)
                    if (p.evaluate(s) != 0) {
                        vanishes = false;
                        break;
                    }
                if (!vanishes) continue;
            }
            agiforms.push_back(detect_circuit(p));
        }
    };

    auto choose = [&](auto&& self, std::size_t start, int left) -> void {
        if (left == 0) {
            try_support(chosen);
            return;
        }
        for (std::size_t i = start; i + left <= even_pts.size(); ++i) {
            chosen.push_back(static_cast<int>(i));
            self(self, i + 1, left - 1);
            chosen.pop_back();
        }
    };
    for (int r = 1; r <= n; ++r) choose(choose, 0, r + 1);
    return agiforms;
}

namespace {

// Rows of the agiform coefficient matrix over the union of their supports.
std::vector<std::vector<Rational>> coefficient_rows(const std::vector<Circuit>& agiforms) {
    std::vector<SparsePoly> polys;
    polys.reserve(agiforms.size());
    for (const auto& c : agiforms) polys.push_back(c.to_poly());

    std::map<Exponent, std::size_t, GradedLex> column;
    for (const auto& p : polys)
        for (const auto& [e, coef] : p.terms()) column.emplace(e, 0);
    std::size_t idx = 0;
    for (auto& [e, i] : column) i = idx++;

    std::vector<std::vector<Rational>> rows;
    rows.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<Rational> row(column.size(), Rational(0));
        for (const auto& [e, coef] : p.terms()) row[column.at(e)] = coef;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

BoundReport dimension_bounds(const FaceQuery& q) {
    const long d = q.two_d / 2;
    BoundReport b;
    switch (q.kind) {
        case FaceQuery::Gamma::FullOrbit:
            b.naive = binom(q.n + d, d);
            break;
        case FaceQuery::Gamma::HalfOrbit: {
            b.naive = binom(q.n + q.two_d, q.two_d);
            if (q.n == 2) b.bivariate = Integer(d * d + 2 * d + 1);
            if (q.n % 2 == 0) {
                Integer sum(0);
                for (long i = 0; i <= d; ++i) sum += binom(q.n + 2 * i - 1, 2 * i);
                b.even_n = sum;
            }
            break;
        }
        case FaceQuery::Gamma::Explicit:
            b.naive = binom(q.n + q.two_d, q.two_d);
            break;
    }
    return b;
}

std::pair<Integer, bool> dim_p_generic(int n, int two_d, const Integer& gamma_size) {
    Integer value = binom(n + two_d, two_d) - gamma_size * (n + 1);
    bool valid = two_d != 2 && !(n == 1 && two_d == 4 && gamma_size == 2);
    return {value, valid};
}

int univariate_face_dim(int two_d, int gamma_size) {
    if (two_d <= 0 || two_d % 2 != 0) throw DomainError("degree must be even and positive");
    if (gamma_size == 2) {
        if (two_d < 4) throw DomainError("two-point univariate face needs degree >= 4");
        return two_d / 2 - 1;
    }
    if (gamma_size == 1) {
        if (two_d < 2) throw DomainError("degree >= 2 required");
        return two_d - 1;
    }
    throw DomainError("univariate gamma size must be 1 or 2");
}

FaceReport face_dimension(const FaceQuery& q) {
    std::vector<Circuit> agiforms = enumerate_agiforms(q);

    FaceReport rep;
    rep.n = q.n;
    rep.two_d = q.two_d;
    rep.gamma = q.gamma_name();
    rep.gamma_size = q.gamma_size();
    rep.agiform_count = static_cast<long>(agiforms.size());
    rep.dim_c = exact_rank(coefficient_rows(agiforms));
    rep.basis_size = rep.dim_c;
    rep.bounds = dimension_bounds(q);

    if (Integer(rep.dim_c) > rep.bounds.naive ||
        (rep.bounds.bivariate && Integer(rep.dim_c) > *rep.bounds.bivariate) ||
        (rep.bounds.even_n && Integer(rep.dim_c) > *rep.bounds.even_n))
        throw Error("computed rank exceeds a proven dimension bound");

    if (q.kind != FaceQuery::Gamma::Explicit) {
        auto [value, valid] = dim_p_generic(q.n, q.two_d, rep.gamma_size);
        rep.dim_p_generic_value = value;
        rep.dim_p_valid = valid;
    }
    return rep;
}

std::vector<Circuit> face_basis(const FaceQuery& q) {
    std::vector<Circuit> agiforms = enumerate_agiforms(q);
    std::vector<Circuit> basis;
    for (std::size_t i : independent_rows(coefficient_rows(agiforms)))
        basis.push_back(agiforms[i]);
    return basis;
}

std::string BoundReport::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("naive").value_raw(naive.get_str());
    w.key("bivariate_refined");
    if (bivariate)
        w.value_raw(bivariate->get_str());
    else
        w.null();
    w.key("even_n_refined");
    if (even_n)
        w.value_raw(even_n->get_str());
    else
        w.null();
    w.end_object();
    return w.str();
}

std::string FaceReport::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("n").value(static_cast<long>(n));
    w.key("two_d").value(static_cast<long>(two_d));
    w.key("gamma").value(gamma);
    w.key("gamma_size").value_raw(gamma_size.get_str());
    w.key("dim_C").value(dim_c);
    w.key("dim_P_generic");
    if (dim_p_generic_value)
        w.value_raw(dim_p_generic_value->get_str());
    else
        w.null();
    w.key("dim_P_valid").value(dim_p_valid);
    w.key("bounds").value_raw(bounds.to_json());
    w.key("agiform_count").value(agiform_count);
    w.key("basis_size").value(basis_size);
    w.end_object();
    return w.str();
}

}  // namespace sonc
