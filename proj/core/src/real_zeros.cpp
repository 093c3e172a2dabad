#include "sonc/real_zeros.hpp"

#include <algorithm>
#include <cmath>

#include "sonc/combinatorics.hpp"
#include "sonc/json_writer.hpp"
#include "sonc/linalg.hpp"

namespace sonc {

namespace {

// +1 sorts before -1 so the pattern list is lexicographic in the paper's
// presentation order.
bool sign_vector_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

struct PartAnalysis {
    const Circuit* circuit = nullptr;
    std::vector<int> active;
    Verdict verdict = Verdict::EvenNonnegative;  // improper parts act as nonnegative
    bool has_vstar = false;                      // proper boundary
    bool degenerate_active = false;              // r < |active|
    std::vector<ExactMagnitude> mags;            // per active coordinate
    std::vector<int> odd_coords;                 // beta's odd coordinates
    int parity_target = 0;                       // product of signs on odd_coords: (-1)^target
    std::vector<std::vector<int>> outer_supports;
};

std::vector<Rational> degenerate_direction(const Circuit& c) {
    QMatrix m;
    const Exponent& base = c.outer.front().exp;
    for (std::size_t j = 1; j < c.outer.size(); ++j) {
        std::vector<Rational> row;
        row.reserve(c.n);
        for (int k = 0; k < c.n; ++k) row.emplace_back(c.outer[j].exp[k] - base[k]);
        m.push_back(std::move(row));
    }
    if (m.empty()) m.push_back(std::vector<Rational>(c.n, Rational(0)));
    auto k = kernel_vector(std::move(m));
    if (!k) throw Error("degenerate circuit without kernel direction");
    return *k;
}

// Magnitudes over the active coordinates of a proper boundary circuit with
// full-dimensional Newton simplex there.
std::vector<ExactMagnitude> solve_magnitudes(const Circuit& c, const std::vector<int>& active) {
    const std::size_t m = active.size();
    const Exponent& base = c.outer.front().exp;
    const Rational& f0 = c.outer.front().coef;
    const Rational& l0 = c.lambda.front();

    QMatrix mat(m, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> rho;
    for (std::size_t j = 1; j < c.outer.size(); ++j) {
        for (std::size_t i = 0; i < m; ++i)
            mat[j - 1][i] = c.outer[j].exp[active[i]] - base[active[i]];
        rho.push_back(c.lambda[j] * f0 / (l0 * c.outer[j].coef));
    }

    // Columns of the inverse: c_ij with s_i = sum_j c_ij log rho_j.
    QMatrix inv_cols;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> e(m, Rational(0));
        e[j] = 1;
        auto col = solve_linear(mat, std::move(e));
        if (!col) throw Error("exponent-difference matrix is singular");
        inv_cols.push_back(std::move(*col));
    }

    std::vector<ExactMagnitude> mags(m);
    for (std::size_t i = 0; i < m; ++i) {
        ExactMagnitude v;
        for (std::size_t j = 0; j < m; ++j)
            v = v * ExactMagnitude::from_rational(rho[j]).pow(inv_cols[j][i]);
        mags[i] = std::move(v);
    }
    return mags;
}

PartAnalysis analyze_part(const Circuit& c, bool allow_degenerate) {
    PartAnalysis a;
    a.circuit = &c;
    a.active = c.active_variables();
    for (const auto& t : c.outer) a.outer_supports.push_back(exponent_support(t.exp));

    if (!c.proper) return a;  // sum of monomial squares: positive on (R*)^active

    a.verdict = theta_compare(c).verdict;
    if (a.verdict == Verdict::Outside)
        throw DomainError("circuit is not nonnegative");
    if (a.verdict != Verdict::Boundary) return a;

    a.degenerate_active = c.r() < static_cast<int>(a.active.size());
    if (a.degenerate_active) {
        if (!allow_degenerate)
            throw DomainError("degenerate circuit in a SONC intersection is unsupported");
        return a;
    }
    a.has_vstar = true;
    a.mags = solve_magnitudes(c, a.active);
    const auto& inner = *c.inner;
    for (int k : a.active)
        if (inner.exp[k] % 2 != 0) a.odd_coords.push_back(k);
    a.parity_target = sgn(inner.coef) > 0 ? 1 : 0;
    return a;
}

ZeroSet infinite_zero_set(InfiniteWitness w) {
    ZeroSet z;
    z.kind = ZeroSet::Kind::Infinite;
    z.infinite_witness = std::move(w);
    return z;
}

ZeroSet common_zeros_impl(const std::vector<Circuit>& parts) {
    if (parts.empty()) throw DomainError("empty circuit list");
    const int n = parts.front().n;
    for (const auto& c : parts)
        if (c.n != n) throw DomainError("variable count mismatch between parts");
    if (n > 16) throw BudgetExceeded("coordinate-stratum sweep limited to 16 variables");

    std::vector<PartAnalysis> analysis;
    analysis.reserve(parts.size());
    for (const auto& c : parts) analysis.push_back(analyze_part(c, parts.size() == 1));

    if (parts.size() == 1 && analysis[0].degenerate_active) {
        InfiniteWitness w;
        w.kind = InfiniteWitness::Kind::DegenerateDirection;
        w.direction = degenerate_direction(parts[0]);
        return infinite_zero_set(std::move(w));
    }

    std::vector<std::vector<int>> all_outer_supports;
    for (const auto& a : analysis)
        for (const auto& s : a.outer_supports) all_outer_supports.push_back(s);

    ZeroSet out;
    CoordinateZeroReport coord;
    coord.hitting_sets = minimal_hitting_sets(all_outer_supports, n);

    for (unsigned long zmask = 0; zmask < (1ul << n); ++zmask) {
        std::vector<const PartAnalysis*> vstar_parts;
        bool feasible = true;
        for (const auto& a : analysis) {
            bool touches = false;
            for (int k : a.active)
                if (zmask & (1ul << k)) {
                    touches = true;
                    break;
                }
            if (!touches) {
                if (!a.has_vstar) {
                    feasible = false;
                    break;
                }
                vstar_parts.push_back(&a);
            } else {
                for (const auto& s : a.outer_supports) {
                    bool hit = false;
                    for (int k : s)
                        if (zmask & (1ul << k)) {
                            hit = true;
                            break;
                        }
                    if (!hit) {
                        feasible = false;
                        break;
                    }
                }
                if (!feasible) break;
            }
        }
        if (!feasible) continue;

        // Coordinates pinned by some part's magnitude data.
        std::vector<std::optional<ExactMagnitude>> mag(n);
        bool consistent = true;
        for (const auto* a : vstar_parts) {
            for (std::size_t i = 0; i < a->active.size() && consistent; ++i) {
                int k = a->active[i];
                if (!mag[k])
                    mag[k] = a->mags[i];
                else if (!(*mag[k] == a->mags[i]))
                    consistent = false;
            }
            if (!consistent) break;
        }
        if (!consistent) continue;

        std::vector<int> constrained;
        for (int k = 0; k < n; ++k)
            if (mag[k]) constrained.push_back(k);

        // Sign assignments on the constrained coordinates meeting every
        // part's inner parity condition.
        std::vector<std::vector<int>> sign_choices;
        const std::size_t cc = constrained.size();
        for (unsigned long smask = 0; smask < (1ul << cc); ++smask) {
            bool ok = true;
            for (const auto* a : vstar_parts) {
                int parity = 0;
                for (int k : a->odd_coords) {
                    std::size_t pos =
                        std::lower_bound(constrained.begin(), constrained.end(), k) -
                        constrained.begin();
                    if (smask & (1ul << pos)) parity ^= 1;
                }
                if (parity != a->parity_target) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<int> sigma(cc);
            for (std::size_t i = 0; i < cc; ++i) sigma[i] = (smask & (1ul << i)) ? -1 : 1;
            sign_choices.push_back(std::move(sigma));
        }
        if (sign_choices.empty()) continue;

        bool has_free = false;
        for (int k = 0; k < n; ++k)
            if (!(zmask & (1ul << k)) && !mag[k]) has_free = true;
        if (has_free) {
            InfiniteWitness w;
            if (zmask == 0) {
                w.kind = InfiniteWitness::Kind::FreeVariable;
            } else {
                w.kind = InfiniteWitness::Kind::CoordinateFamily;
                for (int k = 0; k < n; ++k)
                    if (zmask & (1ul << k)) w.stratum.push_back(k);
            }
            return infinite_zero_set(std::move(w));
        }

        std::sort(sign_choices.begin(), sign_choices.end(), sign_vector_less);
        if (zmask == 0) {
            for (auto& sigma : sign_choices) {
                AffineZero z;
                z.signs = std::move(sigma);
                for (int k : constrained) z.magnitudes.push_back(*mag[k]);
                out.zeros.push_back(std::move(z));
            }
        } else if (zmask + 1 == (1ul << n)) {
            coord.origin = true;
        } else {
            SubspaceZeros sz;
            for (int k = 0; k < n; ++k)
                if (zmask & (1ul << k)) sz.zero_coords.push_back(k);
            for (auto& sigma : sign_choices) {
                AffineZero z;
                z.signs = std::move(sigma);
                for (int k : constrained) z.magnitudes.push_back(*mag[k]);
                sz.points.push_back(std::move(z));
            }
            coord.strata.push_back(std::move(sz));
        }
    }

    std::sort(coord.strata.begin(), coord.strata.end(),
              [](const SubspaceZeros& a, const SubspaceZeros& b) {
                  return a.zero_coords < b.zero_coords;
              });
    out.kind = ZeroSet::Kind::Finite;
    out.coordinate_zeros = std::move(coord);
    return out;
}

void check_count_theorems(const std::vector<Circuit>& parts, const ZeroSet& z) {
    if (z.kind != ZeroSet::Kind::Finite) return;
    bool applicable = true;
    bool all_even = true;
    for (const auto& c : parts) {
        if (!c.proper || c.degenerate ||
            static_cast<int>(c.active_variables().size()) != c.n ||
            theta_compare(c).verdict != Verdict::Boundary)
            applicable = false;
        else if (!c.inner_even)
            all_even = false;
    }
    if (!applicable) return;
    const int n = parts.front().n;
    Integer vstar(z.zeros.size());
    if (all_even) {
        if (vstar != 0 && vstar != integer_pow(2, n))
            throw Error("zero count violates the even-inner-exponent theorem");
    } else {
        Integer half = integer_pow(2, n - 1);
        if (vstar != 0 && half % vstar != 0)
            throw Error("zero count violates the 2^(n-1) divisibility theorem");
    }
}

}  // namespace

MagnitudeResult circuit_zero_magnitudes(const Circuit& c) {
    if (!c.proper) throw DomainError("circuit_zero_magnitudes: improper circuit");
    if (theta_compare(c).verdict != Verdict::Boundary)
        throw DomainError("circuit has no zeros in (R*)^n: not on the boundary");
    std::vector<int> active = c.active_variables();
    if (c.r() < c.n) return DegenerateMagnitudes{degenerate_direction(c)};
    return solve_magnitudes(c, active);
}

SignPatterns circuit_sign_patterns(const Circuit& c) {
    if (!c.proper) throw DomainError("circuit_sign_patterns: improper circuit");
    if (theta_compare(c).verdict != Verdict::Boundary)
        throw DomainError("circuit has no zeros in (R*)^n: not on the boundary");
    const int n = c.n;
    SignPatterns sp;
    sp.count = c.inner_even ? integer_pow(2, n) : integer_pow(2, n - 1);
    if (n > 20) return sp;

    std::vector<int> odd;
    for (int k = 0; k < n; ++k)
        if (c.inner->exp[k] % 2 != 0) odd.push_back(k);
    const int target = c.inner->coef > 0 ? 1 : 0;

    sp.enumerated = true;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        int parity = 0;
        for (int k : odd)
            if (mask & (1ul << k)) parity ^= 1;
        if (!odd.empty() && parity != target) continue;
        std::vector<int> sigma(n);
        for (int k = 0; k < n; ++k) sigma[k] = (mask & (1ul << k)) ? -1 : 1;
        sp.patterns.push_back(std::move(sigma));
    }
    std::sort(sp.patterns.begin(), sp.patterns.end(), sign_vector_less);
    if (Integer(sp.patterns.size()) != sp.count)
        throw Error("sign pattern count mismatch");
    return sp;
}

ZeroSet circuit_zeros(const Circuit& c) {
    ZeroSet z = common_zeros_impl({c});
    if (z.kind == ZeroSet::Kind::Finite) {
        for (const auto& zero : z.zeros)
            if (!verify_circuit_zero(c, zero))
                throw Error("claimed zero fails the equal-weighted-terms identity");
        check_count_theorems({c}, z);
    }
    return z;
}

ZeroSet sonc_common_zeros(const std::vector<Circuit>& parts) {
    ZeroSet z = common_zeros_impl(parts);
    check_count_theorems(parts, z);
    return z;
}

bool verify_circuit_zero(const Circuit& c, const AffineZero& zero) {
    if (!c.proper) return false;
    std::vector<int> active = c.active_variables();
    if (zero.signs.size() != active.size() || zero.magnitudes.size() != active.size())
        return false;

    auto power_product = [&](const Exponent& e) {
        ExactMagnitude m;
        for (std::size_t i = 0; i < active.size(); ++i) {
            int k = e[active[i]];
            if (k != 0) m = m * zero.magnitudes[i].pow(Rational(k));
        }
        return m;
    };

    // All weighted outer terms f_j |v|^{alpha(j)} / lambda_j agree, ...
    ExactMagnitude common =
        ExactMagnitude::from_rational(c.outer[0].coef / c.lambda[0]) *
        power_product(c.outer[0].exp);
    for (std::size_t j = 1; j < c.outer.size(); ++j) {
        ExactMagnitude t = ExactMagnitude::from_rational(c.outer[j].coef / c.lambda[j]) *
                           power_product(c.outer[j].exp);
        if (!(t == common)) return false;
    }
    // ... the inner magnitude matches, ...
    ExactMagnitude inner_mag =
        ExactMagnitude::from_rational(abs(c.inner->coef)) * power_product(c.inner->exp);
    if (!(inner_mag == common)) return false;
    // ... and the inner term's sign cancels the outer sum.
    int parity = 1;
    for (std::size_t i = 0; i < active.size(); ++i)
        if (c.inner->exp[active[i]] % 2 != 0 && zero.signs[i] < 0) parity = -parity;
    return parity * sgn(c.inner->coef) < 0;
}

bool univariate_second_order_check(const Circuit& c) {
    if (c.n != 1 || !c.proper) throw DomainError("expects a proper univariate circuit");
    if (theta_compare(c).verdict != Verdict::Boundary)
        throw DomainError("expects a boundary circuit");
    if (c.r() != 1) throw DomainError("univariate circuit must have two outer terms");

    const int a = c.outer[0].exp[0], b = c.outer[1].exp[0];
    const int beta = c.inner->exp[0];
    const Rational& ca = c.outer[0].coef;
    const Rational& cb = c.outer[1].coef;
    const Rational& cbeta = c.inner->coef;
    const Rational rho = c.lambda[1] * ca / (c.lambda[0] * cb);
    const long p = beta - a, q = b - a;

    // sign of f''(v) = sign of A + B rho^{p/q} + C rho with v = sigma * m,
    // m^{b-a} = rho; decided without leaving rational arithmetic.
    auto second_derivative_positive = [&](int sigma_beta) {
        Rational A = ca * a * (a - 1);
        Rational B = cbeta * beta * (beta - 1) * sigma_beta;
        Rational C = cb * b * (b - 1);
        if (B == 0) return A + C * rho > 0;
        Rational R = -(A + C * rho) / B;
        int sign_b = sgn(B);
        if (R <= 0) return sign_b > 0;
        int diff = cmp(rational_pow(rho, p), rational_pow(R, q));  // rho^{p/q} vs R
        return sign_b * diff > 0;
    };

    for (const auto& sigma : circuit_sign_patterns(c).patterns) {
        int sigma_beta = (beta % 2 != 0 && sigma[0] < 0) ? -1 : 1;
        if (!second_derivative_positive(sigma_beta)) return false;
    }
    return true;
}

bool CountPredicate::admits(const Integer& count) const {
    return std::find(admissible.begin(), admissible.end(), count) != admissible.end();
}

CountPredicate count_zeros_formula(int n, const std::vector<CircuitParity>& parts) {
    bool all_even = true, all_const = true;
    for (const auto& p : parts) {
        all_even = all_even && p.beta_all_even;
        all_const = all_const && p.has_constant_term;
    }
    CountPredicate pred;
    pred.allows_infinite = !all_const;
    if (all_even) {
        pred.admissible.push_back(integer_pow(2, n));
        if (!all_const) pred.admissible.push_back(integer_pow(2, n) + 1);
    } else {
        for (int k = 0; k <= n - 1; ++k) {
            pred.admissible.push_back(integer_pow(2, k));
            if (!all_const) pred.admissible.push_back(integer_pow(2, k) + 1);
        }
        std::sort(pred.admissible.begin(), pred.admissible.end());
        pred.admissible.erase(std::unique(pred.admissible.begin(), pred.admissible.end()),
                              pred.admissible.end());
    }
    return pred;
}

std::vector<Rational> negativity_witness(const Circuit& c) {
    if (!c.proper || theta_compare(c).verdict != Verdict::Outside)
        throw DomainError("negativity witness requires an outside circuit");
    const int n = c.n;
    const Exponent& base = c.outer.front().exp;
    const Rational& f0 = c.outer.front().coef;
    const Rational& l0 = c.lambda.front();

    // log-magnitude from a particular solution of the AM-GM equalizer system
    QMatrix mat;
    std::vector<double> logs;
    for (std::size_t j = 1; j < c.outer.size(); ++j) {
        std::vector<Rational> row;
        for (int i = 0; i < n; ++i) row.emplace_back(c.outer[j].exp[i] - base[i]);
        mat.push_back(std::move(row));
        Rational rho = c.lambda[j] * f0 / (l0 * c.outer[j].coef);
        logs.push_back(std::log(rho.get_d()));
    }
    // s = sum_j x_j log rho_j with mat * x_j = e_j; a particular solution of
    // the equalizer system is enough, so underdetermined systems are fine.
    std::vector<double> s(n, 0.0);
    for (std::size_t j = 0; j < mat.size(); ++j) {
        std::vector<Rational> e(mat.size(), Rational(0));
        e[j] = 1;
        auto sol = solve_linear(mat, std::move(e));
        if (!sol) throw Error("equalizer system unsolvable");
        for (int i = 0; i < n; ++i) s[i] += (*sol)[i].get_d() * logs[j];
    }

    std::vector<int> sigma(n, 1);
    if (!c.inner_even) {
        // flip one odd coordinate when the inner term would not be negative
        int parity_needed = sgn(c.inner->coef) > 0 ? -1 : 1;
        if (parity_needed < 0) {
            for (int i = 0; i < n; ++i)
                if (c.inner->exp[i] % 2 != 0) {
                    sigma[i] = -1;
                    break;
                }
        }
    }

    SparsePoly p = c.to_poly();
    for (int bits = 16; bits <= 256; bits += 16) {
        std::vector<Rational> point(n);
        Integer scale = integer_pow(2, bits);
        for (int i = 0; i < n; ++i) {
            double mi = std::exp(s[i]);
            Integer num(std::round(mi * scale.get_d()));
            if (num <= 0) num = 1;
            point[i] = make_rational(num * sigma[i], scale);
        }
        if (p.evaluate(point) < 0) return point;
    }
    throw Error("failed to certify a negative value rationally");
}

std::string InfiniteWitness::to_json() const {
    JsonWriter w;
    w.begin_object();
    const char* name = kind == Kind::DegenerateDirection ? "degenerate_direction"
                       : kind == Kind::CoordinateFamily  ? "coordinate_family"
                                                         : "free_variable";
    w.key("kind").value(name);
    w.key("direction").begin_array();
    for (const auto& d : direction) w.value(to_string(d));
    w.end_array();
    w.key("stratum").begin_array();
    for (int k : stratum) w.value(static_cast<long>(k + 1));
    w.end_array();
    w.end_object();
    return w.str();
}

Integer ZeroSet::count() const {
    if (kind == Kind::Infinite) return -1;
    Integer total(zeros.size());
    if (coordinate_zeros) {
        if (coordinate_zeros->origin) total += 1;
        for (const auto& s : coordinate_zeros->strata) total += s.points.size();
    }
    return total;
}

namespace {

void write_affine_zero(JsonWriter& w, const AffineZero& z) {
    w.begin_object();
    w.key("signs").begin_array();
    for (int s : z.signs) w.value(static_cast<long>(s));
    w.end_array();
    w.key("magnitudes").begin_array();
    for (const auto& m : z.magnitudes) w.value_raw(m.to_json());
    w.end_array();
    w.end_object();
}

}  // namespace

std::string ZeroSet::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("kind").value(kind == Kind::Finite ? "finite" : "infinite");
    w.key("zeros").begin_array();
    for (const auto& z : zeros) write_affine_zero(w, z);
    w.end_array();
    w.key("count");
    if (kind == Kind::Finite)
        w.value_raw(count().get_str());
    else
        w.null();
    w.key("coordinate_zeros");
    if (coordinate_zeros) {
        w.begin_object();
        w.key("origin").value(coordinate_zeros->origin);
        w.key("hitting_sets").begin_array();
        for (const auto& h : coordinate_zeros->hitting_sets) {
            w.begin_array();
            for (int k : h) w.value(static_cast<long>(k + 1));
            w.end_array();
        }
        w.end_array();
        w.key("strata").begin_array();
        for (const auto& s : coordinate_zeros->strata) {
            w.begin_object();
            w.key("zero_coords").begin_array();
            for (int k : s.zero_coords) w.value(static_cast<long>(k + 1));
            w.end_array();
            w.key("points").begin_array();
            for (const auto& p : s.points) write_affine_zero(w, p);
            w.end_array();
            w.end_object();
        }
        w.end_array();
        w.end_object();
    } else {
        w.null();
    }
    w.key("infinite_witness");
    if (infinite_witness)
        w.value_raw(infinite_witness->to_json());
    else
        w.null();
    w.end_object();
    return w.str();
}

std::string CountPredicate::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("admissible").begin_array();
    for (const auto& v : admissible) w.value_raw(v.get_str());
    w.end_array();
    w.key("allows_infinite").value(allows_infinite);
    w.end_object();
    return w.str();
}

}  // namespace sonc
