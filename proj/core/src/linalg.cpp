#include "sonc/linalg.hpp"

#include <cassert>

namespace sonc {

std::optional<std::vector<Rational>> solve_linear(QMatrix a, std::vector<Rational> b,
                                                  bool* unique) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows) throw DomainError("solve_linear: shape mismatch");

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        Rational inv = 1 / a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;

    if (unique) *unique = pivot_col_of_row.size() == cols;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

int exact_rank_int(std::vector<std::vector<Integer>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    Integer prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                assert(mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()));
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return static_cast<int>(row);
}

namespace {

std::vector<Integer> clear_denominators(const std::vector<Rational>& row) {
    Integer l(1);
    for (const auto& q : row) l = lcm(l, q.get_den());
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& q : row) out.push_back(q.get_num() * (l / q.get_den()));
    return out;
}

}  // namespace

int exact_rank(const QMatrix& a) {
    std::vector<std::vector<Integer>> m;
    m.reserve(a.size());
    for (const auto& row : a) m.push_back(clear_denominators(row));
    return exact_rank_int(std::move(m));
}

std::vector<std::size_t> independent_rows(const QMatrix& a) {
    std::vector<std::size_t> chosen;
    QMatrix basis;
    int rank = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        basis.push_back(a[i]);
        int r = exact_rank(basis);
        if (r > rank) {
            rank = r;
            chosen.push_back(i);
        } else {
            basis.pop_back();
        }
    }
    return chosen;
}

std::optional<std::vector<Rational>> kernel_vector(QMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<long> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        Rational inv = 1 / a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col_of_row.push_back(static_cast<long>(col));
        ++row;
    }
    // Free column -> basis kernel vector.
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> k(cols, Rational(0));
        k[free_col] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            k[static_cast<std::size_t>(pivot_col_of_row[i])] = -a[i][free_col];
        return k;
    }
    return std::nullopt;
}

int affine_dimension(const std::vector<Exponent>& points) {
    if (points.empty()) return -1;
    QMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> row;
        row.reserve(points[i].size());
        for (std::size_t j = 0; j < points[i].size(); ++j)
            row.emplace_back(points[i][j] - points[0][j]);
        diffs.push_back(std::move(row));
    }
    return diffs.empty() ? 0 : exact_rank(diffs);
}

namespace {

// Phase-1 simplex over exact rationals; minimizes the artificial sum.
// Bland's rule on both the entering and leaving choices prevents cycling.
class Phase1Simplex {
public:
    Phase1Simplex(QMatrix a, std::vector<Rational> b) {
        m_ = a.size();
        k_ = m_ == 0 ? 0 : a[0].size();
        for (std::size_t i = 0; i < m_; ++i) {
            if (b[i] < 0) {
                for (auto& v : a[i]) v = -v;
                b[i] = -b[i];
            }
        }
        // Tableau columns: structural (k_), artificial (m_), rhs.
        tab_.assign(m_, std::vector<Rational>(k_ + m_ + 1, Rational(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < k_; ++j) tab_[i][j] = a[i][j];
            tab_[i][k_ + i] = 1;
            tab_[i][k_ + m_] = b[i];
            basis_[i] = k_ + i;
        }
    }

    bool feasible() {
        while (true) {
            // Reduced cost of structural column j for objective = sum of
            // artificials: c_j = -sum over artificial basis rows of tab[i][j].
            // Artificials never re-enter, which keeps the costs this simple.
            std::size_t enter = npos;
            for (std::size_t j = 0; j < k_; ++j) {
                if (is_basic(j)) continue;
                Rational c(0);
                for (std::size_t i = 0; i < m_; ++i)
                    if (basis_[i] >= k_) c -= tab_[i][j];
                if (c < 0) {
                    enter = j;
                    break;  // Bland: first improving index
                }
            }
            if (enter == npos) break;
            std::size_t leave = npos;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][k_ + m_] / tab_[i][enter];
                if (leave == npos || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == npos) return false;  // unbounded phase 1: cannot happen
            pivot(leave, enter);
        }
        Rational objective(0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= k_) objective += tab_[i][k_ + m_];
        return objective == 0;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool is_basic(std::size_t j) const {
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] == j) return true;
        return false;
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = 1 / tab_[row][col];
        for (auto& v : tab_[row]) v *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            Rational f = tab_[i][col];
            for (std::size_t j = 0; j <= k_ + m_; ++j) tab_[i][j] -= f * tab_[row][j];
        }
        basis_[row] = col;
    }

    std::size_t m_ = 0, k_ = 0;
    QMatrix tab_;
    std::vector<std::size_t> basis_;
};

}  // namespace

bool in_convex_hull(const std::vector<Exponent>& points, const Exponent& target) {
    if (points.empty()) return false;
    const std::size_t n = target.size();
    QMatrix a(n + 1, std::vector<Rational>(points.size(), Rational(0)));
    std::vector<Rational> b(n + 1, Rational(0));
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].size() != n) throw DomainError("in_convex_hull: dimension mismatch");
        for (std::size_t i = 0; i < n; ++i) a[i][j] = points[j][i];
        a[n][j] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) b[i] = target[i];
    b[n] = 1;
    return Phase1Simplex(std::move(a), std::move(b)).feasible();
}

}  // namespace sonc
