#include "entcat/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entcat/error.hpp"
#include "entcat/scalar.hpp"

namespace entcat {

namespace {

constexpr double kReducedCostTol = 1e-11;
constexpr double kPivotTol = 1e-12;
constexpr std::size_t kMaxIterations = 100000;

// Canonical-form tableau: basis[i] is the column that is basic in row i and
// the last column holds the right-hand side.
struct Tableau {
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> basis;
    std::size_t columns = 0;

    double& rhs(std::size_t i) { return rows[i][columns]; }

    void pivot(std::size_t r, std::size_t c) {
        auto& pr = rows[r];
        const double inv = 1.0 / pr[c];
        for (auto& v : pr) v *= inv;
        pr[c] = 1.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const double f = rows[i][c];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= columns; ++j) rows[i][j] -= f * pr[j];
            rows[i][c] = 0.0;
        }
        basis[r] = c;
    }

    // Maximizes cost . x using columns [0, active); Bland's rule for both the
    // entering and the leaving variable.
    void maximize(const std::vector<double>& cost, std::size_t active) {
        for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
            std::size_t entering = active;
            for (std::size_t j = 0; j < active; ++j) {
                double reduced = cost[j];
                for (std::size_t i = 0; i < rows.size(); ++i) reduced -= cost[basis[i]] * rows[i][j];
                if (reduced > kReducedCostTol) {
                    entering = j;
                    break;
                }
            }
            if (entering == active) return;

            std::size_t leaving = rows.size();
            double best_ratio = 0.0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const double a = rows[i][entering];
                if (a <= kPivotTol) continue;
                const double ratio = rhs(i) / a;
                if (leaving == rows.size() || ratio < best_ratio - kPivotTol ||
                    (ratio <= best_ratio + kPivotTol && basis[i] < basis[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows.size()) {
                throw Error(ErrorCode::NumericalFailure, "simplex: unbounded direction on a simplex");
            }
            pivot(leaving, entering);
        }
        throw Error(ErrorCode::NumericalFailure, "simplex: iteration limit reached");
    }
};

std::vector<double> clean(std::vector<double> p) {
    for (auto& v : p) {
        if (v < 0.0 && v > -kEpsFeas) v = 0.0;
    }
    return p;
}

LpSolution optimal(const LinearProgram& lp, std::vector<double> p) {
    LpSolution s;
    s.status = LpStatus::Optimal;
    s.solution = clean(std::move(p));
    s.optimal_value = std::inner_product(lp.objective.begin(), lp.objective.end(),
                                         s.solution.begin(), 0.0);
    return s;
}

// Solves the square system in place by Gaussian elimination with partial
// pivoting. Returns false when the matrix is numerically singular.
bool solve_square(std::vector<std::vector<double>>& a, std::vector<double>& b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (std::abs(a[piv][col]) < kPivotTol) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        double v = b[k];
        for (std::size_t c = k + 1; c < n; ++c) v -= a[k][c] * b[c];
        b[k] = v / a[k][k];
    }
    return true;
}

}  // namespace

const char* to_string(LpStatus s) noexcept {
    return s == LpStatus::Optimal ? "Optimal" : "Infeasible";
}

void LinearProgram::validate() const {
    if (objective.empty()) throw Error(ErrorCode::InvalidParams, "lp: no variables");
    if (constraint_bounds.size() != constraint_matrix.size()) {
        throw Error(ErrorCode::InvalidParams, "lp: bounds and matrix row counts differ");
    }
    auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(objective.begin(), objective.end(), finite) ||
        !std::all_of(constraint_bounds.begin(), constraint_bounds.end(), finite)) {
        throw Error(ErrorCode::InvalidParams, "lp: non-finite coefficient");
    }
    for (std::size_t i = 0; i < constraint_matrix.size(); ++i) {
        const auto& row = constraint_matrix[i];
        if (row.size() != objective.size()) {
            throw Error(ErrorCode::InvalidParams, "lp: row " + std::to_string(i) + " has wrong length");
        }
        if (!std::all_of(row.begin(), row.end(), finite)) {
            throw Error(ErrorCode::InvalidParams, "lp: non-finite coefficient");
        }
    }
}

double max_violation(const LinearProgram& lp, const std::vector<double>& p) {
    double worst = 0.0;
    double total = 0.0;
    for (double v : p) {
        worst = std::max(worst, -v);
        total += v;
    }
    worst = std::max(worst, std::abs(total - 1.0));
    for (std::size_t i = 0; i < lp.rows(); ++i) {
        const auto& row = lp.constraint_matrix[i];
        const double lhs = std::inner_product(row.begin(), row.end(), p.begin(), 0.0);
        worst = std::max(worst, lhs - lp.constraint_bounds[i]);
    }
    return worst;
}

LpSolution solve(const LinearProgram& lp) {
    lp.validate();
    const std::size_t n = lp.variables();
    const std::size_t m = lp.rows();

    std::vector<std::size_t> needs_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        if (lp.constraint_bounds[i] < 0.0) needs_artificial.push_back(i);
    }
    needs_artificial.push_back(m);  // the simplex row sum(p) = 1

    Tableau t;
    t.columns = n + m + needs_artificial.size();
    t.rows.assign(m + 1, std::vector<double>(t.columns + 1, 0.0));
    t.basis.assign(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = lp.constraint_bounds[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = sign * lp.constraint_matrix[i][j];
        t.rows[i][n + i] = sign;
        t.rhs(i) = sign * lp.constraint_bounds[i];
        t.basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t.rows[m][j] = 1.0;
    t.rhs(m) = 1.0;
    for (std::size_t k = 0; k < needs_artificial.size(); ++k) {
        const std::size_t row = needs_artificial[k];
        t.rows[row][n + m + k] = 1.0;
        t.basis[row] = n + m + k;
    }

    const std::size_t first_artificial = n + m;
    std::vector<double> phase1(t.columns, 0.0);
    for (std::size_t j = first_artificial; j < t.columns; ++j) phase1[j] = -1.0;
    t.maximize(phase1, t.columns);

    double infeasibility = 0.0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.basis[i] >= first_artificial) infeasibility += t.rhs(i);
    }
    if (infeasibility > kEpsFeas) return LpSolution{LpStatus::Infeasible, 0.0, {}};

    // Pivot remaining zero-level artificials out of the basis; rows with no
    // usable pivot are redundant and dropped.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < first_artificial) {
            ++i;
            continue;
        }
        std::size_t col = first_artificial;
        for (std::size_t j = 0; j < first_artificial; ++j) {
            if (std::abs(t.rows[i][j]) > 1e-9) {
                col = j;
                break;
            }
        }
        if (col == first_artificial) {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            continue;
        }
        t.pivot(i, col);
        ++i;
    }

    std::vector<double> phase2(t.columns, 0.0);
    std::copy(lp.objective.begin(), lp.objective.end(), phase2.begin());
    t.maximize(phase2, first_artificial);

    std::vector<double> p(n, 0.0);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.basis[i] < n) p[t.basis[i]] = t.rhs(i);
    }
    LpSolution s = optimal(lp, std::move(p));
    const double violation = max_violation(lp, s.solution);
    if (violation > kEpsFeas) {
        throw Error(ErrorCode::NumericalFailure,
                    "simplex: solution violates constraints by " + std::to_string(violation));
    }
    return s;
}

LpSolution enumerate_vertices_oracle(const LinearProgram& lp) {
    lp.validate();
    const std::size_t n = lp.variables();
    const std::size_t m = lp.rows();
    if (n > 8 || m > 40) {
        throw Error(ErrorCode::InvalidParams, "vertex oracle: instance too large");
    }

    // Inequalities g . p <= h: the LP rows followed by -p_j <= 0.
    std::vector<std::vector<double>> g(lp.constraint_matrix);
    std::vector<double> h(lp.constraint_bounds);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> row(n, 0.0);
        row[j] = -1.0;
        g.push_back(std::move(row));
        h.push_back(0.0);
    }

    const std::size_t total = g.size();
    const std::size_t pick = n - 1;
    std::vector<std::size_t> idx(pick);
    std::iota(idx.begin(), idx.end(), 0);

    bool have = false;
    LpSolution best;
    while (true) {
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (std::size_t k : idx) {
            a.push_back(g[k]);
            b.push_back(h[k]);
        }
        a.emplace_back(n, 1.0);
        b.push_back(1.0);
        if (solve_square(a, b) && max_violation(lp, b) <= kEpsFeas) {
            LpSolution s = optimal(lp, b);
            if (!have || s.optimal_value > best.optimal_value) {
                best = std::move(s);
                have = true;
            }
        }
        // Next combination in lexicographic order.
        std::size_t k = pick;
        while (k > 0 && idx[k - 1] == total - pick + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t r = k; r < pick; ++r) idx[r] = idx[r - 1] + 1;
    }
    if (!have) return LpSolution{LpStatus::Infeasible, 0.0, {}};
    return best;
}

}  // namespace entcat
