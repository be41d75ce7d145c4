#pragma once

// Small dense linear programs over the probability simplex:
//
//   maximize   c . p
//   subject to A p <= b,  sum(p) = 1,  p >= 0.

#include <cstddef>
#include <vector>

namespace entcat {

struct LinearProgram {
    std::vector<double> objective;
    std::vector<std::vector<double>> constraint_matrix;
    std::vector<double> constraint_bounds;

    std::size_t variables() const noexcept { return objective.size(); }
    std::size_t rows() const noexcept { return constraint_matrix.size(); }

    /// Throws InvalidParams on shape mismatch or non-finite entries.
    void validate() const;
};

enum class LpStatus { Optimal, Infeasible };

const char* to_string(LpStatus s) noexcept;

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double optimal_value = 0.0;
    std::vector<double> solution;
};

/// Largest violation of any constraint by p (including p >= 0 and the
/// simplex equality). Zero for exactly feasible points.
double max_violation(const LinearProgram& lp, const std::vector<double>& p);

/// Two-phase dense simplex with Bland's rule. The returned Optimal solution
/// has passed max_violation(...) <= 1e-9; a failed re-check throws
/// NumericalFailure.
LpSolution solve(const LinearProgram& lp);

/// Brute-force reference: enumerates every vertex of the feasible polytope
/// and keeps the best. Exponential; meant for n <= 8, m <= 40.
LpSolution enumerate_vertices_oracle(const LinearProgram& lp);

}  // namespace entcat
