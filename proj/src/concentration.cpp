#include "entcat/concentration.hpp"

#include <cmath>
#include <exception>
#include <thread>

#include "entcat/majorization.hpp"

namespace entcat {

EcpDistribution make_distribution(std::vector<double> probabilities) {
    EcpDistribution d;
    d.probabilities = std::move(probabilities);
    for (std::size_t m = 1; m <= d.probabilities.size(); ++m) {
        d.expected_entanglement_nats += d.probabilities[m - 1] * std::log(static_cast<double>(m));
    }
    d.expected_entanglement_ebits = nats_to_ebits(d.expected_entanglement_nats);
    return d;
}

EcpDistribution optimal_uncatalysed(const Spectrum& x) {
    const std::size_t n = x.size();
    std::vector<double> p(n);
    for (std::size_t m = 1; m <= n; ++m) {
        const double next = m < n ? x[m] : 0.0;
        p[m - 1] = static_cast<double>(m) * (x[m - 1] - next);
    }
    return make_distribution(std::move(p));
}

std::vector<Rational> optimal_uncatalysed_exact(const ExactSpectrum& x) {
    const std::size_t n = x.size();
    std::vector<Rational> p(n);
    for (std::size_t m = 1; m <= n; ++m) {
        const Rational next = m < n ? x[m] : Rational(0);
        p[m - 1] = Rational(static_cast<long>(m)) * (x[m - 1] - next);
    }
    return p;
}

LinearProgram catalysed_ecp_program(const Spectrum& x, const Spectrum& catalyst) {
    const std::size_t n = x.size();
    const std::size_t len = n * catalyst.size();

    LinearProgram lp;
    lp.objective.resize(n);
    std::vector<std::vector<double>> outcome_tails;
    for (std::size_t m = 1; m <= n; ++m) {
        lp.objective[m - 1] = std::log(static_cast<double>(m));
        outcome_tails.push_back(detail::tails(tensor_sorted(maximally_entangled(m), catalyst), len));
    }
    lp.constraint_bounds = detail::tails(tensor_sorted(x, catalyst), len);
    lp.constraint_matrix.assign(len, std::vector<double>(n));
    for (std::size_t l = 0; l < len; ++l) {
        for (std::size_t m = 0; m < n; ++m) lp.constraint_matrix[l][m] = outcome_tails[m][l];
    }
    return lp;
}

EcpDistribution optimal_catalysed(const Spectrum& x, const Spectrum& catalyst) {
    const LpSolution s = solve(catalysed_ecp_program(x, catalyst));
    if (s.status != LpStatus::Optimal) {
        throw Error(ErrorCode::NumericalFailure, "catalysed concentration program reported infeasible");
    }
    return make_distribution(s.solution);
}

const char* to_string(BindingBound b) noexcept { return b == BindingBound::B ? "B" : "entropy"; }

ConcentrationBounds bounds(const Spectrum& x) {
    const std::size_t n = x.size();
    if (n < 2) {
        throw Error(ErrorCode::InvalidParams, "bounds: Schmidt rank must be at least 2");
    }
    const double nd = static_cast<double>(n);
    const double top = nd * x.smallest();
    ConcentrationBounds b;
    b.bound_b_nats = top * std::log(nd) + (1.0 - top) * std::log(nd - 1.0);
    b.entropy_nats = entropy(x);
    b.binding = b.bound_b_nats <= b.entropy_nats ? BindingBound::B : BindingBound::Entropy;
    return b;
}

std::vector<LandscapeRow> landscape(const Spectrum& x, std::size_t steps, bool parallel) {
    if (steps < 2) throw Error(ErrorCode::InvalidParams, "landscape: steps must be >= 2");
    std::vector<LandscapeRow> rows(steps + 1);
    auto fill = [&](std::size_t i) {
        const double beta1 = 0.5 + 0.5 * static_cast<double>(i) / static_cast<double>(steps);
        const double beta2 = i == steps ? 0.0 : 1.0 - beta1;
        const Spectrum c = make_spectrum({beta1, beta2});
        const EcpDistribution d = optimal_catalysed(x, c);
        rows[i] = LandscapeRow{beta1, beta2, d.expected_entanglement_nats, d.expected_entanglement_ebits};
    };
    if (!parallel) {
        for (std::size_t i = 0; i <= steps; ++i) fill(i);
        return rows;
    }
    const std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i <= steps; i += threads) fill(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

}  // namespace entcat
