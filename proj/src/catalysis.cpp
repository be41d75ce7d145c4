#include "entcat/catalysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

namespace entcat {

namespace {

constexpr std::size_t kMaxCatalystDim = 5;
constexpr double kMinRefineStep = 1e-7;
constexpr double kImprovement = 1e-12;

void validate(const SearchOptions& o) {
    if (o.dim < 2 || o.dim > kMaxCatalystDim) {
        throw Error(ErrorCode::InvalidParams, "catalyst dimension must be in 2.." +
                                                  std::to_string(kMaxCatalystDim));
    }
    if (!(o.grid_step > 0.0) || o.grid_step > 0.01) {
        throw Error(ErrorCode::InvalidParams, "grid step must be in (0, 0.01]");
    }
}

std::size_t grid_parts(double step) {
    return static_cast<std::size_t>(std::llround(1.0 / step));
}

Spectrum product_state() { return make_spectrum({1.0}); }

void compositions(std::size_t remaining, std::size_t slots, std::size_t cap,
                  std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(prefix);
        return;
    }
    const std::size_t lo = (remaining + slots - 1) / slots;
    const std::size_t hi = std::min(cap, remaining - (slots - 1));
    for (std::size_t k = lo; k <= hi; ++k) {
        prefix.push_back(k);
        compositions(remaining - k, slots - 1, k, prefix, out);
        prefix.pop_back();
    }
}

// Evaluates fn over [0, count) and returns the values in index order. With
// parallel=true the range is split into contiguous chunks, one per thread.
std::vector<double> evaluate_all(std::size_t count, bool parallel,
                                 const std::function<double(std::size_t)>& fn) {
    std::vector<double> values(count);
    std::size_t threads = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    threads = std::min(threads, std::max<std::size_t>(count, 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) values[i] = fn(i);
        return values;
    }
    const std::size_t chunk = (count + threads - 1) / threads;
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(count, begin + chunk);
            pool.emplace_back([&, begin, end] {
                for (std::size_t i = begin; i < end; ++i) values[i] = fn(i);
            });
        }
    }
    return values;
}

Spectrum candidate(const std::vector<double>& c) { return make_spectrum(c, true); }

}  // namespace

bool gate_lemma1(const Spectrum& catalyst) {
    return catalyst.largest() - catalyst.smallest() <= kEpsCmp;
}

bool gate_lemma3(const Spectrum& x, const Spectrum& y) {
    const std::size_t n = std::max(x.size(), y.size());
    const auto xp = x.padded(n);
    const auto yp = y.padded(n);
    return xp.front() <= yp.front() + kEpsCmp && xp.back() >= yp.back() - kEpsCmp;
}

bool gate_incomparable_3x3(const Spectrum& x, const Spectrum& y) {
    if (x.size() != 3 || y.size() != 3) {
        throw Error(ErrorCode::InvalidDimension,
                    "gate_incomparable_3x3: both states must have Schmidt rank 3");
    }
    if (classify_pair(x, y).verdict != Verdict::Incomparable) {
        throw Error(ErrorCode::InvalidDimension,
                    "gate_incomparable_3x3: pair is comparable, gate inapplicable");
    }
    // Incomparability of two rank-3 spectra leaves exactly two orderings of
    // the first two prefix sums; both contradict gate_lemma3.
    const double d1 = x[0] - y[0];
    const double d2 = (x[0] + x[1]) - (y[0] + y[1]);
    const bool first_case = d1 > kEpsCmp && d2 < -kEpsCmp;
    const bool second_case = d1 < -kEpsCmp && d2 > kEpsCmp;
    return (first_case || second_case) && !gate_lemma3(x, y);
}

bool gate_lemma4(const Spectrum& x, const Spectrum& y) {
    const std::size_t n = std::max(x.size(), y.size());
    const auto xp = x.padded(n);
    const auto yp = y.padded(n);
    if (yp.back() <= 0.0) {
        throw Error(ErrorCode::Inapplicable,
                    "gate_lemma4: target rank below the common dimension (y_n = 0)");
    }
    return std::abs(p_max(x, y) - xp.back() / yp.back()) <= kEpsCmp;
}

bool check_interconvertible_elqcc(const Spectrum& x, const Spectrum& y) {
    return spectra_equal(x, y);
}

std::vector<std::vector<double>> catalyst_grid(std::size_t dim, std::size_t parts) {
    std::vector<std::vector<std::size_t>> raw;
    std::vector<std::size_t> prefix;
    if (parts >= dim) compositions(parts, dim, parts, prefix, raw);
    std::vector<std::vector<double>> out;
    out.reserve(raw.size());
    for (const auto& k : raw) {
        if (k.front() == k.back()) continue;  // maximally entangled point
        std::vector<double> c(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            c[i] = static_cast<double>(k[i]) / static_cast<double>(parts);
        }
        out.push_back(std::move(c));
    }
    return out;
}

double catalysed_p_max(const Spectrum& x, const Spectrum& y, const Spectrum& catalyst) {
    return p_max(tensor_sorted(x, catalyst), tensor_sorted(y, catalyst));
}

bool catalyses(const Spectrum& x, const Spectrum& y, const Spectrum& catalyst) {
    return check_majorization(tensor_sorted(x, catalyst), tensor_sorted(y, catalyst));
}

CatalystSearchResult find_deterministic_catalyst(const Spectrum& x, const Spectrum& y,
                                                 const SearchOptions& options) {
    validate(options);
    CatalystSearchResult r;
    r.baseline_probability = p_max(x, y);
    r.achieved_probability = r.baseline_probability;
    const std::size_t parts = grid_parts(options.grid_step);
    r.effective_step = 1.0 / static_cast<double>(parts);

    if (options.apply_gates) {
        const auto cls = classify_pair(x, y);
        if (cls.verdict == Verdict::Equivalent || cls.verdict == Verdict::SourceToTarget) {
            r.found = true;
            r.catalyst = product_state();
            r.achieved_probability = 1.0;
            r.gate_report.emplace_back(kAlreadyMajorized);
            return r;
        }
        if (cls.verdict == Verdict::TargetToSource) {
            r.pruned = true;
            r.gate_report.emplace_back(kGateLemma2);
            return r;
        }
        if (!gate_lemma3(x, y)) {
            r.pruned = true;
            r.gate_report.emplace_back(kGateLemma3);
            return r;
        }
    }

    const auto grid = catalyst_grid(options.dim, parts);
    auto works = [&](std::size_t i) { return catalyses(x, y, candidate(grid[i])) ? 1.0 : 0.0; };

    // Batches keep the parallel path's reported state identical to a
    // sequential scan that stops at the first hit.
    const std::size_t batch =
        options.collect_feasible ? grid.size() : (options.parallel ? std::size_t{256} : std::size_t{1});
    for (std::size_t begin = 0; begin < grid.size(); begin += batch) {
        const std::size_t end = std::min(grid.size(), begin + batch);
        const auto hits = evaluate_all(end - begin, options.parallel,
                                       [&](std::size_t i) { return works(begin + i); });
        bool stop = false;
        for (std::size_t i = 0; i < hits.size(); ++i) {
            r.evaluations = begin + i + 1;
            if (hits[i] == 0.0) continue;
            Spectrum c = candidate(grid[begin + i]);
            if (!r.found) {
                r.found = true;
                r.catalyst = c;
                r.achieved_probability = 1.0;
            }
            if (options.collect_feasible) {
                r.feasible.push_back(std::move(c));
            } else {
                stop = true;
                break;
            }
        }
        if (stop) break;
    }
    if (!r.found) r.gate_report.emplace_back(kGridExhausted);
    return r;
}

CatalystSearchResult find_boost_catalyst(const Spectrum& x, const Spectrum& y,
                                         const SearchOptions& options) {
    validate(options);
    CatalystSearchResult r;
    r.baseline_probability = p_max(x, y);
    r.achieved_probability = r.baseline_probability;
    const std::size_t parts = grid_parts(options.grid_step);
    r.effective_step = 1.0 / static_cast<double>(parts);

    if (options.apply_gates) {
        if (check_majorization(x, y)) {
            r.found = true;
            r.catalyst = product_state();
            r.achieved_probability = 1.0;
            r.gate_report.emplace_back(kAlreadyMajorized);
            return r;
        }
        bool no_boost = false;
        try {
            no_boost = gate_lemma4(x, y);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Inapplicable) throw;
        }
        if (no_boost) {
            r.pruned = true;
            r.gate_report.emplace_back(kGateLemma4);
            return r;
        }
    }

    const auto grid = catalyst_grid(options.dim, parts);
    const auto values = evaluate_all(grid.size(), options.parallel, [&](std::size_t i) {
        return catalysed_p_max(x, y, candidate(grid[i]));
    });
    r.evaluations = grid.size();

    std::size_t best_index = grid.size();
    double best = r.baseline_probability;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > best) {
            best = values[i];
            best_index = i;
        }
    }

    std::vector<double> point;
    if (best_index < grid.size()) point = grid[best_index];

    if (options.refine && !point.empty()) {
        // Compass search along mass transfers between pairs of coordinates.
        double step = r.effective_step;
        while (step >= kMinRefineStep) {
            bool improved = false;
            for (std::size_t i = 0; i < point.size(); ++i) {
                for (std::size_t j = 0; j < point.size(); ++j) {
                    if (i == j || point[j] - step <= 0.0) continue;
                    auto trial = point;
                    trial[i] += step;
                    trial[j] -= step;
                    const double v = catalysed_p_max(x, y, candidate(trial));
                    ++r.evaluations;
                    if (v > best) {
                        best = v;
                        point = std::move(trial);
                        improved = true;
                    }
                }
            }
            if (!improved) step /= 2.0;
        }
    }

    if (!point.empty() && best > r.baseline_probability + kImprovement) {
        r.found = true;
        r.catalyst = candidate(point);
        r.achieved_probability = catalysed_p_max(x, y, *r.catalyst);
    } else {
        r.gate_report.emplace_back(kGridExhausted);
    }
    return r;
}

}  // namespace entcat
