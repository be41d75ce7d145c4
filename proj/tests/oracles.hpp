#pragma once

// Reference implementations used only by tests. They work on plain vectors
// and share no code with the library, so a bug in the library's padding,
// sorting or tail bookkeeping cannot hide in both places at once.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

inline Vec sorted_desc(Vec v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

/// Build every product and sort.
inline Vec kron_sorted(const Vec& a, const Vec& b) {
    Vec out;
    for (double x : a)
        for (double y : b) out.push_back(x * y);
    return sorted_desc(out);
}

inline double partial_sum(const Vec& v, std::size_t l) {
    double s = 0.0;
    for (std::size_t i = 0; i < l && i < v.size(); ++i) s += v[i];
    return s;
}

/// Direct prefix-sum test over every l up to the longer length.
inline bool majorized(const Vec& x, const Vec& y, double eps = 1e-12) {
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t l = 1; l <= n; ++l) {
        if (partial_sum(x, l) > partial_sum(y, l) + eps) return false;
    }
    return true;
}

/// Suffix-sum form of the min-ratio formula: E_l = sum_{i >= l} v_i.
inline double pmax(const Vec& x, const Vec& y) {
    const std::size_t n = std::max(x.size(), y.size());
    double best = 1.0;
    for (std::size_t l = 1; l <= n; ++l) {
        double ex = 0.0, ey = 0.0;
        for (std::size_t i = l - 1; i < x.size(); ++i) ex += x[i];
        for (std::size_t i = l - 1; i < y.size(); ++i) ey += y[i];
        if (l > y.size()) continue;
        if (l > x.size()) return 0.0;
        best = std::min(best, ex / ey);
    }
    return best;
}

inline double shannon_nats(const Vec& v) {
    double s = 0.0;
    for (double p : v)
        if (p > 0) s -= p * std::log(p);
    return s;
}

/// Random normalized descending vector of the given length with entries
/// bounded away from zero.
inline Vec random_spectrum(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    Vec v(n);
    double total = 0.0;
    for (auto& x : v) {
        x = u(rng);
        total += x;
    }
    for (auto& x : v) x /= total;
    return sorted_desc(v);
}

/// Random descending vector built from integers on a 1/denominator grid, so
/// that ties and exact equalities actually occur.
inline Vec random_grid_spectrum(std::mt19937_64& rng, std::size_t n, int denominator) {
    std::vector<int> cuts;
    std::uniform_int_distribution<int> u(1, denominator - 1);
    while (cuts.size() < n - 1) {
        int c = u(rng);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    Vec v;
    int prev = 0;
    for (int c : cuts) {
        v.push_back(static_cast<double>(c - prev) / denominator);
        prev = c;
    }
    v.push_back(static_cast<double>(denominator - prev) / denominator);
    return sorted_desc(v);
}

}  // namespace oracle
