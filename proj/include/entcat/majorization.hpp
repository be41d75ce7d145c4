#pragma once

// Deterministic convertibility (majorization of ordered Schmidt
// coefficients), the tail quantities E_l and the optimal conversion
// probability between two pure states.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entcat/spectrum.hpp"

namespace entcat {

enum class Verdict { Equivalent, SourceToTarget, TargetToSource, Incomparable };

const char* to_string(Verdict v) noexcept;

struct PairClassification {
    Verdict verdict;
    // 1-based prefix length at which "source majorized by target" first fails,
    // and the same for the reverse direction.
    std::optional<std::size_t> forward_violation;
    std::optional<std::size_t> backward_violation;
};

namespace detail {

template <class T>
std::optional<std::size_t> first_majorization_violation(const BasicSpectrum<T>& x,
                                                         const BasicSpectrum<T>& y) {
    const std::size_t len = std::max(x.size(), y.size());
    const auto xp = x.padded(len);
    const auto yp = y.padded(len);
    T sx(0), sy(0);
    for (std::size_t l = 0; l < len; ++l) {
        sx += xp[l];
        sy += yp[l];
        if (sx > sy + ScalarTraits<T>::eps_cmp()) return l + 1;
    }
    return std::nullopt;
}

/// E_1..E_len with E_l = max(0, 1 - sum of the first l-1 entries); entries
/// past the Schmidt rank are exactly zero.
template <class T>
std::vector<T> tails(const BasicSpectrum<T>& x, std::size_t len) {
    std::vector<T> out(len, T(0));
    T prefix(0);
    for (std::size_t l = 0; l < len && l < x.size(); ++l) {
        T e = T(1) - prefix;
        out[l] = e > T(0) ? e : T(0);
        prefix += x[l];
    }
    return out;
}

}  // namespace detail

/// True iff x is majorized by y, i.e. x -> y is possible with certainty.
template <class T>
bool check_majorization(const BasicSpectrum<T>& x, const BasicSpectrum<T>& y) {
    return !detail::first_majorization_violation(x, y).has_value();
}

template <class T>
bool spectra_equal(const BasicSpectrum<T>& x, const BasicSpectrum<T>& y) {
    const std::size_t len = std::max(x.size(), y.size());
    const auto xp = x.padded(len);
    const auto yp = y.padded(len);
    for (std::size_t i = 0; i < len; ++i) {
        T d = xp[i] > yp[i] ? T(xp[i] - yp[i]) : T(yp[i] - xp[i]);
        if (d > ScalarTraits<T>::eps_cmp()) return false;
    }
    return true;
}

template <class T>
PairClassification classify_pair(const BasicSpectrum<T>& x, const BasicSpectrum<T>& y) {
    PairClassification out{Verdict::Incomparable, detail::first_majorization_violation(x, y),
                           detail::first_majorization_violation(y, x)};
    if (spectra_equal(x, y)) {
        out.verdict = Verdict::Equivalent;
    } else if (!out.forward_violation) {
        out.verdict = Verdict::SourceToTarget;
    } else if (!out.backward_violation) {
        out.verdict = Verdict::TargetToSource;
    }
    return out;
}

/// E_l(x) for 1 <= l <= rank(x) + 1.
template <class T>
T tail(const BasicSpectrum<T>& x, std::size_t l) {
    if (l < 1 || l > x.size() + 1) {
        throw Error(ErrorCode::OutOfRange, "tail: index " + std::to_string(l) +
                                               " outside 1.." + std::to_string(x.size() + 1));
    }
    return detail::tails(x, l).back();
}

/// Greatest probability of converting x into y: min over l of E_l(x)/E_l(y),
/// skipping indices where E_l(y) = 0. Zero when rank(y) > rank(x); exactly 1
/// when x is majorized by y.
template <class T>
T p_max(const BasicSpectrum<T>& x, const BasicSpectrum<T>& y) {
    if (check_majorization(x, y)) return T(1);
    const std::size_t len = std::max(x.size(), y.size());
    const auto tx = detail::tails(x, len);
    const auto ty = detail::tails(y, len);
    T best(1);
    for (std::size_t l = 0; l < len; ++l) {
        if (ty[l] == T(0)) continue;
        if (tx[l] == T(0)) return T(0);
        T r = tx[l] / ty[l];
        if (r < best) best = r;
    }
    return best;
}

}  // namespace entcat
