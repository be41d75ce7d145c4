#pragma once

#include <cmath>

#include "entcat/exact.hpp"

namespace entcat {

// Tolerances per number representation. Floating mode compares with
// eps_cmp = 1e-12 and validates normalization with eps_norm = 1e-9; the
// rational mode is exact.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr double eps_cmp() { return 1e-12; }
    static constexpr double eps_norm() { return 1e-9; }
    static bool is_finite(double v) { return std::isfinite(v); }
    static double to_double(double v) { return v; }
};

template <>
struct ScalarTraits<Rational> {
    static Rational eps_cmp() { return Rational(0); }
    static Rational eps_norm() { return Rational(0); }
    static bool is_finite(const Rational&) { return true; }
    static double to_double(const Rational& v) { return entcat::to_double(v); }
};

inline constexpr double kEpsCmp = ScalarTraits<double>::eps_cmp();
inline constexpr double kEpsNorm = ScalarTraits<double>::eps_norm();
inline constexpr double kEpsFeas = 1e-9;

}  // namespace entcat
