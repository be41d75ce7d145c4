#pragma once

// Ordered Schmidt coefficients of a pure bipartite state.
//
// A spectrum is stored sorted non-increasing, strictly positive and
// normalized. Different Schmidt ranks are compared by zero-padding at
// comparison time (see padded()); the stored vector never carries zeros.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <vector>

#include "entcat/error.hpp"
#include "entcat/scalar.hpp"

namespace entcat {

template <class T>
class BasicSpectrum {
public:
    using value_type = T;
    using traits = ScalarTraits<T>;

    /// Canonicalizes raw coefficients: sorts descending, strips zeros and
    /// validates the sum. With normalize=true the entries are rescaled
    /// instead of rejected.
    static BasicSpectrum make(std::span<const T> values, bool normalize = false) {
        if (values.empty()) {
            throw Error(ErrorCode::EmptyInput, "spectrum: no coefficients given");
        }
        std::vector<T> kept;
        kept.reserve(values.size());
        T total(0);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const T& v = values[i];
            if (!traits::is_finite(v)) {
                throw Error(ErrorCode::NonFinite,
                            "spectrum: coefficient " + std::to_string(i) + " is not finite");
            }
            if (v < T(0)) {
                throw Error(ErrorCode::NegativeEntry,
                            "spectrum: coefficient " + std::to_string(i) + " is negative");
            }
            if (v > T(0)) {
                kept.push_back(v);
                total += v;
            }
        }
        if (kept.empty()) {
            throw Error(ErrorCode::NotNormalized, "spectrum: all coefficients are zero");
        }
        if (normalize) {
            for (auto& v : kept) v /= total;
        } else {
            T deviation = total > T(1) ? T(total - T(1)) : T(T(1) - total);
            if (deviation > traits::eps_norm()) {
                std::ostringstream msg;
                msg << "spectrum: coefficients sum to " << traits::to_double(total)
                    << " (deviation " << traits::to_double(deviation) << " from 1)";
                throw Error(ErrorCode::NotNormalized, msg.str());
            }
        }
        std::stable_sort(kept.begin(), kept.end(), std::greater<T>());
        return BasicSpectrum(std::move(kept));
    }

    static BasicSpectrum make(std::initializer_list<T> values, bool normalize = false) {
        return make(std::span<const T>(values.begin(), values.size()), normalize);
    }

    const std::vector<T>& coefficients() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::size_t rank() const noexcept { return coeffs_.size(); }
    const T& operator[](std::size_t i) const { return coeffs_[i]; }
    const T& largest() const { return coeffs_.front(); }
    const T& smallest() const { return coeffs_.back(); }
    bool is_product() const noexcept { return coeffs_.size() == 1; }

    /// Coefficients zero-padded to `length` (which must be >= size()).
    std::vector<T> padded(std::size_t length) const {
        std::vector<T> out(coeffs_);
        if (length > out.size()) out.resize(length, T(0));
        return out;
    }

    friend bool operator==(const BasicSpectrum&, const BasicSpectrum&) = default;

private:
    explicit BasicSpectrum(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {}

    template <class U>
    friend BasicSpectrum<U> tensor_sorted(const BasicSpectrum<U>&, const BasicSpectrum<U>&);
    template <class U>
    friend BasicSpectrum<U> basic_maximally_entangled(std::size_t);

    std::vector<T> coeffs_;
};

using Spectrum = BasicSpectrum<double>;
using ExactSpectrum = BasicSpectrum<Rational>;

inline Spectrum make_spectrum(std::span<const double> values, bool normalize = false) {
    return Spectrum::make(values, normalize);
}

inline Spectrum make_spectrum(std::initializer_list<double> values, bool normalize = false) {
    return Spectrum::make(values, normalize);
}

/// Schmidt coefficients of the product state, i.e. all pairwise products
/// a_i * b_j sorted non-increasing.
template <class T>
BasicSpectrum<T> tensor_sorted(const BasicSpectrum<T>& a, const BasicSpectrum<T>& b) {
    std::vector<T> out;
    out.reserve(a.size() * b.size());
    for (const auto& ai : a.coefficients()) {
        for (const auto& bj : b.coefficients()) out.push_back(ai * bj);
    }
    std::stable_sort(out.begin(), out.end(), std::greater<T>());
    return BasicSpectrum<T>(std::move(out));
}

template <class T>
BasicSpectrum<T> basic_maximally_entangled(std::size_t p) {
    if (p == 0) {
        throw Error(ErrorCode::InvalidParams, "maximally_entangled: dimension must be >= 1");
    }
    return BasicSpectrum<T>(std::vector<T>(p, T(1) / T(p)));
}

inline Spectrum maximally_entangled(std::size_t p) { return basic_maximally_entangled<double>(p); }

/// Entropy of entanglement -sum a_i ln a_i, in nats.
template <class T>
double entropy(const BasicSpectrum<T>& a) {
    double s = 0.0;
    for (const auto& v : a.coefficients()) {
        const double d = ScalarTraits<T>::to_double(v);
        s -= d * std::log(d);
    }
    return s > 0.0 ? s : 0.0;
}

inline double nats_to_ebits(double nats) { return nats / std::log(2.0); }

/// Decimal-text constructor for the exact mode.
ExactSpectrum make_exact_spectrum(std::span<const std::string> decimals, bool normalize = false);

Spectrum to_double(const ExactSpectrum& exact);

}  // namespace entcat
