#pragma once

// Entanglement concentration: optimal distributions over maximally
// entangled outcomes, with or without a catalyst, plus the yield bounds.

#include <cstddef>
#include <vector>

#include "entcat/lp.hpp"
#include "entcat/spectrum.hpp"

namespace entcat {

struct EcpDistribution {
    // probabilities[m-1] = probability of ending with the m-level maximally
    // entangled state.
    std::vector<double> probabilities;
    double expected_entanglement_nats = 0.0;
    double expected_entanglement_ebits = 0.0;
};

EcpDistribution make_distribution(std::vector<double> probabilities);

/// Closed form p_m = m (a_m - a_{m+1}), with a_{n+1} = 0.
EcpDistribution optimal_uncatalysed(const Spectrum& x);

/// Exact-mode closed form.
std::vector<Rational> optimal_uncatalysed_exact(const ExactSpectrum& x);

/// LP maximizing sum p_m ln m subject to, for every l up to n*k,
///   sum_m p_m E_l(phi_m (x) c) <= E_l(x (x) c).
LinearProgram catalysed_ecp_program(const Spectrum& x, const Spectrum& catalyst);

EcpDistribution optimal_catalysed(const Spectrum& x, const Spectrum& catalyst);

enum class BindingBound { B, Entropy };

const char* to_string(BindingBound b) noexcept;

struct ConcentrationBounds {
    double bound_b_nats = 0.0;
    double entropy_nats = 0.0;
    BindingBound binding = BindingBound::B;
};

/// B = n a_n ln n + (1 - n a_n) ln(n - 1) and the entropy. Rank 1 is
/// rejected with InvalidParams.
ConcentrationBounds bounds(const Spectrum& x);

struct LandscapeRow {
    double beta1 = 0.0;
    double beta2 = 0.0;
    double nats = 0.0;
    double ebits = 0.0;
};

/// Catalysed yield for two-level catalysts (b, 1 - b), b = 0.5 .. 1.0 in
/// `steps` equal increments, both endpoints included.
std::vector<LandscapeRow> landscape(const Spectrum& x, std::size_t steps, bool parallel = false);

}  // namespace entcat
