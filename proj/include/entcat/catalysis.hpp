#pragma once

// Entanglement-assisted transformations: necessary-condition gates that
// rule catalysts out, and grid searches for catalysts that make a
// conversion deterministic or raise its success probability.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entcat/majorization.hpp"
#include "entcat/spectrum.hpp"

namespace entcat {

// Gate names reported in CatalystSearchResult::gate_report.
inline constexpr const char* kGateLemma2 = "Lemma2";
inline constexpr const char* kGateLemma3 = "Lemma3";
inline constexpr const char* kGateLemma4 = "Lemma4";
inline constexpr const char* kAlreadyMajorized = "already-majorized";
inline constexpr const char* kGridExhausted = "grid exhausted";

/// True when the candidate has all-equal coefficients (maximally entangled,
/// or a product state). Such a candidate never acts as a catalyst.
bool gate_lemma1(const Spectrum& catalyst);

/// Necessary condition for x -> y with certainty under any catalyst:
/// x_1 <= y_1 and x_n >= y_n on the zero-padded spectra.
bool gate_lemma3(const Spectrum& x, const Spectrum& y);

/// For incomparable pairs of Schmidt rank 3, confirms via the two possible
/// prefix-sum orderings that gate_lemma3 fails, i.e. no catalyst exists.
/// Throws InvalidDimension when either rank differs from 3 or when the pair
/// is comparable.
bool gate_incomparable_3x3(const Spectrum& x, const Spectrum& y);

/// True when p_max(x, y) == x_n / y_n, in which case no catalyst of any
/// dimension can raise the probability. Throws Inapplicable when y_n = 0
/// after padding.
bool gate_lemma4(const Spectrum& x, const Spectrum& y);

/// Interconvertibility with catalysts holds iff the spectra coincide.
bool check_interconvertible_elqcc(const Spectrum& x, const Spectrum& y);

struct SearchOptions {
    std::size_t dim = 2;
    double grid_step = 1e-3;
    bool refine = false;
    bool apply_gates = true;
    // Deterministic search only: keep scanning after the first hit and
    // record every working grid catalyst.
    bool collect_feasible = false;
    bool parallel = false;
};

struct CatalystSearchResult {
    bool found = false;
    bool pruned = false;
    std::optional<Spectrum> catalyst;
    double achieved_probability = 0.0;
    double baseline_probability = 0.0;
    std::size_t evaluations = 0;
    double effective_step = 0.0;
    std::vector<std::string> gate_report;
    std::vector<Spectrum> feasible;
};

/// Sorted compositions k_1 >= ... >= k_dim >= 1 of `parts`, divided by
/// `parts`, excluding the all-equal point. Ordered by ascending k_1, then
/// lexicographically.
std::vector<std::vector<double>> catalyst_grid(std::size_t dim, std::size_t parts);

/// p_max of x (x) c -> y (x) c.
double catalysed_p_max(const Spectrum& x, const Spectrum& y, const Spectrum& catalyst);

bool catalyses(const Spectrum& x, const Spectrum& y, const Spectrum& catalyst);

CatalystSearchResult find_deterministic_catalyst(const Spectrum& x, const Spectrum& y,
                                                 const SearchOptions& options = {});

CatalystSearchResult find_boost_catalyst(const Spectrum& x, const Spectrum& y,
                                         const SearchOptions& options = {});

}  // namespace entcat
