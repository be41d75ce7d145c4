#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "entcat/catalysis.hpp"
#include "oracles.hpp"

namespace entcat {
namespace {

const Spectrum kPsi1 = make_spectrum({0.4, 0.4, 0.1, 0.1});
const Spectrum kPsi2 = make_spectrum({0.5, 0.25, 0.25});
const Spectrum kWide = make_spectrum({0.5, 0.4, 0.1});
const Spectrum kPeaked = make_spectrum({0.6, 0.2, 0.2});

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::NumericalFailure;
}

TEST(GateLemma1, FlagsUselessCandidates) {
    EXPECT_TRUE(gate_lemma1(make_spectrum({0.5, 0.5})));
    EXPECT_TRUE(gate_lemma1(make_spectrum({1.0})));
    EXPECT_TRUE(gate_lemma1(maximally_entangled(3)));
    EXPECT_FALSE(gate_lemma1(make_spectrum({0.6, 0.4})));
}

TEST(GateLemma3, Fixtures) {
    EXPECT_TRUE(gate_lemma3(kPsi1, kPsi2));
    EXPECT_FALSE(gate_lemma3(kWide, kPeaked));
    EXPECT_FALSE(gate_lemma3(kPeaked, kWide));
    EXPECT_TRUE(gate_lemma3(kWide, kWide));
}

TEST(GateIncomparable3x3, IncomparablePairIsBlocked) {
    EXPECT_TRUE(gate_incomparable_3x3(kWide, kPeaked));
    EXPECT_TRUE(gate_incomparable_3x3(kPeaked, kWide));
}

TEST(GateIncomparable3x3, ComparablePairsAreRejected) {
    // Prefix sums 0.4, 0.75 against 0.45, 0.9: the source is majorized, so
    // the pair is comparable and the gate does not apply.
    EXPECT_EQ(code_of([] {
                  gate_incomparable_3x3(make_spectrum({0.4, 0.35, 0.25}),
                                        make_spectrum({0.45, 0.45, 0.10}));
              }),
              ErrorCode::InvalidDimension);
    EXPECT_EQ(code_of([] {
                  gate_incomparable_3x3(make_spectrum({0.5, 0.3, 0.2}), make_spectrum({0.6, 0.3, 0.1}));
              }),
              ErrorCode::InvalidDimension);
    EXPECT_EQ(code_of([] { gate_incomparable_3x3(kPsi1, kPsi2); }), ErrorCode::InvalidDimension);
}

TEST(GateIncomparable3x3, RandomIncomparablePairsAlwaysBlocked) {
    std::mt19937_64 rng(3);
    int tested = 0;
    for (int trial = 0; trial < 5000; ++trial) {
        const auto x = make_spectrum(oracle::random_spectrum(rng, 3));
        const auto y = make_spectrum(oracle::random_spectrum(rng, 3));
        if (classify_pair(x, y).verdict != Verdict::Incomparable) continue;
        ++tested;
        EXPECT_TRUE(gate_incomparable_3x3(x, y));
    }
    EXPECT_GT(tested, 200);
}

TEST(GateLemma4, Fixtures) {
    const auto phi3 = make_spectrum({1.0 / 3, 1.0 / 3, 1.0 / 3});
    EXPECT_TRUE(gate_lemma4(make_spectrum({0.5, 0.3, 0.2}), phi3));
    EXPECT_FALSE(gate_lemma4(kPeaked, kWide));  // 0.8 against 0.2 / 0.1
    EXPECT_TRUE(gate_lemma4(kWide, kPeaked));   // 0.5 == 0.1 / 0.2
    EXPECT_TRUE(gate_lemma4(kWide, kWide));
    EXPECT_EQ(code_of([] { gate_lemma4(kPsi1, kPsi2); }), ErrorCode::Inapplicable);
}

TEST(Interconvertible, Fixtures) {
    EXPECT_TRUE(check_interconvertible_elqcc(make_spectrum({0.5, 0.3, 0.2}), make_spectrum({0.5, 0.3, 0.2})));
    EXPECT_FALSE(check_interconvertible_elqcc(kPsi1, kPsi2));
    EXPECT_TRUE(check_interconvertible_elqcc(make_spectrum({0.5, 0.5}), make_spectrum({0.5, 0.5, 0.0})));
}

TEST(CatalystGrid, SortedCompositionsWithoutUniformPoint) {
    const auto g = catalyst_grid(2, 10);
    ASSERT_EQ(g.size(), 4u);  // (6,4) (7,3) (8,2) (9,1)
    EXPECT_DOUBLE_EQ(g.front()[0], 0.6);
    EXPECT_DOUBLE_EQ(g.back()[0], 0.9);
    const auto g3 = catalyst_grid(3, 12);
    for (const auto& c : g3) {
        EXPECT_TRUE(std::is_sorted(c.rbegin(), c.rend()));
        EXPECT_GT(c.back(), 0.0);
        EXPECT_NEAR(c[0] + c[1] + c[2], 1.0, 1e-15);
        EXPECT_FALSE(c[0] == c[2]);
    }
    // Partitions of 12 into 3 parts: 12, minus (4,4,4).
    EXPECT_EQ(g3.size(), 11u);
}

TEST(DeterministicSearch, FindsFourLevelCatalyst) {
    SearchOptions o;
    o.grid_step = 5e-3;
    const auto r = find_deterministic_catalyst(kPsi1, kPsi2, o);
    ASSERT_TRUE(r.found);
    EXPECT_FALSE(r.pruned);
    ASSERT_TRUE(r.catalyst.has_value());
    EXPECT_TRUE(catalyses(kPsi1, kPsi2, *r.catalyst));
    EXPECT_NEAR((*r.catalyst)[0], 0.6, 1e-12);
    EXPECT_DOUBLE_EQ(r.achieved_probability, 1.0);
    EXPECT_NEAR(r.baseline_probability, 0.8, 1e-12);
    EXPECT_TRUE(catalyses(kPsi1, kPsi2, make_spectrum({0.6, 0.4})));
}

TEST(DeterministicSearch, FeasibleIntervalMatchesOneDimensionalScan) {
    SearchOptions o;
    o.grid_step = 1e-3;
    o.collect_feasible = true;
    const auto r = find_deterministic_catalyst(kPsi1, kPsi2, o);
    ASSERT_TRUE(r.found);
    // Independent scan over beta_1 in [0.5, 1) using the brute-force oracle.
    std::vector<double> want;
    for (int k = 501; k < 1000; ++k) {
        const double b = k / 1000.0;
        if (oracle::majorized(oracle::kron_sorted(kPsi1.coefficients(), {b, 1 - b}),
                              oracle::kron_sorted(kPsi2.coefficients(), {b, 1 - b}))) {
            want.push_back(b);
        }
    }
    ASSERT_EQ(r.feasible.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(r.feasible[i][0], want[i], 1e-12);
    EXPECT_NEAR(want.front(), 0.6, 1e-12);
    EXPECT_NEAR(want.back(), 0.625, 1e-12);
}

TEST(DeterministicSearch, GatePrunesThreeLevelPair) {
    const auto r = find_deterministic_catalyst(kWide, kPeaked, {});
    EXPECT_FALSE(r.found);
    EXPECT_TRUE(r.pruned);
    ASSERT_FALSE(r.gate_report.empty());
    EXPECT_EQ(r.gate_report.front(), kGateLemma3);
    EXPECT_EQ(r.evaluations, 0u);
}

TEST(DeterministicSearch, UngatedGridAgreesWithLemma3) {
    SearchOptions o;
    o.apply_gates = false;
    const auto r = find_deterministic_catalyst(kWide, kPeaked, o);
    EXPECT_FALSE(r.found);
    EXPECT_FALSE(r.pruned);
    EXPECT_EQ(r.gate_report, std::vector<std::string>{kGridExhausted});
    EXPECT_EQ(r.evaluations, catalyst_grid(2, 1000).size());
}

TEST(DeterministicSearch, Lemma2AndTrivialCases) {
    const auto comparable = find_deterministic_catalyst(make_spectrum({0.7, 0.3}), make_spectrum({0.5, 0.5}), {});
    EXPECT_TRUE(comparable.pruned);
    EXPECT_EQ(comparable.gate_report.front(), kGateLemma2);

    const auto trivial = find_deterministic_catalyst(make_spectrum({0.5, 0.5}), make_spectrum({0.7, 0.3}), {});
    EXPECT_TRUE(trivial.found);
    EXPECT_TRUE(trivial.catalyst->is_product());
    EXPECT_EQ(trivial.gate_report.front(), kAlreadyMajorized);
}

TEST(DeterministicSearch, ParallelMatchesSequential) {
    SearchOptions o;
    o.grid_step = 5e-3;
    o.dim = 3;
    const auto seq = find_deterministic_catalyst(kPsi1, kPsi2, o);
    o.parallel = true;
    const auto par = find_deterministic_catalyst(kPsi1, kPsi2, o);
    EXPECT_EQ(seq.found, par.found);
    EXPECT_EQ(seq.evaluations, par.evaluations);
    ASSERT_TRUE(seq.catalyst && par.catalyst);
    EXPECT_EQ(*seq.catalyst, *par.catalyst);
}

TEST(Search, RejectsInvalidParams) {
    SearchOptions o;
    o.dim = 1;
    EXPECT_EQ(code_of([&] { find_deterministic_catalyst(kPsi1, kPsi2, o); }), ErrorCode::InvalidParams);
    o.dim = 6;
    EXPECT_EQ(code_of([&] { find_boost_catalyst(kPsi1, kPsi2, o); }), ErrorCode::InvalidParams);
    o.dim = 2;
    o.grid_step = 0.02;
    EXPECT_EQ(code_of([&] { find_boost_catalyst(kPsi1, kPsi2, o); }), ErrorCode::InvalidParams);
    o.grid_step = 0.0;
    EXPECT_EQ(code_of([&] { find_boost_catalyst(kPsi1, kPsi2, o); }), ErrorCode::InvalidParams);
}

TEST(BoostSearch, ThreeLevelPairImproves) {
    const auto r = find_boost_catalyst(kPeaked, kWide, {});
    ASSERT_TRUE(r.found);
    EXPECT_NEAR(r.baseline_probability, 0.8, 1e-12);
    EXPECT_GT(r.achieved_probability, 0.9);
    EXPECT_NEAR(r.achieved_probability, catalysed_p_max(kPeaked, kWide, *r.catalyst), 1e-9);
    // Dense independent scan: sup over two-level catalysts is 0.909618 near
    // beta_1 = 0.6225.
    EXPECT_NEAR(r.achieved_probability, 0.9096, 2e-4);
    EXPECT_NEAR((*r.catalyst)[0], 0.6225, 2e-3);
}

TEST(BoostSearch, RefinementNeverLowersTheGridValue) {
    SearchOptions o;
    o.grid_step = 1e-2;
    const auto coarse = find_boost_catalyst(kPeaked, kWide, o);
    o.refine = true;
    const auto refined = find_boost_catalyst(kPeaked, kWide, o);
    EXPECT_GE(refined.achieved_probability, coarse.achieved_probability);
    EXPECT_NEAR(refined.achieved_probability, 0.909618, 1e-5);
}

TEST(BoostSearch, StatedDirectionIsLemma4Pruned) {
    const auto r = find_boost_catalyst(kWide, kPeaked, {});
    EXPECT_TRUE(r.pruned);
    EXPECT_FALSE(r.found);
    EXPECT_EQ(r.gate_report.front(), kGateLemma4);
    EXPECT_NEAR(r.achieved_probability, 0.5, 1e-12);
    EXPECT_EQ(r.achieved_probability, r.baseline_probability);
}

TEST(BoostSearch, MaximallyEntangledTargetIsPruned) {
    const auto r = find_boost_catalyst(make_spectrum({0.5, 0.3, 0.2}),
                                       make_spectrum({1.0 / 3, 1.0 / 3, 1.0 / 3}), {});
    EXPECT_TRUE(r.pruned);
    EXPECT_EQ(r.gate_report.front(), kGateLemma4);
    EXPECT_NEAR(r.achieved_probability, 0.6, 1e-12);
    EXPECT_NEAR(r.baseline_probability, 0.6, 1e-12);
}

TEST(BoostSearch, FourLevelPairReachesCertainty) {
    const auto r = find_boost_catalyst(kPsi1, kPsi2, {});
    ASSERT_TRUE(r.found);
    EXPECT_DOUBLE_EQ(r.achieved_probability, 1.0);
}

TEST(BoostSearch, NestedGridsAreMonotone) {
    SearchOptions o;
    double previous = 0.0;
    for (double step : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
        o.grid_step = step;
        const auto r = find_boost_catalyst(kPeaked, kWide, o);
        EXPECT_GE(r.achieved_probability, previous);
        previous = r.achieved_probability;
    }
}

TEST(CatalysisProperties, MaximallyEntangledCatalystNeverHelps) {
    std::mt19937_64 rng(11);
    int tested = 0;
    while (tested < 1000) {
        const std::size_t n = 2 + tested % 4;
        const auto x = make_spectrum(oracle::random_spectrum(rng, n));
        const auto y = make_spectrum(oracle::random_spectrum(rng, n));
        if (check_majorization(x, y)) continue;
        ++tested;
        for (std::size_t p = 2; p <= 5; ++p) EXPECT_FALSE(catalyses(x, y, maximally_entangled(p)));
    }
}

TEST(CatalysisProperties, SearchResultsAreConsistentWithGates) {
    std::mt19937_64 rng(5);
    SearchOptions o;
    o.grid_step = 1e-2;
    o.apply_gates = false;
    int found = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto x = make_spectrum(oracle::random_grid_spectrum(rng, 4, 20));
        const auto y = make_spectrum(oracle::random_grid_spectrum(rng, 4, 20));
        const auto r = find_deterministic_catalyst(x, y, o);
        if (!r.found) continue;
        ++found;
        EXPECT_TRUE(gate_lemma3(x, y));
        EXPECT_TRUE(oracle::majorized(oracle::kron_sorted(x.coefficients(), r.catalyst->coefficients()),
                                      oracle::kron_sorted(y.coefficients(), r.catalyst->coefficients())));
    }
    EXPECT_GT(found, 0);
}

TEST(CatalysisProperties, Lemma4GatedPairsNeverImprove) {
    std::mt19937_64 rng(17);
    int tested = 0;
    SearchOptions o;
    o.apply_gates = false;
    o.grid_step = 1e-2;
    while (tested < 1000) {
        const std::size_t n = 2 + tested % 3;
        const auto x = make_spectrum(oracle::random_spectrum(rng, n));
        const auto y = make_spectrum(oracle::random_spectrum(rng, n));
        if (!gate_lemma4(x, y)) continue;
        const double baseline = p_max(x, y);
        for (std::size_t dim : {2u, 3u}) {
            o.dim = dim;
            const auto r = find_boost_catalyst(x, y, o);
            EXPECT_LE(r.achieved_probability, baseline + 1e-9);
        }
        ++tested;
    }
}

}  // namespace
}  // namespace entcat
