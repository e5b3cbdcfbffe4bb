#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "igl/interval_graph.hpp"
#include "igl/measures.hpp"
#include "oracles.hpp"

namespace igl {
namespace {

std::vector<MeasureModel> all_models() {
    return {
        MeasureModel::uniform_triangle(),
        MeasureModel::tilted_rectangle(0.2),
        MeasureModel::line(0.3),
        MeasureModel::line_mixture({0.25, 0.75}, {0.0, 0.6}),
        MeasureModel::fixed_length(0.25),
        MeasureModel::complete_l(),
        MeasureModel::complete_r(),
        MeasureModel::block_union({0.3, 0.7}),
        MeasureModel::empirical({{0.0, 0.1}, {0.5, 0.5}, {0.2, 1.0}}),
        MeasureModel::curve_supported(MonotoneCurve({{0.0, 0.0, 0.3}, {1.0, 0.6, 1.0}})),
    };
}

TEST(Sample, EveryKindStaysInsideS) {
    for (const auto& m : all_models()) {
        for (const auto& I : sample(m, 2000, 11)) {
            ASSERT_TRUE(is_valid(I)) << m.describe() << " gave [" << I.left << "," << I.right << "]";
        }
    }
}

TEST(Sample, DeterministicGivenSeed) {
    for (const auto& m : all_models()) {
        EXPECT_EQ(sample(m, 100, 5), sample(m, 100, 5)) << m.describe();
        EXPECT_NE(sample(m, 100, 5), sample(m, 100, 6)) << m.describe();
    }
}

TEST(Sample, EmptyRequest) {
    for (const auto& m : all_models()) EXPECT_TRUE(sample(m, 0, 1).empty());
}

TEST(Sample, CompleteLHasRightEndOne) {
    const auto s = sample(MeasureModel::complete_l(), 3, 42);
    ASSERT_EQ(s.size(), 3U);
    for (const auto& I : s) EXPECT_EQ(I.right, 1.0);
}

TEST(Sample, LineHalf) {
    const auto s = sample(MeasureModel::line(0.5), 10000, 3);
    double mean = 0.0;
    for (const auto& I : s) {
        EXPECT_EQ(I.left, 0.5 * I.right);
        mean += I.right;
    }
    mean /= static_cast<double>(s.size());
    // right ~ U(0,1): sd 1/sqrt(12)
    EXPECT_NEAR(mean, 0.5, 3.0 / std::sqrt(12.0 * 10000.0));
}

TEST(Sample, BlockUnionRightEndIsBlockEnd) {
    const auto s = sample(MeasureModel::block_union({0.3, 0.7}), 5000, 8);
    std::size_t first = 0;
    for (const auto& I : s) {
        if (I.left <= 0.3) {
            EXPECT_DOUBLE_EQ(I.right, 0.3);
            ++first;
        } else {
            EXPECT_EQ(I.right, 1.0);
        }
    }
    EXPECT_NEAR(static_cast<double>(first) / 5000.0, 0.3, 4.0 * std::sqrt(0.21 / 5000.0));
}

TEST(Sample, TiltedRectangleStaysInRescaledRectangle) {
    const double r = 0.2;
    for (const auto& I : sample(MeasureModel::tilted_rectangle(r), 5000, 2)) {
        // Back to original coordinates: center in [0,1], radius in [0,r].
        const double center = (I.left + I.right) / 2.0 * (1.0 + 2.0 * r) - r;
        const double radius = (I.right - I.left) / 2.0 * (1.0 + 2.0 * r);
        EXPECT_GE(center, -1e-12);
        EXPECT_LE(center, 1.0 + 1e-12);
        EXPECT_LE(radius, r + 1e-12);
    }
}

TEST(Sample, InvalidParameters) {
    EXPECT_THROW(MeasureModel::fixed_length(0.0), parameter_error);
    EXPECT_THROW(MeasureModel::fixed_length(1.5), parameter_error);
    EXPECT_THROW(MeasureModel::line(-0.1), parameter_error);
    EXPECT_THROW(MeasureModel::tilted_rectangle(0.0), parameter_error);
    EXPECT_THROW(MeasureModel::block_union({0.3, 0.3}), parameter_error);
    EXPECT_THROW(MeasureModel::block_union({0.5, 0.0, 0.5}), parameter_error);
    EXPECT_THROW(MeasureModel::line_mixture({0.5, 0.5}, {0.2, 1.2}), parameter_error);
    EXPECT_THROW(MeasureModel::line_mixture({1.0}, {0.2, 0.4}), parameter_error);
    EXPECT_THROW(MeasureModel::empirical({}), parameter_error);
    EXPECT_THROW(MeasureModel::empirical({{0.6, 0.5}}), parameter_error);
    EXPECT_THROW(MonotoneCurve({{0.0, 0.5, 0.6}, {1.0, 0.4, 0.7}}), parameter_error);
    EXPECT_THROW(MonotoneCurve({{0.0, 0.1, 0.2}, {0.0, 0.3, 0.4}}), parameter_error);
    EXPECT_NO_THROW(MeasureModel::fixed_length(1.0));
}

TEST(Marginals, DisjointAtomLocations) {
    const std::vector<Interval> s = {{0.0, 1.0}, {0.0, 1.0}};
    const auto rep = marginals(s, 0.0);
    EXPECT_TRUE(rep.common_atoms.empty());
    EXPECT_TRUE(rep.continuity_point());
    EXPECT_EQ(rep.left_cdf.mass_at(0.0), 1.0);
    EXPECT_EQ(rep.right_cdf.mass_at(1.0), 1.0);
}

TEST(Marginals, SharedAtom) {
    const std::vector<Interval> s = {{0.5, 0.5}, {0.2, 0.5}};
    const auto rep = marginals(s, 0.4);
    ASSERT_EQ(rep.common_atoms.size(), 1U);
    EXPECT_EQ(rep.common_atoms[0].location, 0.5);
    EXPECT_EQ(rep.common_atoms[0].left_mass, 0.5);
    EXPECT_EQ(rep.common_atoms[0].right_mass, 1.0);
    // Left mass 1/2 does not exceed a 0.5 tolerance.
    EXPECT_TRUE(marginals(s, 0.5).common_atoms.empty());
}

TEST(Marginals, UniformTriangleIsContinuous) {
    const auto s = sample(MeasureModel::uniform_triangle(), 10000, 9);
    const auto rep = marginals(s, 0.0);
    EXPECT_TRUE(rep.common_atoms.empty());
    // Left marginal density 2(1-x): CDF 1-(1-x)^2; 1% KS critical value 1.63/sqrt(n).
    const double ks = rep.left_cdf.ks_distance([](double x) { return 1.0 - (1.0 - x) * (1.0 - x); });
    EXPECT_LT(ks, 1.63 / std::sqrt(10000.0));
    const double ks_right = rep.right_cdf.ks_distance([](double x) { return x * x; });
    EXPECT_LT(ks_right, 1.63 / std::sqrt(10000.0));
    // CDFs are 0 below 0 and 1 at 1.
    EXPECT_EQ(rep.left_cdf.cdf(-1e-9), 0.0);
    EXPECT_EQ(rep.right_cdf.cdf(1.0), 1.0);
}

TEST(Marginals, EmptySampleIsDomainError) {
    EXPECT_THROW(marginals(std::vector<Interval>{}, 0.0), domain_error);
}

TEST(Normalize, SingleInterval) {
    const std::vector<Interval> s = {{0.0, 1.0}};
    const auto L = normalize(s, NormalMode::L);
    EXPECT_EQ(L[0].left, 0.5);
    EXPECT_EQ(L[0].right, 1.0);
    const auto R = normalize(s, NormalMode::R);
    EXPECT_EQ(R[0].left, 0.0);
    EXPECT_EQ(R[0].right, 0.5);
    const auto M = normalize(s, NormalMode::m);
    EXPECT_EQ(M[0].left, 0.25);
    EXPECT_EQ(M[0].right, 0.75);
}

TEST(Normalize, ThreeIntervalExample) {
    const std::vector<Interval> s = {{0.1, 0.9}, {0.2, 0.3}, {0.85, 0.95}};
    const auto t = normalize(s, NormalMode::L);
    EXPECT_DOUBLE_EQ(t[0].left, 1.0 / 6.0);
    EXPECT_DOUBLE_EQ(t[1].left, 3.0 / 6.0);
    EXPECT_DOUBLE_EQ(t[2].left, 5.0 / 6.0);
    EXPECT_EQ(intersection_graph_pairwise(s), intersection_graph_pairwise(t));
    // Edges 01 and 02 (0.85 <= 0.9); 12 absent.
    const auto g = intersection_graph_pairwise(t);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_FALSE(g.has_edge(1, 2));
}

TEST(Normalize, CompleteRStaysComplete) {
    const auto s = sample(MeasureModel::complete_r(), 200, 4);
    const auto t = normalize(s, NormalMode::R);
    std::vector<double> rights;
    for (const auto& I : t) rights.push_back(I.right);
    std::sort(rights.begin(), rights.end());
    for (std::size_t j = 0; j < rights.size(); ++j) {
        EXPECT_EQ(rights[j], (2.0 * static_cast<double>(j) + 1.0) / 400.0);
    }
    EXPECT_EQ(intersection_graph_sweep(t), Graph::complete(200));
}

TEST(Normalize, EmptySampleIsDomainError) {
    EXPECT_THROW(normalize(std::vector<Interval>{}, NormalMode::L), domain_error);
}

// Property: every mode preserves the intersection graph edge for edge, and the
// targeted marginal lands exactly on its rank grid. Grid-valued inputs make
// ties and touching pairs common.
TEST(NormalizeProperty, PreservesGraphAndHitsRankGrid) {
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.below(40);
        const auto s = trial % 2 == 0 ? oracle::grid_intervals(rng, n, 1 + rng.below(12))
                                      : oracle::continuous_intervals(rng, n);
        const auto base = intersection_graph_pairwise(s);
        for (auto mode : {NormalMode::L, NormalMode::R, NormalMode::m}) {
            const auto t = normalize(s, mode);
            for (const auto& I : t) ASSERT_TRUE(is_valid(I));
            ASSERT_EQ(intersection_graph_pairwise(t), base) << "trial " << trial;

            std::vector<double> pts;
            for (const auto& I : t) {
                if (mode != NormalMode::R) pts.push_back(I.left);
                if (mode != NormalMode::L) pts.push_back(I.right);
            }
            std::sort(pts.begin(), pts.end());
            for (std::size_t j = 0; j < pts.size(); ++j) {
                ASSERT_EQ(pts[j], (2.0 * static_cast<double>(j) + 1.0) / (2.0 * static_cast<double>(pts.size())));
            }
        }
    }
}

TEST(Reflect, Examples) {
    EXPECT_EQ(reflect(Interval{0.0, 1.0}), (Interval{0.0, 1.0}));
    EXPECT_EQ(reflect(Interval{0.2, 0.5}), (Interval{0.5, 0.8}));
}

TEST(ReflectProperty, InvolutionAndGraphPreserved) {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.below(50);
        // Grid and raw uniform endpoints are multiples of 2^-53, where 1-x is exact.
        const auto s = trial % 2 == 0 ? oracle::grid_intervals(rng, n) : sample(MeasureModel::uniform_triangle(), n, rng.next());
        const auto r = reflect(s);
        ASSERT_EQ(reflect(r), s);
        ASSERT_EQ(intersection_graph_pairwise(r), intersection_graph_pairwise(s));
    }
}

TEST(ReflectProperty, GraphPreservedForDerivedEndpoints) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = sample(MeasureModel::line(0.3), 300, seed);
        EXPECT_EQ(intersection_graph_sweep(reflect(s)), intersection_graph_sweep(s));
    }
}

TEST(ReflectedSampler, DrawsReflectedIntervals) {
    const auto m = MeasureModel::complete_l();
    for (const auto& I : sample(Reflected{m}, 50, 1)) EXPECT_EQ(I.left, 0.0);
}

}  // namespace
}  // namespace igl
