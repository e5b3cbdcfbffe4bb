#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "igl/densities.hpp"
#include "igl/interval_graph.hpp"
#include "oracles.hpp"

namespace igl {
namespace {

void expect_simple(const Graph& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        ASSERT_FALSE(g.has_edge(i, i));
        for (std::size_t j = 0; j < g.size(); ++j) ASSERT_EQ(g.has_edge(i, j), g.has_edge(j, i));
    }
}

TEST(Intersects, Examples) {
    EXPECT_TRUE(intersects({0.0, 0.5}, {0.5, 1.0}));
    EXPECT_FALSE(intersects({0.0, 0.4}, {0.5, 1.0}));
    EXPECT_TRUE(intersects({0.3, 0.3}, {0.2, 0.6}));
    EXPECT_TRUE(intersects({0.3, 0.3}, {0.3, 0.3}));
}

TEST(MakeInterval, RejectsOutsideS) {
    EXPECT_THROW(make_interval(0.5, 0.4), parameter_error);
    EXPECT_THROW(make_interval(-0.1, 0.4), parameter_error);
    EXPECT_THROW(make_interval(0.1, 1.1), parameter_error);
    EXPECT_EQ(make_interval(0.2, 0.2), (Interval{0.2, 0.2}));
}

TEST(BuildGraph, PathExample) {
    const std::vector<Interval> s = {{0.0, 0.3}, {0.2, 0.5}, {0.4, 0.7}};
    const auto g = build_graph(s);
    using E = std::pair<std::size_t, std::size_t>;
    EXPECT_EQ(g.graph.edges(), (std::vector<E>{{0, 1}, {1, 2}}));
    EXPECT_EQ(g.intervals, s);
}

TEST(BuildGraph, Empty) {
    const auto g = build_graph(std::vector<Interval>{});
    EXPECT_EQ(g.graph.size(), 0U);
    EXPECT_EQ(g.graph.edge_count(), 0U);
}

TEST(BuildGraph, TouchingChainAcrossWordBoundary) {
    std::vector<Interval> s;
    for (int i = 0; i < 130; ++i) s.push_back({i / 130.0, (i + 1) / 130.0});
    const auto g = intersection_graph_sweep(s);
    EXPECT_EQ(g, intersection_graph_pairwise(s));
    EXPECT_TRUE(g.has_edge(63, 64));
    EXPECT_TRUE(g.has_edge(127, 128));
    EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(SweepProperty, MatchesPairwise) {
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.below(trial < 190 ? 150 : 1001);
        const auto s = trial % 3 == 0 ? oracle::grid_intervals(rng, n, 1 + rng.below(20))
                                      : oracle::continuous_intervals(rng, n);
        const auto g = intersection_graph_sweep(s);
        ASSERT_EQ(g, intersection_graph_pairwise(s)) << "trial " << trial;
        expect_simple(g);
        ASSERT_EQ(interval_degrees(s), g.degrees());
        ASSERT_EQ(interval_edge_count(s), g.edge_count());
    }
}

TEST(Generate, EqualsBuildOfSample) {
    const auto m = MeasureModel::tilted_rectangle(0.3);
    const auto g = generate(m, 300, 99);
    EXPECT_EQ(g.intervals, sample(m, 300, 99));
    EXPECT_EQ(g.graph, intersection_graph_pairwise(g.intervals));
}

TEST(Generate, CompleteModelsGiveKn) {
    for (std::size_t n : {1U, 5U, 64U, 65U, 300U}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            EXPECT_EQ(generate(MeasureModel::complete_l(), n, seed).graph, Graph::complete(n));
            EXPECT_EQ(generate(MeasureModel::complete_r(), n, seed).graph, Graph::complete(n));
        }
    }
}

TEST(Generate, DisjointEmpiricalGivesUnionOfCliques) {
    const auto m = MeasureModel::empirical({{0.0, 0.1}, {0.9, 1.0}});
    const auto g = generate(m, 400, 3);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            EXPECT_EQ(g.graph.has_edge(i, j), g.intervals[i] == g.intervals[j]);
        }
    }
}

TEST(Generate, UniformEdgeDensity) {
    const auto g = generate(MeasureModel::uniform_triangle(), 2000, 17);
    const double d = 2.0 * static_cast<double>(g.graph.edge_count()) / (2000.0 * 2000.0);
    EXPECT_NEAR(d, 2.0 / 3.0, 0.02);
}

TEST(Generate, UniformMaxDegreeFullWithProbabilityTwoThirds) {
    const std::size_t runs = 2000;
    std::size_t full = 0;
    for (std::size_t s = 0; s < runs; ++s) {
        const auto deg = interval_degrees(sample(MeasureModel::uniform_triangle(), 50, derive_seed(5, s)));
        if (*std::max_element(deg.begin(), deg.end()) == 49) ++full;
    }
    EXPECT_NEAR(static_cast<double>(full) / runs, 2.0 / 3.0, 0.05);
}

TEST(EmpiricalMeasure, SingleInterval) {
    const auto m = empirical_measure(build_graph(std::vector<Interval>{{0.0, 1.0}}));
    for (const auto& I : sample(m, 20, 1)) EXPECT_EQ(I, (Interval{0.0, 1.0}));
}

TEST(EmpiricalMeasure, SupportContainment) {
    const auto g = generate(MeasureModel::uniform_triangle(), 25, 4);
    for (const auto& I : sample(empirical_measure(g), 500, 8)) {
        EXPECT_NE(std::find(g.intervals.begin(), g.intervals.end(), I), g.intervals.end());
    }
}

TEST(EmpiricalMeasure, PathGhost) {
    const auto g = build_graph(std::vector<Interval>{{0.0, 0.3}, {0.2, 0.5}, {0.4, 0.7}});
    EXPECT_DOUBLE_EQ(t_hom_exact(graphs::complete(2), g.graph), 4.0 / 9.0);
    // Repeated draws of one interval always meet, adding the 3 diagonal pairs.
    const double ghost = t_hom_looped(graphs::complete(2), g.graph);
    EXPECT_DOUBLE_EQ(ghost, 7.0 / 9.0);
    const auto mc = t_hom_mc(graphs::complete(2), empirical_measure(g), 100000, 12);
    EXPECT_LE(std::abs(ghost - mc.value), 3.0 * mc.std_error);
}

TEST(EmpiricalMeasure, EmptyGraphIsDomainError) {
    EXPECT_THROW(empirical_measure(LabeledIntervalGraph{}), domain_error);
}

TEST(GraphBuilder, RejectsBadEdges) {
    GraphBuilder b(3);
    EXPECT_THROW(b.add_edge(1, 1), parameter_error);
    EXPECT_THROW(b.add_edge(0, 3), parameter_error);
}

TEST(EdgeList, RoundTrip) {
    const auto g = generate(MeasureModel::line(0.3), 100, 1).graph;
    std::stringstream ss;
    write_edge_list(ss, g);
    EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeList, Malformed) {
    std::stringstream bad_header("m 3\n0 1\n");
    EXPECT_THROW(read_edge_list(bad_header), format_error);
    std::stringstream bad_line("n 3\n0 x\n");
    EXPECT_THROW(read_edge_list(bad_line), format_error);
}

}  // namespace
}  // namespace igl
