#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <sstream>

#include "igl/interval_graph.hpp"
#include "igl/kernels_ext.hpp"
#include "oracles.hpp"

namespace igl {
namespace {

constexpr double pi = std::numbers::pi;

TEST(Arc, Examples) {
    EXPECT_TRUE(arc_intersects(make_arc(1.0, two_pi), make_arc(4.0, 0.1)));
    EXPECT_TRUE(arc_intersects(make_arc(0.0, pi), make_arc(pi, pi / 2)));
    EXPECT_FALSE(arc_intersects(make_arc(0.0, 1.0), make_arc(2.0, 1.0)));
    // Wraparound through angle 0.
    EXPECT_TRUE(arc_intersects(make_arc(6.0, 1.0), make_arc(0.5, 0.1)));
    EXPECT_FALSE(arc_intersects(make_arc(6.0, 0.2), make_arc(0.5, 0.1)));
    EXPECT_THROW(make_arc(two_pi, 1.0), parameter_error);
    EXPECT_THROW(make_arc(0.0, 7.0), parameter_error);
}

TEST(Arc, CyclePatternGivesC4) {
    const std::vector<Arc> arcs = {{0.0, pi / 2}, {pi / 2, pi / 2}, {pi, pi / 2}, {3 * pi / 2, pi / 2}};
    const auto g = build_intersection_graph(arcs, ArcKernel{});
    using E = std::pair<std::size_t, std::size_t>;
    EXPECT_EQ(g.edges(), (std::vector<E>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
    // The hole is visible to the induced census: C4 is not an interval graph.
    EXPECT_EQ(t_ind_exact(graphs::cycle(4), g), 1.0);
}

TEST(ArcProperty, HalfCircleEmbeddingPreservesIntervalGraphs) {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = rng.below(201);
        const auto s = trial % 2 == 0 ? oracle::grid_intervals(rng, n) : oracle::continuous_intervals(rng, n);
        std::vector<Arc> arcs;
        for (const auto& I : s) arcs.push_back(interval_to_arc(I));
        ASSERT_EQ(build_intersection_graph(arcs, ArcKernel{}), intersection_graph_sweep(s));
    }
}

TEST(ArcProperty, SymmetricKernel) {
    Rng rng(22);
    for (int i = 0; i < 10000; ++i) {
        const Arc a{rng.uniform(0, two_pi), rng.uniform(0, two_pi)};
        const Arc b{rng.uniform(0, two_pi), rng.uniform(0, two_pi)};
        ASSERT_EQ(arc_intersects(a, b), arc_intersects(b, a));
    }
}

TEST(Chord, Examples) {
    EXPECT_TRUE(chord_intersects(make_chord(0.0, pi), make_chord(pi / 2, 3 * pi / 2)));
    EXPECT_FALSE(chord_intersects(make_chord(0.0, 1.0), make_chord(2.0, 3.0)));
    EXPECT_TRUE(chord_intersects(make_chord(0.0, 1.0), make_chord(0.0, 3.0)));
    EXPECT_FALSE(chord_intersects(make_chord(1.0, 4.0), make_chord(2.0, 3.0)));
    EXPECT_EQ(make_chord(1.0, 2.0), make_chord(2.0, 1.0));
    EXPECT_THROW(make_chord(-0.1, 1.0), parameter_error);
}

TEST(ChordProperty, AgreesWithPlanarOracle) {
    Rng rng(23);
    for (int i = 0; i < 10000; ++i) {
        const double a1 = rng.uniform(0, two_pi), a2 = rng.uniform(0, two_pi);
        const double b1 = rng.uniform(0, two_pi), b2 = rng.uniform(0, two_pi);
        ASSERT_EQ(chord_intersects({a1, a2}, {b1, b2}), oracle::chords_cross_planar(a1, a2, b1, b2));
    }
}

TEST(Segment, Examples) {
    EXPECT_TRUE(perm_intersects(make_segment(0.2, 0.8), make_segment(0.8, 0.2)));
    EXPECT_FALSE(perm_intersects(make_segment(0.1, 0.1), make_segment(0.9, 0.9)));
    EXPECT_TRUE(perm_intersects(make_segment(0.4, 0.6), make_segment(0.4, 0.6)));
    EXPECT_THROW(make_segment(0.5, 1.5), parameter_error);
    const std::vector<Segment> rev = {{0.1, 0.3}, {0.2, 0.2}, {0.3, 0.1}};
    EXPECT_EQ(build_intersection_graph(rev, SegmentKernel{}), Graph::complete(3));
    EXPECT_EQ(build_intersection_graph(std::vector<Segment>{}, SegmentKernel{}).size(), 0U);
}

TEST(SegmentProperty, MatchesPermutationDefinitionExhaustively) {
    for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<std::size_t> pi_(n);
        std::iota(pi_.begin(), pi_.end(), std::size_t{0});
        do {
            std::vector<Segment> segs;
            for (std::size_t i = 0; i < n; ++i) {
                segs.push_back({(static_cast<double>(i) + 0.5) / static_cast<double>(n),
                                (static_cast<double>(pi_[i]) + 0.5) / static_cast<double>(n)});
            }
            const auto g = build_intersection_graph(segs, SegmentKernel{});
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) ASSERT_EQ(g.has_edge(i, j), pi_[i] > pi_[j]);
        } while (std::next_permutation(pi_.begin(), pi_.end()));
    }
}

TEST(ObjectText, RoundTrip) {
    const std::vector<Arc> arcs = {{0.1, 2.0}, {6.0, two_pi}};
    std::stringstream a;
    write_arcs(a, arcs);
    EXPECT_EQ(read_arcs(a), arcs);
    const std::vector<Chord> chords = {{0.3, 5.0}};
    std::stringstream c;
    write_chords(c, chords);
    EXPECT_EQ(read_chords(c), chords);
    const std::vector<Segment> segs = {{1.0 / 3.0, 0.7}};
    std::stringstream s;
    write_segments(s, segs);
    EXPECT_EQ(read_segments(s), segs);
    std::stringstream bad("0.5 9\n");
    EXPECT_THROW(read_arcs(bad), format_error);
}

TEST(ProperFamily, Detection) {
    EXPECT_TRUE(is_proper_family(std::vector<Interval>{{0.0, 0.5}, {0.2, 0.6}, {0.2, 0.6}}));
    EXPECT_FALSE(is_proper_family(std::vector<Interval>{{0.0, 0.5}, {0.1, 0.4}}));
    EXPECT_FALSE(is_proper_family(std::vector<Interval>{{0.0, 0.5}, {0.0, 0.4}}));
    EXPECT_FALSE(is_proper_family(std::vector<Interval>{{0.0, 0.5}, {0.3, 0.5}}));
}

TEST(CurveSample, DiagonalIsEdgeless) {
    const MonotoneCurve diag({{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}});
    const auto s = curve_sample(diag, 300, 5);
    EXPECT_EQ(intersection_graph_sweep(s).edge_count(), 0U);
    EXPECT_TRUE(is_proper_family(s));
}

TEST(CurveSample, FixedLengthCurveReproducesModel) {
    const double r = 0.25;
    const MonotoneCurve c({{0.0, 0.0, r}, {1.0 - r, 1.0 - r, 1.0}});
    const auto via_curve = sample(MeasureModel::curve_supported(c), 500, 6);
    const auto direct = sample(MeasureModel::fixed_length(r), 500, 6);
    for (std::size_t i = 0; i < via_curve.size(); ++i) {
        EXPECT_NEAR(via_curve[i].left, direct[i].left, 1e-12);
        EXPECT_NEAR(via_curve[i].right, direct[i].right, 1e-12);
    }
}

TEST(CurveSampleProperty, ProperAndGraphPreserved) {
    Rng rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        // Random monotone curve with flat stretches so ties occur.
        std::vector<CurvePoint> pts;
        double a = 0.0, b = rng.uniform(0, 0.3);
        for (int k = 0; k < 5; ++k) {
            pts.push_back({static_cast<double>(k), a, b});
            if (rng.below(3) != 0) a = std::min(1.0, a + rng.uniform(0, 0.3));
            if (rng.below(3) != 0) b = std::min(1.0, b + rng.uniform(0, 0.3));
            b = std::max(a, b);
        }
        const MonotoneCurve curve(pts);
        const std::size_t n = 1 + rng.below(150);
        const std::uint64_t seed = rng.next();
        const auto s = curve_sample(curve, n, seed);

        // Unperturbed draws, reproducing the same parameter stream.
        Rng replay(seed);
        std::vector<std::pair<double, Interval>> raw;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = replay.uniform(curve.t_min(), curve.t_max());
            raw.emplace_back(t, curve.at(t));
        }
        std::vector<Interval> raw_iv;
        for (const auto& [t, I] : raw) raw_iv.push_back(I);
        std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t k = 1; k < raw.size(); ++k) {
            ASSERT_LE(raw[k - 1].second.left, raw[k].second.left);
            ASSERT_LE(raw[k - 1].second.right, raw[k].second.right);
        }

        for (const auto& I : s) ASSERT_TRUE(is_valid(I));
        ASSERT_TRUE(is_proper_family(s)) << "trial " << trial;
        ASSERT_EQ(intersection_graph_sweep(s), intersection_graph_sweep(raw_iv)) << "trial " << trial;
    }
}

TEST(Battery, Examples) {
    GraphBuilder b(6);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(2, 3);
    b.add_edge(3, 0);
    const auto rep = forbidden_battery(std::move(b).build());
    ASSERT_EQ(rep.entries.size(), 6U);
    EXPECT_EQ(rep.entries[0].name, "C4");
    EXPECT_DOUBLE_EQ(rep.entries[0].t_ind, 1.0 / 15.0);
    EXPECT_FALSE(rep.all_zero());
    EXPECT_EQ(BatteryReport::max_cycle, 6U);

    EXPECT_TRUE(forbidden_battery(Graph::complete(6)).all_zero());
    EXPECT_THROW(forbidden_battery(Graph::complete(5)), size_error);
}

TEST(Battery, DetectsEachObstruction) {
    for (const auto& p : battery_graphs()) {
        GraphBuilder b(6);
        for (const auto& [u, v] : p.graph.edges()) b.add_edge(u, v);
        const auto rep = forbidden_battery(std::move(b).build());
        const auto it = std::find_if(rep.entries.begin(), rep.entries.end(), [&](const auto& e) { return e.name == p.name; });
        ASSERT_NE(it, rep.entries.end());
        EXPECT_GT(it->t_ind, 0.0) << p.name;
    }
}

TEST(Battery, FixedLengthGraphsAreClean) {
    for (std::uint64_t s = 0; s < 3; ++s) {
        for (double r : {0.05, 0.25}) {
            EXPECT_TRUE(forbidden_battery(generate(MeasureModel::fixed_length(r), 40, s).graph).all_zero());
        }
    }
}

}  // namespace
}  // namespace igl
