#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "igl/errors.hpp"
#include "igl/graph.hpp"
#include "igl/interval.hpp"
#include "igl/measures.hpp"

namespace igl {

/// A graph together with the intervals that represent it, index-aligned.
struct LabeledIntervalGraph {
    Graph graph;
    std::vector<Interval> intervals;

    std::size_t size() const noexcept { return intervals.size(); }
};

namespace detail {

struct SweepEvent {
    double x;
    std::uint32_t side;  // 0 = left endpoint, 1 = right endpoint
    std::uint32_t index;
};

/// Endpoint events ordered by (coordinate, left before right, index), so
/// touching closed intervals are simultaneously active.
inline std::vector<SweepEvent> sweep_events(std::span<const Interval> s) {
    std::vector<SweepEvent> ev;
    ev.reserve(2 * s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        ev.push_back({s[i].left, 0, static_cast<std::uint32_t>(i)});
        ev.push_back({s[i].right, 1, static_cast<std::uint32_t>(i)});
    }
    std::sort(ev.begin(), ev.end(), [](const SweepEvent& a, const SweepEvent& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.side != b.side) return a.side < b.side;
        return a.index < b.index;
    });
    return ev;
}

}  // namespace detail

/// Intersection graph by endpoint sweep. Each interval, on entry, is joined
/// to every currently active interval.
inline Graph intersection_graph_sweep(std::span<const Interval> s) {
    const std::size_t n = s.size();
    GraphBuilder b(n);
    std::vector<Word> active(words_for(n), 0);
    for (const auto& e : detail::sweep_events(s)) {
        const std::size_t i = e.index;
        if (e.side == 0) {
            b.or_row(i, active);
            active[i / word_bits] |= Word{1} << (i % word_bits);
        } else {
            active[i / word_bits] &= ~(Word{1} << (i % word_bits));
        }
    }
    b.symmetrize();
    return std::move(b).build();
}

/// O(n^2) pairwise kernel evaluation; the cross-check path for the sweep.
inline Graph intersection_graph_pairwise(std::span<const Interval> s) {
    GraphBuilder b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (intersects(s[i], s[j])) b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

inline LabeledIntervalGraph build_graph(std::span<const Interval> s) {
    return {intersection_graph_sweep(s), std::vector<Interval>(s.begin(), s.end())};
}

/// G(n, mu): the intersection graph of n i.i.d. draws.
template <Sampler S>
LabeledIntervalGraph generate(const S& model, std::size_t n, std::uint64_t seed) {
    const auto s = sample(model, n, seed);
    return build_graph(s);
}

/// Vertex degrees straight from the intervals in O(n log n):
/// deg(i) = #{j : l_j <= r_i} - #{j : r_j < l_i} - 1.
inline std::vector<std::size_t> interval_degrees(std::span<const Interval> s) {
    std::vector<double> lefts;
    std::vector<double> rights;
    lefts.reserve(s.size());
    rights.reserve(s.size());
    for (const auto& I : s) {
        lefts.push_back(I.left);
        rights.push_back(I.right);
    }
    std::sort(lefts.begin(), lefts.end());
    std::sort(rights.begin(), rights.end());
    std::vector<std::size_t> deg(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto starts = std::upper_bound(lefts.begin(), lefts.end(), s[i].right) - lefts.begin();
        const auto ended = std::lower_bound(rights.begin(), rights.end(), s[i].left) - rights.begin();
        deg[i] = static_cast<std::size_t>(starts - ended) - 1;
    }
    return deg;
}

/// Number of edges from interval degrees.
inline std::size_t interval_edge_count(std::span<const Interval> s) {
    std::size_t twice = 0;
    for (auto d : interval_degrees(s)) twice += d;
    return twice / 2;
}

/// The empirical measure (1/n) sum delta_{I_i}: uniform resampling of the
/// graph's intervals. Its graph limit has the same densities as the graph.
inline MeasureModel empirical_measure(const LabeledIntervalGraph& g) {
    if (g.intervals.empty()) throw domain_error("empirical measure of an empty graph");
    return MeasureModel::empirical(g.intervals);
}

}  // namespace igl
