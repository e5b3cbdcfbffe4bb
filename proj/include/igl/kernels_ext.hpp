#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "igl/curve.hpp"
#include "igl/densities.hpp"
#include "igl/errors.hpp"
#include "igl/graph.hpp"
#include "igl/interval.hpp"
#include "igl/random.hpp"
#include "igl/small_graph.hpp"

namespace igl {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------------------
// Circular arcs.

/// Closed arc {e^{it} : t in [start, start + length]}. length == 2*pi is the
/// whole circle.
struct Arc {
    double start = 0.0;
    double length = 0.0;

    friend constexpr bool operator==(const Arc&, const Arc&) = default;
};

inline Arc make_arc(double start, double length) {
    if (!(start >= 0.0 && start < two_pi) || !(length >= 0.0 && length <= two_pi)) {
        throw parameter_error("arc needs start in [0,2pi) and length in [0,2pi]");
    }
    return {start, length};
}

namespace detail {

/// Counter-clockwise angular distance from `from` to `to`, in [0, 2pi).
inline double ccw_distance(double from, double to) {
    double d = to - from;
    if (d < 0.0) d += two_pi;
    return d >= two_pi ? 0.0 : d;
}

}  // namespace detail

/// Two closed arcs meet iff one contains the other's start point.
inline bool arc_intersects(const Arc& A, const Arc& B) {
    if (A.length >= two_pi || B.length >= two_pi) return true;
    return detail::ccw_distance(A.start, B.start) <= A.length ||
           detail::ccw_distance(B.start, A.start) <= B.length;
}

struct ArcKernel {
    bool operator()(const Arc& a, const Arc& b) const { return arc_intersects(a, b); }
};

/// [a,b] -> arc from pi*a of length pi*(b-a): the half-circle embedding of
/// an interval representation.
inline Arc interval_to_arc(const Interval& I) {
    return {std::numbers::pi * I.left, std::numbers::pi * I.right - std::numbers::pi * I.left};
}

// ---------------------------------------------------------------------------
// Chords.

/// Chord between two points of the unit circle, as an unordered angle pair.
/// Equal angles give a degenerate chord (a single point of the circle).
struct Chord {
    double angle1 = 0.0;
    double angle2 = 0.0;

    friend bool operator==(const Chord& x, const Chord& y) {
        return (x.angle1 == y.angle1 && x.angle2 == y.angle2) ||
               (x.angle1 == y.angle2 && x.angle2 == y.angle1);
    }
};

inline Chord make_chord(double a1, double a2) {
    if (!(a1 >= 0.0 && a1 < two_pi) || !(a2 >= 0.0 && a2 < two_pi)) {
        throw parameter_error("chord angles must lie in [0,2pi)");
    }
    return {a1, a2};
}

/// Chords meet iff they share an endpoint or their endpoints interleave.
inline bool chord_intersects(const Chord& C, const Chord& D) {
    if (C.angle1 == D.angle1 || C.angle1 == D.angle2 || C.angle2 == D.angle1 || C.angle2 == D.angle2) {
        return true;
    }
    const double lo = std::min(C.angle1, C.angle2);
    const double hi = std::max(C.angle1, C.angle2);
    const bool first_inside = lo < D.angle1 && D.angle1 < hi;
    const bool second_inside = lo < D.angle2 && D.angle2 < hi;
    return first_inside != second_inside;
}

struct ChordKernel {
    bool operator()(const Chord& a, const Chord& b) const { return chord_intersects(a, b); }
};

// ---------------------------------------------------------------------------
// Permutation segments.

/// Segment from (bottom, 0) to (top, 1).
struct Segment {
    double bottom = 0.0;
    double top = 0.0;

    friend constexpr bool operator==(const Segment&, const Segment&) = default;
};

inline Segment make_segment(double bottom, double top) {
    if (!(bottom >= 0.0 && bottom <= 1.0 && top >= 0.0 && top <= 1.0)) {
        throw parameter_error("segment endpoints must lie in [0,1]");
    }
    return {bottom, top};
}

/// Segments cross or touch iff their bottom and top orders disagree (weakly).
inline bool perm_intersects(const Segment& s1, const Segment& s2) {
    return (s1.bottom - s2.bottom) * (s1.top - s2.top) <= 0.0;
}

struct SegmentKernel {
    bool operator()(const Segment& a, const Segment& b) const { return perm_intersects(a, b); }
};

// ---------------------------------------------------------------------------
// Text formats: "start length", "angle1 angle2", "bottom top", one per line.

namespace detail {

template <class Obj, class Make>
std::vector<Obj> read_objects(std::istream& in, Make make) {
    std::vector<Obj> out;
    try {
        for (const auto& [a, b] : read_pair_list(in)) out.push_back(make(a, b));
    } catch (const parameter_error& e) {
        throw format_error(e.what());
    }
    return out;
}

}  // namespace detail

inline std::vector<Arc> read_arcs(std::istream& in) { return detail::read_objects<Arc>(in, make_arc); }
inline std::vector<Chord> read_chords(std::istream& in) { return detail::read_objects<Chord>(in, make_chord); }
inline std::vector<Segment> read_segments(std::istream& in) {
    return detail::read_objects<Segment>(in, make_segment);
}

inline void write_arcs(std::ostream& out, std::span<const Arc> arcs) {
    for (const auto& A : arcs) out << detail::format_double(A.start) << ' ' << detail::format_double(A.length) << '\n';
}

inline void write_chords(std::ostream& out, std::span<const Chord> chords) {
    for (const auto& C : chords) {
        out << detail::format_double(C.angle1) << ' ' << detail::format_double(C.angle2) << '\n';
    }
}

inline void write_segments(std::ostream& out, std::span<const Segment> segs) {
    for (const auto& S : segs) out << detail::format_double(S.bottom) << ' ' << detail::format_double(S.top) << '\n';
}

// ---------------------------------------------------------------------------

/// Pairwise kernel evaluation over any object type.
template <class Obj, class Kernel>
Graph build_intersection_graph(std::span<const Obj> objects, Kernel kernel) {
    GraphBuilder b(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = i + 1; j < objects.size(); ++j)
            if (kernel(objects[i], objects[j])) b.add_edge(i, j);
    return std::move(b).build();
}

template <class Obj, class Kernel>
Graph build_intersection_graph(const std::vector<Obj>& objects, Kernel kernel) {
    return build_intersection_graph(std::span<const Obj>(objects), kernel);
}

// ---------------------------------------------------------------------------
// Curve-supported samples and proper representations.

/// True iff no interval properly contains another.
inline bool is_proper_family(std::span<const Interval> s) {
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (s[x].left != s[y].left) return s[x].left < s[y].left;
        return s[x].right > s[y].right;
    });
    // After sorting by (left asc, right desc), a proper family has strictly
    // increasing rights unless two intervals are identical.
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto& prev = s[order[k - 1]];
        const auto& cur = s[order[k]];
        if (cur == prev) continue;
        if (cur.right <= prev.right) return false;
    }
    return true;
}

/// n intervals gamma(T_i), T_i uniform on the parameter range, made proper by
/// a deterministic perturbation preserving the intersection graph.
///
/// With intervals ranked by (T, index) as k = 0..n-1 and g the smallest
/// nonzero gap between endpoint values, left_k += k*eps and
/// right_k += (k+n)*eps with eps = g/(4n): both endpoint sequences become
/// strictly increasing, and every comparison left_j <= right_k keeps its
/// outcome. Shifts stay below g/2. If a right end leaves [0,1] the family is
/// rescaled by its maximum.
inline std::vector<Interval> curve_sample(const MonotoneCurve& curve, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> ts(n);
    std::vector<Interval> raw(n);
    for (std::size_t i = 0; i < n; ++i) {
        ts[i] = rng.uniform(curve.t_min(), curve.t_max());
        raw[i] = curve.at(ts[i]);
    }
    if (n == 0) return raw;

    std::vector<double> values;
    values.reserve(2 * n);
    for (const auto& I : raw) {
        values.push_back(I.left);
        values.push_back(I.right);
    }
    std::sort(values.begin(), values.end());
    double gap = 1.0;
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (values[k] > values[k - 1]) gap = std::min(gap, values[k] - values[k - 1]);
    }
    const double eps = gap / (4.0 * static_cast<double>(n));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (ts[x] != ts[y]) return ts[x] < ts[y];
        return x < y;
    });
    std::vector<Interval> out(n);
    double top = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = order[k];
        out[i].left = raw[i].left + static_cast<double>(k) * eps;
        out[i].right = raw[i].right + static_cast<double>(k + n) * eps;
        top = std::max(top, out[i].right);
    }
    if (top > 1.0) {
        for (auto& I : out) {
            I.left /= top;
            I.right = std::min(I.right / top, 1.0);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Forbidden induced subgraphs of unit interval graphs.

struct BatteryEntry {
    std::string name;
    double t_ind = 0.0;
};

/// Exact induced densities of C4, C5, C6, K1,3, the net S3 and its
/// complement. The full obstruction set contains every C_k with k >= 4;
/// cycles here stop at max_cycle, so all-zero output is necessary but not
/// sufficient for a unit interval limit.
struct BatteryReport {
    static constexpr std::size_t max_cycle = 6;
    std::vector<BatteryEntry> entries;

    bool all_zero() const noexcept {
        return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.t_ind == 0.0; });
    }
};

inline const std::vector<Probe>& battery_graphs() {
    static const std::vector<Probe> g = {
        {"C4", graphs::cycle(4)},   {"C5", graphs::cycle(5)}, {"C6", graphs::cycle(6)},
        {"K1,3", graphs::claw()},   {"S3", graphs::net()},    {"S3bar", graphs::net_complement()},
    };
    return g;
}

inline BatteryReport forbidden_battery(const Graph& G) {
    if (G.size() < 6) throw size_error("forbidden battery needs |G| >= 6");
    const InducedCensus c4(G, 4);
    const InducedCensus c5(G, 5);
    const InducedCensus c6(G, 6);
    BatteryReport rep;
    for (const auto& p : battery_graphs()) {
        const auto& census = p.graph.size() == 4 ? c4 : p.graph.size() == 5 ? c5 : c6;
        rep.entries.push_back({p.name, census.fraction(p.graph)});
    }
    return rep;
}

}  // namespace igl
