#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "igl/errors.hpp"

namespace igl {

/// Simple graph on k <= 8 vertices, the pattern side of t(F, G).
///
/// Labeled graphs are also identified with an edge code: bit p(p-1)/2 + q is
/// set for each edge qp with q < p.
class SmallGraph {
public:
    static constexpr std::size_t max_vertices = 8;

    SmallGraph() = default;

    explicit SmallGraph(std::size_t k, std::initializer_list<std::pair<int, int>> edges = {})
        : k_(check_size(k)) {
        for (const auto& [u, v] : edges) add(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }

    SmallGraph(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
        : k_(check_size(k)) {
        for (const auto& [u, v] : edges) add(u, v);
    }

    static SmallGraph from_code(std::size_t k, std::uint32_t code) {
        SmallGraph g(k);
        for (std::size_t p = 1; p < k; ++p)
            for (std::size_t q = 0; q < p; ++q)
                if ((code >> pair_bit(q, p)) & 1U) g.add(q, p);
        return g;
    }

    std::size_t size() const noexcept { return k_; }

    bool has_edge(std::size_t u, std::size_t v) const noexcept { return (adj_[u] >> v) & 1U; }
    std::uint8_t neighbors(std::size_t u) const noexcept { return adj_[u]; }
    std::size_t degree(std::size_t u) const noexcept { return static_cast<std::size_t>(std::popcount(adj_[u])); }

    std::size_t edge_count() const noexcept {
        std::size_t e = 0;
        for (std::size_t u = 0; u < k_; ++u) e += degree(u);
        return e / 2;
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t u = 0; u < k_; ++u)
            for (std::size_t v = u + 1; v < k_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    SmallGraph without_edge(std::size_t u, std::size_t v) const {
        SmallGraph g = *this;
        g.adj_[u] &= static_cast<std::uint8_t>(~(1U << v));
        g.adj_[v] &= static_cast<std::uint8_t>(~(1U << u));
        return g;
    }

    SmallGraph complement() const {
        SmallGraph g(k_);
        for (std::size_t u = 0; u < k_; ++u)
            for (std::size_t v = u + 1; v < k_; ++v)
                if (!has_edge(u, v)) g.add(u, v);
        return g;
    }

    std::uint32_t code() const noexcept {
        std::uint32_t c = 0;
        for (std::size_t p = 1; p < k_; ++p)
            for (std::size_t q = 0; q < p; ++q)
                if (has_edge(q, p)) c |= std::uint32_t{1} << pair_bit(q, p);
        return c;
    }

    /// Relabel vertex v as perm[v].
    SmallGraph relabeled(const std::array<std::uint8_t, max_vertices>& perm) const {
        SmallGraph g(k_);
        for (std::size_t u = 0; u < k_; ++u)
            for (std::size_t v = u + 1; v < k_; ++v)
                if (has_edge(u, v)) g.add(perm[u], perm[v]);
        return g;
    }

    std::vector<std::size_t> degree_sequence() const {
        std::vector<std::size_t> d(k_);
        for (std::size_t u = 0; u < k_; ++u) d[u] = degree(u);
        std::sort(d.begin(), d.end());
        return d;
    }

    /// Sorted, de-duplicated codes of every relabeling of this graph.
    std::vector<std::uint32_t> orbit_codes() const {
        std::array<std::uint8_t, max_vertices> perm{};
        std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k_), std::uint8_t{0});
        std::vector<std::uint32_t> out;
        do {
            out.push_back(relabeled(perm).code());
        } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k_)));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

    static constexpr std::size_t pair_bit(std::size_t q, std::size_t p) noexcept {
        return p * (p - 1) / 2 + q;
    }

private:
    static std::size_t check_size(std::size_t k) {
        if (k > max_vertices) throw size_error("pattern graphs are limited to 8 vertices");
        return k;
    }

    void add(std::size_t u, std::size_t v) {
        if (u >= k_ || v >= k_) throw parameter_error("pattern edge endpoint out of range");
        if (u == v) throw parameter_error("pattern graphs are irreflexive");
        adj_[u] |= static_cast<std::uint8_t>(1U << v);
        adj_[v] |= static_cast<std::uint8_t>(1U << u);
    }

    std::size_t k_ = 0;
    std::array<std::uint8_t, max_vertices> adj_{};
};

/// Isomorphism by permutation search, pruned by degree sequence and by
/// matching each vertex only to targets of equal degree.
inline bool is_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    const std::size_t k = a.size();
    std::array<std::uint8_t, SmallGraph::max_vertices> image{};
    std::uint32_t used = 0;
    auto extend = [&](auto&& self, std::size_t u) -> bool {
        if (u == k) return true;
        for (std::size_t v = 0; v < k; ++v) {
            if ((used >> v) & 1U || a.degree(u) != b.degree(v)) continue;
            bool ok = true;
            for (std::size_t w = 0; w < u && ok; ++w) ok = a.has_edge(u, w) == b.has_edge(v, image[w]);
            if (!ok) continue;
            image[u] = static_cast<std::uint8_t>(v);
            used |= 1U << v;
            if (self(self, u + 1)) return true;
            used &= ~(1U << v);
        }
        return false;
    };
    return extend(extend, 0);
}

/// One representative per isomorphism class on exactly k vertices (k <= 5),
/// ordered by edge count then by smallest code.
inline std::vector<SmallGraph> isomorphism_classes(std::size_t k) {
    if (k > 5) throw size_error("class enumeration is limited to 5 vertices");
    const std::size_t pairs = k * (k - 1) / 2;
    std::vector<bool> seen(std::size_t{1} << pairs, false);
    std::vector<SmallGraph> reps;
    for (std::uint32_t c = 0; c < (std::uint32_t{1} << pairs); ++c) {
        if (seen[c]) continue;
        const auto g = SmallGraph::from_code(k, c);
        for (auto o : g.orbit_codes()) seen[o] = true;
        reps.push_back(g);
    }
    std::stable_sort(reps.begin(), reps.end(), [](const SmallGraph& x, const SmallGraph& y) {
        return x.edge_count() < y.edge_count();
    });
    return reps;
}

namespace graphs {

inline SmallGraph complete(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v) e.emplace_back(u, v);
    return SmallGraph(k, e);
}

inline SmallGraph path(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u + 1 < k; ++u) e.emplace_back(u, u + 1);
    return SmallGraph(k, e);
}

inline SmallGraph cycle(std::size_t k) {
    auto e = path(k).edges();
    if (k >= 3) e.emplace_back(0, k - 1);
    return SmallGraph(k, e);
}

inline SmallGraph claw() { return SmallGraph(4, {{0, 1}, {0, 2}, {0, 3}}); }

/// The net: a triangle 123 with pendant vertices 4, 5, 6 at 1, 2, 3.
inline SmallGraph net() { return SmallGraph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

inline SmallGraph net_complement() { return net().complement(); }

}  // namespace graphs

struct Probe {
    std::string name;
    SmallGraph graph;
};

/// The 11 probe graphs: K1 and every graph on 2..4 vertices without isolated
/// vertices. Padding a pattern with isolated vertices leaves t_hom unchanged,
/// so these cover every homomorphism density of graphs on <= 4 vertices.
inline const std::vector<Probe>& probe_family() {
    static const std::vector<Probe> probes = {
        {"K1", SmallGraph(1)},
        {"K2", graphs::complete(2)},
        {"P3", graphs::path(3)},
        {"K3", graphs::complete(3)},
        {"2K2", SmallGraph(4, {{0, 1}, {2, 3}})},
        {"P4", graphs::path(4)},
        {"K1,3", graphs::claw()},
        {"C4", graphs::cycle(4)},
        {"paw", SmallGraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})},
        {"diamond", SmallGraph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})},
        {"K4", graphs::complete(4)},
    };
    return probes;
}

/// "01;12;..." edge rendering used in CSV output.
inline std::string edge_string(const SmallGraph& g) {
    std::string s;
    for (const auto& [u, v] : g.edges()) {
        if (!s.empty()) s += ';';
        s += std::to_string(u);
        s += std::to_string(v);
    }
    return s;
}

}  // namespace igl
