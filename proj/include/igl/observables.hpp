#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <type_traits>
#include <vector>

#include "igl/errors.hpp"
#include "igl/graph.hpp"
#include "igl/interval.hpp"
#include "igl/interval_graph.hpp"
#include "igl/measures.hpp"

namespace igl {

struct CliqueReport {
    std::size_t omega = 0;
    double witness_point = 0.0;
    std::vector<std::size_t> witness_vertices;
};

/// omega(G) = max_x #{i : x in I_i}, by endpoint sweep (lefts before rights
/// at equal coordinates). The witness point is the left endpoint of the last
/// interval to enter the maximum overlap; the witness set is every interval
/// containing it.
inline CliqueReport clique_number(std::span<const Interval> s) {
    if (s.empty()) throw domain_error("clique number of an empty graph");
    CliqueReport rep;
    std::size_t active = 0;
    for (const auto& e : detail::sweep_events(s)) {
        if (e.side == 0) {
            if (++active > rep.omega) {
                rep.omega = active;
                rep.witness_point = e.x;
            }
        } else {
            --active;
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].left <= rep.witness_point && rep.witness_point <= s[i].right) {
            rep.witness_vertices.push_back(i);
        }
    }
    return rep;
}

inline CliqueReport clique_number(const LabeledIntervalGraph& g) { return clique_number(g.intervals); }

/// Maximum clique by branch and bound over bitmasks; |G| <= 20.
inline std::size_t clique_number_oracle(const Graph& G) {
    const std::size_t n = G.size();
    if (n > 20) throw size_error("clique oracle is limited to 20 vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (G.has_edge(i, j)) adj[i] |= std::uint32_t{1} << j;
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::uint32_t candidates, std::size_t size) -> void {
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
        const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
        self(self, candidates & adj[v], size + 1);
        self(self, candidates & ~(std::uint32_t{1} << v), size);
    };
    rec(rec, n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1), 0);
    return best;
}

/// Greedy coloring in left-endpoint order (ties by index); each vertex gets
/// the least color absent from its already-colored neighbours, which are
/// exactly the intervals still active when it enters. Uses omega colors.
inline std::vector<std::size_t> chromatic_coloring(std::span<const Interval> s) {
    if (s.empty()) throw domain_error("coloring of an empty graph");
    std::vector<std::size_t> color(s.size(), 0);
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> free_colors;
    std::size_t next_color = 0;
    for (const auto& e : detail::sweep_events(s)) {
        if (e.side == 0) {
            if (free_colors.empty()) {
                color[e.index] = next_color++;
            } else {
                color[e.index] = free_colors.top();
                free_colors.pop();
            }
        } else {
            free_colors.push(color[e.index]);
        }
    }
    return color;
}

inline std::vector<std::size_t> chromatic_coloring(const LabeledIntervalGraph& g) {
    return chromatic_coloring(g.intervals);
}

inline std::size_t color_count(std::span<const std::size_t> coloring) {
    if (coloring.empty()) return 0;
    return *std::max_element(coloring.begin(), coloring.end()) + 1;
}

inline bool is_proper_coloring(const Graph& G, std::span<const std::size_t> coloring) {
    for (const auto& [i, j] : G.edges())
        if (coloring[i] == coloring[j]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// omega(mu) = sup_a mu{I : a in I}.

struct OmegaValue {
    double value = 0.0;
    double argmax_a = 0.0;
};

/// Empirical omega: max over candidate points of the fraction of intervals
/// containing the point. Candidates are the left endpoints, the point 1 and
/// the grid {k / n_grid}.
inline OmegaValue omega_of_sample(std::span<const Interval> s, std::size_t n_grid = 0) {
    if (s.empty()) throw domain_error("omega of an empty sample");
    std::vector<double> lefts;
    std::vector<double> rights;
    for (const auto& I : s) {
        lefts.push_back(I.left);
        rights.push_back(I.right);
    }
    std::sort(lefts.begin(), lefts.end());
    std::sort(rights.begin(), rights.end());
    std::vector<double> candidates = lefts;
    candidates.push_back(1.0);
    for (std::size_t k = 0; k <= n_grid && n_grid > 0; ++k) {
        candidates.push_back(static_cast<double>(k) / static_cast<double>(n_grid));
    }
    OmegaValue best{-1.0, 0.0};
    const auto n = static_cast<double>(s.size());
    for (double a : candidates) {
        const auto starts = std::upper_bound(lefts.begin(), lefts.end(), a) - lefts.begin();
        const auto ended = std::lower_bound(rights.begin(), rights.end(), a) - rights.begin();
        const double mass = static_cast<double>(starts - ended) / n;
        if (mass > best.value || (mass == best.value && a < best.argmax_a)) best = {mass, a};
    }
    return best;
}

/// omega(mu). Closed forms for the parametric kinds; otherwise the empirical
/// omega of the support (Empirical, exact) or of an mc-point sample.
template <Sampler S>
OmegaValue omega_of_measure(const S& model, std::size_t n_grid, std::size_t mc, std::uint64_t seed) {
    if (mc == 0) throw parameter_error("omega_of_measure needs mc >= 1");
    if constexpr (std::is_same_v<S, MeasureModel>) {
        const auto& k = model.kind();
        if (std::holds_alternative<kind::UniformTriangle>(k)) return {0.5, 0.5};
        if (std::holds_alternative<kind::CompleteL>(k)) return {1.0, 1.0};
        if (std::holds_alternative<kind::CompleteR>(k)) return {1.0, 0.0};
        if (const auto* f = std::get_if<kind::FixedLength>(&k)) {
            return {f->r >= 0.5 ? 1.0 : f->r / (1.0 - f->r), 0.5};
        }
        // mu_a{I : c in I} = min(c/a, 1) - c; a mixture is piecewise linear in
        // c with breakpoints at the a-values, so the sup sits on one of them.
        auto line_mass = [](double a, double c) {
            if (a == 0.0) return 1.0 - c;
            return std::min(c / a, 1.0) - c;
        };
        if (const auto* l = std::get_if<kind::Line>(&k)) return {line_mass(l->a, l->a), l->a};
        if (const auto* m = std::get_if<kind::LineMixture>(&k)) {
            std::vector<double> cs = m->a_values;
            cs.push_back(0.0);
            cs.push_back(1.0);
            std::sort(cs.begin(), cs.end());
            OmegaValue best{-1.0, 0.0};
            for (double c : cs) {
                double mass = 0.0;
                for (std::size_t i = 0; i < m->weights.size(); ++i) {
                    mass += m->weights[i] * line_mass(m->a_values[i], c);
                }
                if (mass > best.value) best = {mass, c};
            }
            return best;
        }
        if (const auto* b = std::get_if<kind::BlockUnion>(&k)) {
            // Intervals (L, b_i] cover a point of block i with mass a - b_{i-1},
            // maximal at the block end.
            double end = 0.0;
            OmegaValue best{-1.0, 0.0};
            for (double p : b->p) {
                end += p;
                if (p > best.value) best = {p, std::min(end, 1.0)};
            }
            return best;
        }
        if (const auto* e = std::get_if<kind::Empirical>(&k)) return omega_of_sample(e->support, n_grid);
    }
    return omega_of_sample(sample(model, mc, seed), n_grid);
}

/// True iff repeatedly deleting a dominating or isolated vertex empties G.
inline bool is_threshold(const Graph& G) {
    const std::size_t n = G.size();
    std::vector<std::size_t> deg = G.degrees();
    std::vector<bool> alive(n, true);
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n && pick == n; ++v) {
            if (alive[v] && (deg[v] == 0 || deg[v] + 1 == remaining)) pick = v;
        }
        if (pick == n) return false;
        alive[pick] = false;
        --remaining;
        G.for_each_neighbor(pick, [&](std::size_t u) {
            if (alive[u]) --deg[u];
        });
    }
    return true;
}

}  // namespace igl
