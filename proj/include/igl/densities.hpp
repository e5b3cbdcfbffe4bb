#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "igl/errors.hpp"
#include "igl/graph.hpp"
#include "igl/interval.hpp"
#include "igl/measures.hpp"
#include "igl/random.hpp"
#include "igl/small_graph.hpp"
#include "igl/stats.hpp"

namespace igl {

/// A Monte Carlo value with its standard error. samples == 0 marks an exact value.
struct DensityEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

// ---------------------------------------------------------------------------
// Exact homomorphism density.

namespace detail {

/// Placement order for backtracking: each next vertex has the most already
/// placed neighbours, so candidate sets shrink early.
inline std::vector<std::size_t> hom_order(const SmallGraph& F) {
    const std::size_t k = F.size();
    std::vector<std::size_t> order;
    std::vector<bool> placed(k, false);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t best = k;
        std::size_t best_links = 0;
        for (std::size_t v = 0; v < k; ++v) {
            if (placed[v]) continue;
            std::size_t links = 0;
            for (auto u : order) links += F.has_edge(u, v) ? 1 : 0;
            if (best == k || links > best_links ||
                (links == best_links && F.degree(v) > F.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

/// Homomorphism count into the graph whose neighbourhood rows are given by
/// row(v), each `W` words wide.
template <class Row>
std::uint64_t hom_count_rows(const SmallGraph& F, std::size_t n, std::size_t W, Row row) {
    const std::size_t k = F.size();
    if (k == 0) return 1;
    const auto order = hom_order(F);

    // Vertices from tail_start on are pairwise non-adjacent in F, so their
    // choices are independent given the earlier ones: multiply popcounts.
    std::size_t tail_start = k;
    while (tail_start > 0) {
        bool free = true;
        for (std::size_t j = tail_start - 1; j < k && free; ++j)
            for (std::size_t i = tail_start - 1; i < k && free; ++i)
                if (i != j && F.has_edge(order[i], order[j])) free = false;
        if (!free) break;
        --tail_start;
    }
    // earlier[i]: positions < i adjacent to position i.
    std::vector<std::vector<std::size_t>> earlier(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (F.has_edge(order[i], order[j])) earlier[i].push_back(j);

    std::vector<Word> scratch(W * (k + 1));
    std::array<std::size_t, SmallGraph::max_vertices> image{};

    auto candidates = [&](std::size_t pos, Word* out) -> bool {
        if (earlier[pos].empty()) return false;
        const auto first = row(image[earlier[pos][0]]);
        std::copy(first.begin(), first.end(), out);
        for (std::size_t t = 1; t < earlier[pos].size(); ++t) {
            const auto r = row(image[earlier[pos][t]]);
            for (std::size_t w = 0; w < W; ++w) out[w] &= r[w];
        }
        return true;
    };
    auto popcount = [&](const Word* bits) {
        std::uint64_t c = 0;
        for (std::size_t w = 0; w < W; ++w) c += static_cast<std::uint64_t>(std::popcount(bits[w]));
        return c;
    };

    auto rec = [&](auto&& self, std::size_t pos) -> std::uint64_t {
        if (pos == tail_start) {
            std::uint64_t prod = 1;
            for (std::size_t t = tail_start; t < k && prod != 0; ++t) {
                Word* buf = scratch.data() + W * t;
                prod *= candidates(t, buf) ? popcount(buf) : n;
            }
            return prod;
        }
        Word* buf = scratch.data() + W * pos;
        std::uint64_t total = 0;
        if (!candidates(pos, buf)) {
            for (std::size_t v = 0; v < n; ++v) {
                image[pos] = v;
                total += self(self, pos + 1);
            }
            return total;
        }
        for (std::size_t w = 0; w < W; ++w) {
            Word bits = buf[w];
            while (bits != 0) {
                image[pos] = w * word_bits + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                total += self(self, pos + 1);
            }
        }
        return total;
    };
    return rec(rec, 0);
}

inline void check_hom_size(std::size_t k, std::size_t n) {
    if (static_cast<long double>(k) * std::log2(static_cast<long double>(std::max<std::size_t>(n, 1))) >= 63.0L) {
        throw size_error("hom count n^|F| would overflow 64 bits");
    }
}

}  // namespace detail

/// Number of homomorphisms F -> G.
inline std::uint64_t hom_count(const SmallGraph& F, const Graph& G) {
    detail::check_hom_size(F.size(), G.size());
    return detail::hom_count_rows(F, G.size(), G.words(), [&](std::size_t v) { return G.row(v); });
}

/// Homomorphisms F -> G with a loop added at every vertex of G, so adjacent
/// vertices of F may share an image.
inline std::uint64_t hom_count_looped(const SmallGraph& F, const Graph& G) {
    detail::check_hom_size(F.size(), G.size());
    const std::size_t W = G.words();
    std::vector<Word> bits(G.size() * W);
    for (std::size_t v = 0; v < G.size(); ++v) {
        const auto r = G.row(v);
        std::copy(r.begin(), r.end(), bits.begin() + static_cast<std::ptrdiff_t>(v * W));
        bits[v * W + v / word_bits] |= Word{1} << (v % word_bits);
    }
    return detail::hom_count_rows(F, G.size(), W,
                                  [&](std::size_t v) { return std::span<const Word>(bits.data() + v * W, W); });
}

/// t(F,G) = hom(F,G) / n^|F|.
inline double t_hom_exact(const SmallGraph& F, const Graph& G) {
    if (G.empty()) throw domain_error("t_hom of an empty graph");
    const auto h = hom_count(F, G);
    return static_cast<double>(h) / std::pow(static_cast<double>(G.size()), static_cast<double>(F.size()));
}

/// t(F, Gamma_mu) for mu the empirical measure of an interval representation
/// of G: i.i.d. draws may repeat an interval, and W(I,I) = 1, so this is the
/// density of G with all loops. Differs from t_hom_exact by O(1/n).
inline double t_hom_looped(const SmallGraph& F, const Graph& G) {
    if (G.empty()) throw domain_error("t_hom of an empty graph");
    const auto h = hom_count_looped(F, G);
    return static_cast<double>(h) / std::pow(static_cast<double>(G.size()), static_cast<double>(F.size()));
}

// ---------------------------------------------------------------------------
// Induced densities.

/// Calls visit(code) for every k-subset of V(G), where code is the edge code
/// of the induced subgraph with subset vertices relabeled 0..k-1 in order.
template <class Visit>
void for_each_induced_code(const Graph& G, std::size_t k, Visit&& visit) {
    const std::size_t n = G.size();
    if (k > n) return;
    std::array<std::size_t, SmallGraph::max_vertices> chosen{};
    auto rec = [&](auto&& self, std::size_t level, std::size_t start, std::uint32_t code) -> void {
        if (level == k) {
            visit(code);
            return;
        }
        const std::size_t base = level * (level - 1) / 2;
        for (std::size_t v = start; v + (k - level) <= n; ++v) {
            std::uint32_t c = code;
            for (std::size_t q = 0; q < level; ++q)
                if (G.has_edge(chosen[q], v)) c |= std::uint32_t{1} << (base + q);
            chosen[level] = v;
            self(self, level + 1, v + 1, c);
        }
    };
    rec(rec, 0, 0, 0);
}

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Counts of induced labeled k-vertex subgraphs by edge code (k <= 6).
class InducedCensus {
public:
    InducedCensus(const Graph& G, std::size_t k) : k_(k), subsets_(binomial(G.size(), k)) {
        if (k > 6) throw size_error("census is limited to 6 vertices");
        if (G.size() < k) throw size_error("graph smaller than pattern");
        counts_.assign(std::size_t{1} << (k * (k - 1) / 2), 0);
        for_each_induced_code(G, k, [&](std::uint32_t c) { ++counts_[c]; });
    }

    std::size_t pattern_size() const noexcept { return k_; }

    double fraction(const SmallGraph& F) const {
        if (F.size() != k_) throw size_error("pattern size differs from census size");
        std::uint64_t hits = 0;
        for (auto c : F.orbit_codes()) hits += counts_[c];
        return static_cast<double>(hits) / static_cast<double>(subsets_);
    }

private:
    std::size_t k_;
    std::uint64_t subsets_;
    std::vector<std::uint64_t> counts_;
};

/// Fraction of |F|-subsets of V(G) inducing a copy of F.
inline double t_ind_exact(const SmallGraph& F, const Graph& G) {
    const std::size_t k = F.size();
    if (G.size() < k) throw size_error("t_ind needs |G| >= |F|");
    if (k <= 6) return InducedCensus(G, k).fraction(F);
    const auto orbit = F.orbit_codes();
    const auto edges = static_cast<int>(F.edge_count());
    std::uint64_t hits = 0;
    for_each_induced_code(G, k, [&](std::uint32_t c) {
        if (std::popcount(c) == edges && std::binary_search(orbit.begin(), orbit.end(), c)) ++hits;
    });
    return static_cast<double>(hits) / static_cast<double>(binomial(G.size(), k));
}

// ---------------------------------------------------------------------------
// Monte Carlo densities against a measure.

/// Mean of prod_{ij in E(F)} W(X_i, X_j) over i.i.d. |F|-tuples.
template <Sampler S, class Kernel = IntervalKernel>
DensityEstimate t_hom_mc(const SmallGraph& F, const S& model, std::size_t samples,
                         std::uint64_t seed, Kernel kernel = {}) {
    if (samples == 0) throw parameter_error("t_hom_mc needs samples >= 1");
    Rng rng(seed);
    const auto edges = F.edges();
    using Obj = std::decay_t<decltype(model(rng))>;
    std::array<Obj, SmallGraph::max_vertices> x{};
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t v = 0; v < F.size(); ++v) x[v] = model(rng);
        bool all = true;
        for (const auto& [u, v] : edges) {
            if (!kernel(x[u], x[v])) {
                all = false;
                break;
            }
        }
        hits += all ? 1 : 0;
    }
    const double m = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / m;
    const double var = samples > 1 ? p * (1.0 - p) * m / (m - 1.0) : 0.0;
    return {p, std::sqrt(var / m), samples};
}

/// W_1(X) = P(W(X, Z) = 1), Z ~ model, for a pinned X.
template <Sampler S, class Obj, class Kernel = IntervalKernel>
DensityEstimate conditional_degree(const S& model, const Obj& X, std::size_t samples,
                                   std::uint64_t seed, Kernel kernel = {}) {
    if (samples == 0) throw parameter_error("conditional_degree needs samples >= 1");
    Rng rng(seed);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) hits += kernel(X, model(rng)) ? 1 : 0;
    const double m = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / m;
    const double var = samples > 1 ? p * (1.0 - p) * m / (m - 1.0) : 0.0;
    return {p, std::sqrt(var / m), samples};
}

/// Limit degree distribution: `outer` draws X, each with W_1(X) estimated
/// from `inner` fresh draws.
template <Sampler S, class Kernel = IntervalKernel>
EmpiricalDistribution degree_profile(const S& model, std::size_t outer, std::size_t inner,
                                     std::uint64_t seed, Kernel kernel = {}) {
    if (outer == 0 || inner == 0) throw parameter_error("degree_profile needs outer, inner >= 1");
    Rng rng(seed);
    std::vector<double> values;
    values.reserve(outer);
    for (std::size_t o = 0; o < outer; ++o) {
        const auto X = model(rng);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < inner; ++i) hits += kernel(X, model(rng)) ? 1 : 0;
        values.push_back(static_cast<double>(hits) / static_cast<double>(inner));
    }
    return EmpiricalDistribution(std::move(values));
}

/// Normalized degree distribution d_i / n of a finite graph.
inline EmpiricalDistribution degree_distribution(const Graph& G) {
    std::vector<double> v;
    v.reserve(G.size());
    const auto n = static_cast<double>(G.size());
    for (std::size_t i = 0; i < G.size(); ++i) v.push_back(static_cast<double>(G.degree(i)) / n);
    return EmpiricalDistribution(std::move(v));
}

// ---------------------------------------------------------------------------
// Density vectors and the limit-equivalence test.

/// One entry per probe_family() graph, in family order.
using DensityVector = std::vector<DensityEstimate>;

inline DensityVector density_vector(const Graph& G) {
    DensityVector out;
    for (const auto& p : probe_family()) out.push_back({t_hom_exact(p.graph, G), 0.0, 0});
    return out;
}

/// Probe j is estimated from the stream derive_seed(seed, j).
template <Sampler S, class Kernel = IntervalKernel>
DensityVector density_vector(const S& model, std::size_t budget, std::uint64_t seed,
                             Kernel kernel = {}) {
    if (budget == 0) throw parameter_error("density_vector needs budget >= 1");
    DensityVector out;
    const auto& probes = probe_family();
    for (std::size_t j = 0; j < probes.size(); ++j) {
        out.push_back(t_hom_mc(probes[j].graph, model, budget, derive_seed(seed, j), kernel));
    }
    return out;
}

inline void write_density_csv(std::ostream& out, const DensityVector& v) {
    out << "probe_id,probe_edges,value,stderr,samples\n";
    const auto& probes = probe_family();
    for (std::size_t j = 0; j < probes.size(); ++j) {
        out << probes[j].name << ',' << edge_string(probes[j].graph) << ','
            << detail::format_double(v[j].value) << ',' << detail::format_double(v[j].std_error)
            << ',' << v[j].samples << '\n';
    }
}

/// Rejection threshold in combined standard errors.
inline constexpr double equivalence_z = 4.0;

struct EquivalenceVerdict {
    bool consistent = true;
    /// First probe (family order) whose gap exceeds the threshold.
    std::optional<std::size_t> witness;
    double gap = 0.0;  // m1 - m2 at the witness
    DensityVector first;
    DensityVector second;

    const std::string& witness_name() const { return probe_family().at(witness.value()).name; }
};

/// Compares two density vectors probe by probe. Distinguished when some
/// |gap| exceeds 4 combined standard errors. Consistency is a necessary
/// condition for equal limits only; it never certifies equality.
inline EquivalenceVerdict compare_density_vectors(DensityVector a, DensityVector b) {
    EquivalenceVerdict v;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double gap = a[j].value - b[j].value;
        const double se = std::hypot(a[j].std_error, b[j].std_error);
        if (std::abs(gap) > equivalence_z * se) {
            v.consistent = false;
            v.witness = j;
            v.gap = gap;
            break;
        }
    }
    v.first = std::move(a);
    v.second = std::move(b);
    return v;
}

template <Sampler S1, Sampler S2, class Kernel = IntervalKernel>
EquivalenceVerdict limit_equiv_test(const S1& m1, const S2& m2, std::size_t budget,
                                    std::uint64_t seed, Kernel kernel = {}) {
    if (budget < 1000) throw parameter_error("limit_equiv_test needs budget >= 1000");
    return compare_density_vectors(density_vector(m1, budget, derive_seed(seed, 1), kernel),
                                   density_vector(m2, budget, derive_seed(seed, 2), kernel));
}

}  // namespace igl
