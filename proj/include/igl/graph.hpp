#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "igl/errors.hpp"

namespace igl {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

constexpr std::size_t words_for(std::size_t n) noexcept { return (n + word_bits - 1) / word_bits; }

class GraphBuilder;

/// Simple undirected graph on 0..n-1 stored as n rows of n-bit sets.
/// Immutable once built; symmetric and irreflexive by construction.
class Graph {
public:
    Graph() = default;

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }
    std::size_t words() const noexcept { return words_; }

    bool has_edge(std::size_t i, std::size_t j) const noexcept {
        return (bits_[i * words_ + j / word_bits] >> (j % word_bits)) & 1U;
    }

    std::span<const Word> row(std::size_t i) const noexcept {
        return {bits_.data() + i * words_, words_};
    }

    std::size_t degree(std::size_t i) const noexcept {
        std::size_t d = 0;
        for (Word w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
        return d;
    }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> d(n_);
        for (std::size_t i = 0; i < n_; ++i) d[i] = degree(i);
        return d;
    }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (Word w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
        return twice / 2;
    }

    /// Edges as (i,j) with i<j in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                if (has_edge(i, j)) out.emplace_back(i, j);
            }
        }
        return out;
    }

    template <class F>
    void for_each_neighbor(std::size_t i, F&& f) const {
        const auto r = row(i);
        for (std::size_t w = 0; w < words_; ++w) {
            Word bits = r[w];
            while (bits != 0) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * word_bits + b);
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const Graph&, const Graph&) = default;

    static Graph complete(std::size_t n);
    static Graph edgeless(std::size_t n);
    static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) {
        g_.n_ = n;
        g_.words_ = words_for(n);
        g_.bits_.assign(n * g_.words_, 0);
    }

    std::size_t size() const noexcept { return g_.n_; }

    void add_edge(std::size_t i, std::size_t j) {
        if (i >= g_.n_ || j >= g_.n_) throw parameter_error("edge endpoint out of range");
        if (i == j) throw parameter_error("self-loop " + std::to_string(i));
        set(i, j);
        set(j, i);
    }

    /// OR a bit row into row i without mirroring; call symmetrize() before build().
    void or_row(std::size_t i, std::span<const Word> bits) {
        Word* r = g_.bits_.data() + i * g_.words_;
        for (std::size_t w = 0; w < g_.words_; ++w) r[w] |= bits[w];
    }

    void symmetrize() {
        for (std::size_t i = 0; i < g_.n_; ++i) {
            g_.for_each_neighbor(i, [&](std::size_t j) { set(j, i); });
        }
    }

    Graph build() && {
        for (std::size_t i = 0; i < g_.n_; ++i) {
            g_.bits_[i * g_.words_ + i / word_bits] &= ~(Word{1} << (i % word_bits));
        }
        return std::move(g_);
    }

private:
    void set(std::size_t i, std::size_t j) {
        g_.bits_[i * g_.words_ + j / word_bits] |= Word{1} << (j % word_bits);
    }

    Graph g_;
};

inline Graph Graph::complete(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b.add_edge(i, j);
    return std::move(b).build();
}

inline Graph Graph::edgeless(std::size_t n) { return std::move(GraphBuilder(n)).build(); }

inline Graph Graph::from_edges(std::size_t n,
                               std::span<const std::pair<std::size_t, std::size_t>> edges) {
    GraphBuilder b(n);
    for (const auto& [i, j] : edges) b.add_edge(i, j);
    return std::move(b).build();
}

/// Edge-list text format: "n <count>" then one "i j" line per edge, i<j.
inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.size() << '\n';
    for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

inline Graph read_edge_list(std::istream& in) {
    std::string tag;
    std::size_t n = 0;
    if (!(in >> tag >> n) || tag != "n") throw format_error("edge list must start with 'n <count>'");
    GraphBuilder b(n);
    std::size_t i = 0;
    std::size_t j = 0;
    while (in >> i >> j) b.add_edge(i, j);
    if (!in.eof()) throw format_error("malformed edge line");
    return std::move(b).build();
}

}  // namespace igl
