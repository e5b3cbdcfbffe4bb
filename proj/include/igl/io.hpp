#pragma once

#include <istream>
#include <ostream>

#include <json.hpp>

#include "igl/errors.hpp"
#include "igl/graph.hpp"
#include "igl/interval_graph.hpp"

namespace igl {

/// {"n": ..., "edges": [[i,j], ...], "intervals": [[a,b], ...]}
inline nlohmann::json graph_to_json(const LabeledIntervalGraph& g) {
    nlohmann::json j;
    j["n"] = g.graph.size();
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : g.graph.edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    auto intervals = nlohmann::json::array();
    for (const auto& I : g.intervals) intervals.push_back({I.left, I.right});
    j["intervals"] = std::move(intervals);
    return j;
}

inline void write_graph_json(std::ostream& out, const LabeledIntervalGraph& g) {
    out << graph_to_json(g).dump() << '\n';
}

inline LabeledIntervalGraph read_graph_json(std::istream& in) {
    try {
        nlohmann::json j;
        in >> j;
        const auto n = j.at("n").get<std::size_t>();
        GraphBuilder b(n);
        for (const auto& e : j.at("edges")) b.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        LabeledIntervalGraph g{std::move(b).build(), {}};
        if (j.contains("intervals")) {
            for (const auto& p : j.at("intervals")) g.intervals.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
            if (g.intervals.size() != n) throw format_error("interval count differs from n");
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("malformed graph JSON: ") + e.what());
    } catch (const parameter_error& e) {
        throw format_error(e.what());
    }
}

}  // namespace igl
