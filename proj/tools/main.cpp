// igl: batch experiments on random interval graphs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "igl/igl.hpp"
#include "igl/io.hpp"
#include "igl/model_spec.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int exit_io = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> models;
    std::string model2;
    std::vector<std::size_t> ns;
    std::vector<std::uint64_t> seeds;
    std::size_t budget = 100000;
    std::size_t inner = 1000;
    std::string out = "-";
    std::string format = "csv";
    std::string graph;
    bool timing = false;
};

/// Output sink: stdout for "-", otherwise a file opened up front so an
/// unwritable path fails before any work is done.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw io_error("cannot write '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void close() {
        stream().flush();
        if (!stream()) throw io_error("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string fmt(double v) { return igl::detail::format_double(v); }

/// RFC 4180 quoting for fields that contain a separator or quote.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

igl::MeasureModel model_or_usage(const std::string& spec) {
    try {
        return igl::parse_model(spec);
    } catch (const igl::parameter_error& e) {
        throw usage_error(e.what());
    }
}

void require_seeds(const Options& o) {
    if (o.seeds.empty()) throw usage_error("at least one --seed is required");
}

void require_grid(const Options& o) {
    require_seeds(o);
    if (o.ns.empty()) throw usage_error("at least one --n is required");
}

std::uint64_t single_seed(const Options& o) {
    require_seeds(o);
    if (o.seeds.size() != 1) throw usage_error("this command takes exactly one --seed");
    return o.seeds.front();
}

const std::string& single_model(const Options& o) {
    if (o.models.size() != 1) throw usage_error("this command takes exactly one --model");
    return o.models.front();
}

/// Reads a graph from a JSON graph file, an edge list ("n <count>" header) or
/// an interval list.
igl::Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    if (fs::path(path).extension() == ".json") return igl::read_graph_json(in).graph;
    std::string first;
    in >> first;
    in.clear();
    in.seekg(0);
    if (first == "n") return igl::read_edge_list(in);
    return igl::intersection_graph_sweep(igl::read_intervals(in));
}

// ---------------------------------------------------------------------------

int cmd_generate(const Options& o) {
    const auto& spec = single_model(o);
    const auto model = model_or_usage(spec);
    require_grid(o);
    const fs::path dir = o.out == "-" ? fs::path(".") : fs::path(o.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create directory '" + dir.string() + "'");
    for (auto n : o.ns) {
        for (auto seed : o.seeds) {
            const auto g = igl::generate(model, n, igl::cell_seed(spec, n, seed));
            const std::string stem = "graph_n" + std::to_string(n) + "_s" + std::to_string(seed);
            auto write = [&](const std::string& ext, auto&& body) {
                const auto path = (dir / (stem + ext)).string();
                Sink sink(path);
                body(sink.stream());
                sink.close();
            };
            write(".intervals", [&](std::ostream& out) { igl::write_intervals(out, g.intervals); });
            write(".edges", [&](std::ostream& out) { igl::write_edge_list(out, g.graph); });
            write(".json", [&](std::ostream& out) { igl::write_graph_json(out, g); });
        }
    }
    return 0;
}

int cmd_sweep(const Options& o) {
    if (o.models.empty()) throw usage_error("at least one --model is required");
    std::vector<igl::MeasureModel> models;
    for (const auto& m : o.models) models.push_back(model_or_usage(m));
    require_grid(o);
    for (auto n : o.ns) {
        if (n == 0) throw usage_error("sweep needs n >= 1");
    }
    Sink sink(o.out);
    auto& out = sink.stream();
    const bool csv = o.format == "csv";
    json rows = json::array();
    if (csv) {
        out << "model_id,n,seed,edges,edge_density,omega,chi,omega_over_n,chi_over_n,max_degree_full,"
               "min_degree_over_sqrt_n"
            << (o.timing ? ",runtime_ms" : "") << '\n';
    }
    for (std::size_t k = 0; k < models.size(); ++k) {
        for (auto n : o.ns) {
            for (auto seed : o.seeds) {
                const auto t0 = std::chrono::steady_clock::now();
                const auto s = igl::sample(models[k], n, igl::cell_seed(o.models[k], n, seed));
                const auto deg = igl::interval_degrees(s);
                std::size_t twice = 0;
                for (auto d : deg) twice += d;
                const auto omega = igl::clique_number(s).omega;
                const auto chi = igl::color_count(igl::chromatic_coloring(s));
                const auto [dmin, dmax] = std::minmax_element(deg.begin(), deg.end());
                const double nn = static_cast<double>(n);
                const double ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                const std::size_t edges = twice / 2;
                const double density = static_cast<double>(twice) / (nn * nn);
                const bool full = *dmax + 1 == n;
                const double min_scaled = static_cast<double>(*dmin) / std::sqrt(nn);
                if (csv) {
                    out << csv_field(o.models[k]) << ',' << n << ',' << seed << ',' << edges << ',' << fmt(density) << ','
                        << omega << ',' << chi << ',' << fmt(static_cast<double>(omega) / nn) << ','
                        << fmt(static_cast<double>(chi) / nn) << ',' << (full ? 1 : 0) << ',' << fmt(min_scaled);
                    if (o.timing) out << ',' << fmt(ms);
                    out << '\n';
                } else {
                    json row = {{"model_id", o.models[k]},
                                {"n", n},
                                {"seed", seed},
                                {"edges", edges},
                                {"edge_density", density},
                                {"omega", omega},
                                {"chi", chi},
                                {"omega_over_n", static_cast<double>(omega) / nn},
                                {"chi_over_n", static_cast<double>(chi) / nn},
                                {"max_degree_full", full},
                                {"min_degree_over_sqrt_n", min_scaled}};
                    if (o.timing) row["runtime_ms"] = ms;
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    if (!csv) out << rows.dump(2) << '\n';
    sink.close();
    return 0;
}

json density_json(const igl::DensityVector& v) {
    json arr = json::array();
    const auto& probes = igl::probe_family();
    for (std::size_t j = 0; j < v.size(); ++j) {
        arr.push_back({{"probe_id", probes[j].name},
                       {"probe_edges", igl::edge_string(probes[j].graph)},
                       {"value", v[j].value},
                       {"stderr", v[j].std_error},
                       {"samples", v[j].samples}});
    }
    return arr;
}

int cmd_densities(const Options& o) {
    igl::DensityVector v;
    if (!o.graph.empty()) {
        if (!o.models.empty()) throw usage_error("give either --graph or --model, not both");
        const auto g = read_graph_file(o.graph);
        if (g.empty()) throw usage_error("densities of an empty graph are undefined");
        Sink sink(o.out);
        v = igl::density_vector(g);
        if (o.format == "csv") {
            igl::write_density_csv(sink.stream(), v);
        } else {
            sink.stream() << density_json(v).dump(2) << '\n';
        }
        sink.close();
        return 0;
    }
    const auto& spec = single_model(o);
    const auto model = model_or_usage(spec);
    const auto seed = single_seed(o);
    if (o.budget == 0) throw usage_error("--budget must be >= 1");
    Sink sink(o.out);
    v = igl::density_vector(model, o.budget, igl::cell_seed(spec, 0, seed));
    if (o.format == "csv") {
        igl::write_density_csv(sink.stream(), v);
    } else {
        sink.stream() << density_json(v).dump(2) << '\n';
    }
    sink.close();
    return 0;
}

void write_distribution(Sink& sink, const Options& o, const igl::EmpiricalDistribution& d) {
    const auto values = d.values();
    json arr = json::array();
    if (o.format == "csv") sink.stream() << "value,cdf\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
        const double cdf = static_cast<double>(i + 1) / static_cast<double>(values.size());
        if (o.format == "csv") {
            sink.stream() << fmt(values[i]) << ',' << fmt(cdf) << '\n';
        } else {
            arr.push_back({{"value", values[i]}, {"cdf", cdf}});
        }
    }
    if (o.format != "csv") sink.stream() << arr.dump(2) << '\n';
}

int cmd_degree_dist(const Options& o) {
    const auto& spec = single_model(o);
    const auto model = model_or_usage(spec);
    const auto seed = single_seed(o);
    if (o.ns.size() > 1) throw usage_error("degree-dist takes at most one --n");
    igl::EmpiricalDistribution d;
    if (!o.ns.empty()) {
        const auto n = o.ns.front();
        if (n == 0) throw usage_error("degree-dist needs n >= 1");
        const auto s = igl::sample(model, n, igl::cell_seed(spec, n, seed));
        std::vector<double> v;
        for (auto deg : igl::interval_degrees(s)) v.push_back(static_cast<double>(deg) / static_cast<double>(n));
        d = igl::EmpiricalDistribution(std::move(v));
    } else {
        if (o.budget == 0 || o.inner == 0) throw usage_error("--budget and --inner must be >= 1");
        d = igl::degree_profile(model, o.budget, o.inner, igl::cell_seed(spec, 0, seed));
    }
    Sink sink(o.out);
    write_distribution(sink, o, d);
    sink.close();
    return 0;
}

int cmd_compare(const Options& o) {
    const auto& spec1 = single_model(o);
    if (o.model2.empty()) throw usage_error("compare needs --model2");
    const auto m1 = model_or_usage(spec1);
    const auto m2 = model_or_usage(o.model2);
    const auto seed = single_seed(o);
    if (o.budget < 1000) throw usage_error("compare needs --budget >= 1000");
    Sink sink(o.out);
    const auto v = igl::limit_equiv_test(m1, m2, o.budget, seed);
    const auto& probes = igl::probe_family();
    if (o.format == "csv") {
        auto& out = sink.stream();
        out << "probe_id,probe_edges,value1,stderr1,value2,stderr2,gap,z\n";
        for (std::size_t j = 0; j < probes.size(); ++j) {
            const double gap = v.first[j].value - v.second[j].value;
            const double se = std::hypot(v.first[j].std_error, v.second[j].std_error);
            out << probes[j].name << ',' << igl::edge_string(probes[j].graph) << ',' << fmt(v.first[j].value) << ','
                << fmt(v.first[j].std_error) << ',' << fmt(v.second[j].value) << ',' << fmt(v.second[j].std_error)
                << ',' << fmt(gap) << ',' << (se > 0 ? fmt(gap / se) : "") << '\n';
        }
    } else {
        json gaps = json::array();
        for (std::size_t j = 0; j < probes.size(); ++j) {
            gaps.push_back({{"probe_id", probes[j].name},
                            {"gap", v.first[j].value - v.second[j].value},
                            {"combined_stderr", std::hypot(v.first[j].std_error, v.second[j].std_error)}});
        }
        json j = {{"model1", spec1},
                  {"model2", o.model2},
                  {"budget", o.budget},
                  {"seed", seed},
                  {"threshold_z", igl::equivalence_z},
                  {"verdict", v.consistent ? "consistent" : "distinguished"},
                  {"witness", v.witness ? json(v.witness_name()) : json(nullptr)},
                  {"witness_gap", v.witness ? json(v.gap) : json(nullptr)},
                  {"densities1", density_json(v.first)},
                  {"densities2", density_json(v.second)},
                  {"gaps", gaps}};
        sink.stream() << j.dump(2) << '\n';
    }
    sink.close();
    return 0;
}

int cmd_battery(const Options& o) {
    struct Cell {
        std::string model_id;
        std::size_t n;
        std::optional<std::uint64_t> seed;
        igl::BatteryReport report;
    };
    std::vector<Cell> cells;
    auto run = [](const igl::Graph& g) {
        try {
            return igl::forbidden_battery(g);
        } catch (const igl::size_error& e) {
            throw usage_error(e.what());
        }
    };
    if (!o.graph.empty()) {
        if (!o.models.empty()) throw usage_error("give either --graph or --model, not both");
        const auto g = read_graph_file(o.graph);
        cells.push_back({o.graph, g.size(), std::nullopt, run(g)});
    } else {
        const auto& spec = single_model(o);
        const auto model = model_or_usage(spec);
        require_grid(o);
        for (auto n : o.ns) {
            for (auto seed : o.seeds) {
                cells.push_back({spec, n, seed, run(igl::generate(model, n, igl::cell_seed(spec, n, seed)).graph)});
            }
        }
    }
    Sink sink(o.out);
    auto& out = sink.stream();
    if (o.format == "csv") {
        out << "model_id,n,seed";
        for (const auto& p : igl::battery_graphs()) out << ",t_ind_" << p.name;
        out << ",all_zero,max_cycle\n";
        for (const auto& c : cells) {
            out << csv_field(c.model_id) << ',' << c.n << ',' << (c.seed ? std::to_string(*c.seed) : "");
            for (const auto& e : c.report.entries) out << ',' << fmt(e.t_ind);
            out << ',' << (c.report.all_zero() ? 1 : 0) << ',' << igl::BatteryReport::max_cycle << '\n';
        }
    } else {
        json arr = json::array();
        for (const auto& c : cells) {
            json t = json::object();
            for (const auto& e : c.report.entries) t[e.name] = e.t_ind;
            arr.push_back({{"model_id", c.model_id},
                           {"n", c.n},
                           {"seed", c.seed ? json(*c.seed) : json(nullptr)},
                           {"t_ind", t},
                           {"all_zero", c.report.all_zero()},
                           {"max_cycle", igl::BatteryReport::max_cycle}});
        }
        out << arr.dump(2) << '\n';
    }
    sink.close();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random interval graphs: generation, densities, observables and limit comparison."};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "Output file ('-' for stdout); a directory for generate");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--model", o.models, "Model spec, e.g. uniform, line:0.3, block:0.3,0.7, @model.json");
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--n", o.ns, "Vertex count (repeatable)");
        sub->add_option("--seed", o.seeds, "Seed (repeatable)");
    };

    auto* generate = app.add_subcommand("generate", "Write interval, edge-list and JSON files per (n, seed)");
    add_model(generate);
    add_grid(generate);
    add_common(generate);

    auto* sweep = app.add_subcommand("sweep", "One CSV row of observables per (model, n, seed)");
    add_model(sweep);
    add_grid(sweep);
    add_common(sweep);
    sweep->add_flag("--timing", o.timing, "Append a runtime_ms column (not reproducible)");

    auto* densities = app.add_subcommand("densities", "Probe-family homomorphism densities");
    add_model(densities);
    densities->add_option("--seed", o.seeds, "Seed");
    densities->add_option("--budget", o.budget, "Monte Carlo samples per probe");
    densities->add_option("--graph", o.graph, "Graph file (.json, edge list or interval list) instead of a model");
    add_common(densities);

    auto* degree = app.add_subcommand("degree-dist", "Degree distribution of G(n, mu) or of the limit");
    add_model(degree);
    add_grid(degree);
    degree->add_option("--budget", o.budget, "Outer draws for the limit profile");
    degree->add_option("--inner", o.inner, "Inner draws per outer draw");
    add_common(degree);

    auto* compare = app.add_subcommand("compare", "Test two models for a common graph limit");
    add_model(compare);
    compare->add_option("--model2", o.model2, "Second model spec");
    compare->add_option("--seed", o.seeds, "Seed");
    compare->add_option("--budget", o.budget, "Monte Carlo samples per probe (>= 1000)");
    add_common(compare);

    auto* battery = app.add_subcommand("battery", "Forbidden induced subgraph densities");
    add_model(battery);
    add_grid(battery);
    battery->add_option("--graph", o.graph, "Graph file instead of a model");
    add_common(battery);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }
    if (compare->parsed() && compare->count("--format") == 0) o.format = "json";

    try {
        if (generate->parsed()) return cmd_generate(o);
        if (sweep->parsed()) return cmd_sweep(o);
        if (densities->parsed()) return cmd_densities(o);
        if (degree->parsed()) return cmd_degree_dist(o);
        if (compare->parsed()) return cmd_compare(o);
        if (battery->parsed()) return cmd_battery(o);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const igl::format_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const igl::parameter_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
