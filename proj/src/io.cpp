#include "drgg/io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace drgg {

namespace {

constexpr const char* kGraphVersion = "drgg-graph-1";

std::string mode_name(RadiusMode m) {
    return m == RadiusMode::pareto ? "pareto" : "fixed_r0";
}

RadiusMode mode_from_name(const std::string& s) {
    if (s == "pareto") return RadiusMode::pareto;
    if (s == "fixed_r0") return RadiusMode::fixed_r0;
    throw parse_error("unknown radius_mode '" + s + "'");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("'" + path.string() + "': " + e.what());
    }
}

}  // namespace

void write_graph(const TorusPointSet& pts, const DiGraph& g,
                 const std::filesystem::path& path, bool include_edges) {
    json doc;
    doc["version"] = kGraphVersion;
    doc["params"] = {{"n", pts.params.n},
                     {"alpha", pts.params.alpha},
                     {"dim", pts.params.dim},
                     {"seed", pts.params.seed},
                     {"radius_mode", mode_name(pts.params.radius_mode)}};
    doc["r0"] = pts.r0;
    json positions = json::array();
    for (std::int64_t v = 0; v < pts.params.n; ++v) {
        json row = json::array();
        for (double c : pts.point(v)) row.push_back(c);
        positions.push_back(std::move(row));
    }
    doc["positions"] = std::move(positions);
    doc["radii"] = pts.radii;
    if (include_edges) {
        json edges = json::array();
        for (VertexId u = 0; u < g.n; ++u)
            for (VertexId v : g.out_adj[u]) edges.push_back(json::array({u, v}));
        doc["edges"] = std::move(edges);
    }
    write_text(path, doc.dump(2) + "\n");
}

std::pair<TorusPointSet, DiGraph> read_graph(const std::filesystem::path& path) {
    const json doc = load_json(path);
    try {
        if (doc.at("version").get<std::string>() != kGraphVersion)
            throw parse_error("unsupported graph file version");
        const auto& jp = doc.at("params");
        TorusPointSet pts;
        pts.params.n = jp.at("n").get<std::int64_t>();
        pts.params.alpha = jp.at("alpha").get<double>();
        pts.params.dim = jp.at("dim").get<int>();
        pts.params.seed = jp.at("seed").get<std::uint64_t>();
        pts.params.radius_mode = mode_from_name(jp.at("radius_mode").get<std::string>());
        pts.r0 = doc.at("r0").get<double>();

        const auto& positions = doc.at("positions");
        const auto& radii = doc.at("radii");
        const std::int64_t n = pts.params.n;
        const int d = pts.params.dim;
        if (static_cast<std::int64_t>(positions.size()) != n ||
            static_cast<std::int64_t>(radii.size()) != n)
            throw integrity_error("positions/radii size does not match n");

        pts.coords.reserve(n * d);
        for (const auto& row : positions) {
            if (static_cast<int>(row.size()) != d)
                throw integrity_error("position row has wrong dimension");
            for (const auto& c : row) {
                const double x = c.get<double>();
                if (!(x >= 0.0 && x < 1.0))
                    throw integrity_error("coordinate outside [0,1)");
                pts.coords.push_back(x);
            }
        }
        const double expected_r0 = min_radius(n, d);
        if (std::fabs(pts.r0 - expected_r0) > 1e-9 * expected_r0)
            throw integrity_error("stored r0 does not match (ln n/(V_d n))^(1/d)");
        for (const auto& r : radii) {
            const double x = r.get<double>();
            if (!(x >= pts.r0 * (1.0 - 1e-12) && x <= 0.5))
                throw integrity_error("radius outside [r0, 1/2]");
            pts.radii.push_back(x);
        }

        DiGraph g;
        if (doc.contains("edges")) {
            std::vector<std::pair<VertexId, VertexId>> edges;
            edges.reserve(doc.at("edges").size());
            for (const auto& e : doc.at("edges")) {
                if (e.size() != 2) throw integrity_error("edge entry must be a pair");
                edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
            }
            try {
                g = DiGraph::from_edges(n, edges);
            } catch (const invalid_input& e) {
                throw integrity_error(e.what());
            }
        } else {
            g = build_edges_grid(pts);
        }
        return {std::move(pts), std::move(g)};
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("'" + path.string() + "': " + e.what());
    }
}

LabeledEdgeList read_edge_list(const std::filesystem::path& path, EdgeFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path.string() + "'");
    const char sep = format == EdgeFormat::tsv ? '\t' : ',';

    LabeledEdgeList out;
    std::map<std::string, VertexId> intern;
    std::set<std::pair<VertexId, VertexId>> seen;
    auto id_of = [&](const std::string& label) {
        auto [it, inserted] = intern.try_emplace(label, static_cast<VertexId>(out.labels.size()));
        if (inserted) out.labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::int64_t lineno = 0;
    bool any_data = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto pos = line.find(sep);
        if (pos == std::string::npos || line.find(sep, pos + 1) != std::string::npos ||
            pos == 0 || pos == line.size() - 1)
            throw parse_error(path.string() + ":" + std::to_string(lineno) +
                              ": expected 'source" + (sep == '\t' ? std::string("<TAB>") : std::string(",")) +
                              "target'");
        any_data = true;
        const VertexId s = id_of(line.substr(0, pos));
        const VertexId t = id_of(line.substr(pos + 1));
        if (s == t) {
            ++out.self_loops_dropped;
            continue;
        }
        if (!seen.emplace(s, t).second) {
            ++out.duplicates_collapsed;
            continue;
        }
        out.edges.emplace_back(s, t);
    }
    if (!any_data) throw parse_error(path.string() + ": empty edge list");
    return out;
}

void write_edge_list(const LabeledEdgeList& list, const std::filesystem::path& path,
                     EdgeFormat format) {
    const char sep = format == EdgeFormat::tsv ? '\t' : ',';
    std::ostringstream body;
    for (auto [s, t] : list.edges) body << list.labels[s] << sep << list.labels[t] << '\n';
    write_text(path, body.str());
}

DiGraph to_digraph(const LabeledEdgeList& list, bool reverse) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(list.edges.size());
    for (auto [s, t] : list.edges)
        edges.emplace_back(reverse ? t : s, reverse ? s : t);
    return DiGraph::from_edges(static_cast<std::int64_t>(list.labels.size()), edges);
}

namespace {

json hist_to_json(const DegreeHistogram& h) {
    json arr = json::array();
    for (auto [k, c] : h.counts) arr.push_back(json::array({k, c}));
    return arr;
}

}  // namespace

json stats_to_json(const StatsReport& r) {
    json doc;
    doc["type"] = "stats";
    doc["n"] = r.n;
    doc["edge_count"] = r.edge_count;
    doc["in_degree_histogram"] = hist_to_json(r.in_hist);
    doc["out_degree_histogram"] = hist_to_json(r.out_hist);
    doc["triangles"] = {{"type1_labeled", r.triangles.type1_labeled},
                        {"type2_labeled", r.triangles.type2_labeled}};
    doc["clustering_in_excl"] = r.clustering_in_excl;
    doc["clustering_in_all"] = r.clustering_in_all;
    doc["clustering_undirected"] = r.clustering_undirected;
    doc["reciprocity"] = r.reciprocity ? json(*r.reciprocity) : json(nullptr);
    doc["path_mode"] =
        r.path_mode == PathMode::directed ? "directed" : "undirected_projection";
    doc["paths"] = {
        {"diameter", r.paths.diameter ? json(*r.paths.diameter) : json(nullptr)},
        {"diameter_exact", r.paths.diameter_exact},
        {"avg_path_length", r.paths.avg_path_length},
        {"reachable_pair_fraction", r.paths.reachable_pair_fraction},
        {"sources_used", r.paths.sources_used}};
    json hubs = json::array();
    for (const auto& h : r.hubs)
        hubs.push_back({{"vertex", h.vertex}, {"label", h.label}, {"indegree", h.indegree}});
    doc["hubs"] = std::move(hubs);
    return doc;
}

json theory_to_json(const TheoryReport& r) {
    json doc;
    doc["type"] = "theory";
    doc["n"] = r.n;
    doc["alpha"] = r.alpha;
    doc["dim"] = r.dim;
    doc["beta"] = r.beta;
    doc["r0"] = r.r0;
    doc["eta"] = r.eta;
    doc["z_exact"] = r.z_exact;
    doc["z_asymptotic"] = r.z_asymptotic;
    doc["z_correction_order"] = r.z_correction_order;
    doc["expected_edges"] = r.expected_edges;
    doc["indegree_exponent"] = r.indegree_exponent;
    doc["clustering_constant"] =
        r.clustering_constant ? json(*r.clustering_constant) : json(nullptr);
    doc["clustering_constant_mc"] =
        r.clustering_constant_mc ? json(*r.clustering_constant_mc) : json(nullptr);
    doc["clustering_limit_alpha_inf"] =
        r.clustering_limit_alpha_inf ? json(*r.clustering_limit_alpha_inf) : json(nullptr);
    doc["reciprocity_limit"] = r.reciprocity_limit;
    json paths = json::array();
    for (auto [k, v] : r.expected_paths) paths.push_back(json::array({k, v}));
    doc["expected_paths"] = std::move(paths);
    doc["path_threshold_k"] = r.path_threshold_k;
    return doc;
}

json fit_to_json(const FitResult& r) {
    json doc;
    doc["type"] = "fit";
    doc["beta_hat"] = r.beta_hat;
    doc["alpha_hat"] = r.alpha_hat;
    doc["z_hat"] = r.z_hat;
    doc["k_min"] = r.k_min;
    doc["goodness"] = r.goodness;
    doc["method"] = r.method == FitMethod::mle_tail ? "mle_tail" : "loglog_ls";
    return doc;
}

void write_report(const json& report, const std::filesystem::path& path) {
    write_text(path, report.dump(2) + "\n");
}

}  // namespace drgg
