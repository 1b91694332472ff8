// drgg: generate and analyze directed random geometric graphs.
//
// Exit codes: 0 success, 2 usage/input error, 3 infeasible model,
// 4 insufficient data.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <drgg/experiment.hpp>
#include <drgg/fit.hpp>
#include <drgg/io.hpp>
#include <drgg/theory.hpp>

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInfeasible = 3;
constexpr int kInsufficient = 4;

using drgg::json;

void write_or_print(const json& doc, const std::string& out) {
    if (out.empty()) std::cout << doc.dump(2) << "\n";
    else drgg::write_report(doc, out);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
}

drgg::EdgeFormat parse_format(const std::string& s) {
    if (s == "tsv") return drgg::EdgeFormat::tsv;
    if (s == "csv") return drgg::EdgeFormat::csv;
    throw drgg::invalid_input("format must be tsv or csv");
}

struct GraphInput {
    std::string graph_file;
    std::string edge_list;
    std::string format = "tsv";
    bool reverse = false;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option("--graph", graph_file, "graph file produced by generate");
        auto* e = cmd->add_option("--edge-list", edge_list, "labeled edge list (one edge per line)");
        cmd->add_option("--format", format, "edge-list format: tsv or csv")
            ->check(CLI::IsMember({"tsv", "csv"}));
        cmd->add_flag("--reverse", reverse, "flip the direction of every ingested edge");
        g->excludes(e);
    }

    // Loads the graph; labels is filled only for edge lists.
    drgg::DiGraph load(std::vector<std::string>* labels) const {
        if (!graph_file.empty()) return drgg::read_graph(graph_file).second;
        if (!edge_list.empty()) {
            const auto list = drgg::read_edge_list(edge_list, parse_format(format));
            if (labels) *labels = list.labels;
            return drgg::to_digraph(list, reverse);
        }
        throw drgg::invalid_input("supply --graph or --edge-list");
    }
};

int cmd_generate(std::int64_t n, double alpha, int dim, std::uint64_t seed, bool fixed_radius,
                 const std::string& out, bool no_edges, const std::string& export_edges,
                 const std::string& format) {
    drgg::ModelParams p{n, alpha, dim, seed,
                        fixed_radius ? drgg::RadiusMode::fixed_r0 : drgg::RadiusMode::pareto};
    const auto [pts, g] = drgg::generate(p);
    drgg::write_graph(pts, g, out, !no_edges);
    if (!export_edges.empty()) {
        drgg::LabeledEdgeList list;
        list.labels.reserve(g.n);
        for (std::int64_t v = 0; v < g.n; ++v) list.labels.push_back("v" + std::to_string(v));
        for (drgg::VertexId u = 0; u < g.n; ++u)
            for (drgg::VertexId v : g.out_adj[u]) list.edges.emplace_back(u, v);
        drgg::write_edge_list(list, export_edges, parse_format(format));
    }
    std::cerr << "wrote " << out << " (n=" << g.n << ", edges=" << g.edge_count << ")\n";
    return kOk;
}

// Largest weakly connected component, vertices relabeled in ascending order.
drgg::DiGraph giant_component(const drgg::DiGraph& g, std::vector<std::string>* labels) {
    std::vector<std::int32_t> comp(g.n, -1);
    std::int32_t ncomp = 0;
    std::vector<drgg::VertexId> stack;
    for (drgg::VertexId s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        stack.push_back(s);
        comp[s] = ncomp;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            for (const auto* adj : {&g.out_adj[u], &g.in_adj[u]})
                for (drgg::VertexId w : *adj)
                    if (comp[w] < 0) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
        }
        ++ncomp;
    }
    std::vector<std::int64_t> size(ncomp, 0);
    for (auto c : comp) ++size[c];
    const auto best =
        static_cast<std::int32_t>(std::max_element(size.begin(), size.end()) - size.begin());
    std::vector<drgg::VertexId> remap(g.n, -1);
    std::vector<std::string> kept_labels;
    std::int64_t next = 0;
    for (drgg::VertexId v = 0; v < g.n; ++v)
        if (comp[v] == best) {
            remap[v] = static_cast<drgg::VertexId>(next++);
            if (labels && !labels->empty()) kept_labels.push_back((*labels)[v]);
        }
    std::vector<std::pair<drgg::VertexId, drgg::VertexId>> edges;
    for (drgg::VertexId u = 0; u < g.n; ++u)
        if (remap[u] >= 0)
            for (drgg::VertexId v : g.out_adj[u]) edges.emplace_back(remap[u], remap[v]);
    if (labels) *labels = std::move(kept_labels);
    return drgg::DiGraph::from_edges(next, edges);
}

int cmd_stats(const GraphInput& input, bool undirected, std::int64_t sample_paths,
              std::int64_t hub_k, bool giant, const std::string& out) {
    std::vector<std::string> labels;
    drgg::DiGraph g = input.load(&labels);
    if (giant) g = giant_component(g, &labels);

    drgg::StatsOptions opt;
    opt.hub_k = hub_k;
    if (!labels.empty()) opt.labels = &labels;
    opt.paths.mode =
        undirected ? drgg::PathMode::undirected_projection : drgg::PathMode::directed;
    if (sample_paths > 0) {
        opt.paths.exact_threshold = 0;
        opt.paths.sample_sources = sample_paths;
    }
    write_or_print(drgg::stats_to_json(drgg::compute_stats(g, opt)), out);
    return kOk;
}

int cmd_theory(std::int64_t n, double alpha, int dim, std::int64_t max_path_k,
               const std::string& out) {
    write_or_print(drgg::theory_to_json(drgg::make_theory_report(n, alpha, dim, max_path_k)), out);
    return kOk;
}

int cmd_fit(const GraphInput& input, int dim, const std::string& method,
            const std::string& out) {
    const drgg::DiGraph g = input.load(nullptr);
    auto [in_hist, out_hist] = drgg::degree_histograms(g);
    const auto m = method == "ls" ? drgg::FitMethod::loglog_ls : drgg::FitMethod::mle_tail;
    const auto fit = drgg::fit_model(in_hist, out_hist, g.n, dim, m);

    // Reject fits whose tail KS exceeds the 5% significance band: the degree
    // distribution carries no usable power-law tail (e.g. fixed-radius graphs).
    std::int64_t tail = 0;
    for (auto [k, c] : in_hist.counts)
        if (k >= fit.k_min) tail += c;
    const double ks_crit = 1.36 / std::sqrt(static_cast<double>(tail));
    if (fit.goodness > ks_crit) {
        std::cerr << "no power-law tail: KS " << fit.goodness << " above the significance band "
                  << ks_crit << " (tail size " << tail << ", k_min " << fit.k_min << ")\n";
        return kInsufficient;
    }

    auto doc = drgg::fit_to_json(fit);
    doc["n"] = g.n;
    doc["dim"] = dim;
    doc["tail_size"] = tail;
    doc["ks_critical"] = ks_crit;
    write_or_print(doc, out);
    return kOk;
}

int cmd_experiment(const std::string& config_path) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw drgg::parse_error("cannot open '" + config_path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw drgg::parse_error("'" + config_path + "': " + e.what());
    }

    drgg::ExperimentConfig cfg;
    std::string summary_path, series_path;
    try {
        for (const auto& item : doc.at("configs"))
            cfg.configs.push_back({item.at("n").get<std::int64_t>(),
                                   item.at("alpha").get<double>(), item.at("dim").get<int>()});
        cfg.trials = doc.value("trials", std::int64_t{1});
        cfg.seed_base = doc.value("seed_base", std::uint64_t{0});
        const std::string mode = doc.value("path_mode", std::string("undirected"));
        if (mode == "undirected") cfg.path_mode = drgg::PathMode::undirected_projection;
        else if (mode == "directed") cfg.path_mode = drgg::PathMode::directed;
        else throw drgg::parse_error("path_mode must be undirected or directed");
        cfg.exact_path_threshold =
            doc.value("exact_path_threshold", cfg.exact_path_threshold);
        cfg.sample_sources = doc.value("sample_sources", cfg.sample_sources);
        summary_path = doc.at("out_summary").get<std::string>();
        series_path = doc.value("out_degree_series", std::string{});
        cfg.degree_series = !series_path.empty();
    } catch (const nlohmann::json::exception& e) {
        throw drgg::parse_error("'" + config_path + "': " + e.what());
    }

    const auto result = drgg::run_experiment(cfg);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    write_text_file(summary_path, result.summary_csv);
    if (!series_path.empty()) write_text_file(series_path, result.degree_series_csv);
    if (result.rows.empty()) {
        std::cerr << "no feasible configuration rows\n";
        return kInfeasible;
    }
    std::cerr << "wrote " << summary_path << " (" << result.rows.size() << " rows)\n";
    return kOk;
}

int cmd_compare(std::int64_t n, double alpha, int dim, std::uint64_t seed, bool undirected,
                std::int64_t sample_paths, const std::string& out) {
    const auto [pts, g] = drgg::generate({n, alpha, dim, seed, drgg::RadiusMode::pareto});
    drgg::StatsOptions opt;
    opt.paths.mode =
        undirected ? drgg::PathMode::undirected_projection : drgg::PathMode::directed;
    if (sample_paths > 0) {
        opt.paths.exact_threshold = 0;
        opt.paths.sample_sources = sample_paths;
    }
    const auto stats = drgg::compute_stats(g, opt);
    const auto theory = drgg::make_theory_report(n, alpha, dim);

    auto pct = [](double measured, double predicted) {
        return 100.0 * (measured - predicted) / predicted;
    };
    json doc;
    doc["type"] = "compare";
    doc["params"] = {{"n", n}, {"alpha", alpha}, {"dim", dim}, {"seed", seed}};
    doc["stats"] = drgg::stats_to_json(stats);
    doc["theory"] = drgg::theory_to_json(theory);
    json dev;
    dev["edge_count_pct"] =
        pct(static_cast<double>(stats.edge_count), theory.expected_edges);
    dev["mean_outdegree_pct"] =
        pct(stats.out_hist.mean(), theory.z_exact * static_cast<double>(n - 1));
    if (stats.reciprocity)
        dev["reciprocity_pct"] = pct(*stats.reciprocity, theory.reciprocity_limit);
    if (theory.clustering_constant) {
        const auto cl = drgg::clustering_in(g);
        dev["clustering_in_excl_pct"] = pct(cl.excl, *theory.clustering_constant);
    }
    doc["deviation"] = std::move(dev);
    write_or_print(doc, out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed random geometric graphs: generation, statistics, theory, fitting"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "sample a graph and write it to a file");
    std::int64_t g_n = 0;
    double g_alpha = 0.0;
    int g_dim = 0;
    std::uint64_t g_seed = 0;
    bool g_fixed = false, g_no_edges = false;
    std::string g_out, g_export, g_format = "tsv";
    gen->add_option("--n", g_n, "vertex count")->required();
    gen->add_option("--alpha", g_alpha, "radius-law exponent")->required();
    gen->add_option("--dim", g_dim, "torus dimension")->required();
    gen->add_option("--seed", g_seed, "rng seed");
    gen->add_flag("--fixed-radius", g_fixed, "give every vertex the minimum radius");
    gen->add_option("--out", g_out, "output graph file")->required();
    gen->add_flag("--no-edges", g_no_edges, "omit the edge section (regenerated on read)");
    gen->add_option("--export-edge-list", g_export, "also write a labeled edge list");
    gen->add_option("--export-format", g_format, "edge-list format: tsv or csv")
        ->check(CLI::IsMember({"tsv", "csv"}));

    // stats
    auto* st = app.add_subcommand("stats", "compute graph statistics");
    GraphInput st_in;
    st_in.attach(st);
    bool st_und = false, st_giant = false;
    std::int64_t st_sample = 0, st_hubs = 20;
    std::string st_out;
    st->add_flag("--undirected", st_und, "path statistics on the undirected projection");
    st->add_option("--sample-paths", st_sample, "sampled-source BFS with this many sources");
    st->add_option("--hubs", st_hubs, "number of top-indegree vertices to report");
    st->add_flag("--giant", st_giant, "restrict to the largest weakly connected component");
    st->add_option("--out", st_out, "output report file (default stdout)");

    // theory
    auto* th = app.add_subcommand("theory", "closed-form predictions for G(n, alpha, d)");
    std::int64_t t_n = 0, t_maxk = 12;
    double t_alpha = 0.0;
    int t_dim = 0;
    std::string t_out;
    th->add_option("--n", t_n, "vertex count")->required();
    th->add_option("--alpha", t_alpha, "radius-law exponent")->required();
    th->add_option("--dim", t_dim, "torus dimension")->required();
    th->add_option("--max-path-k", t_maxk, "report expected path counts up to this length");
    th->add_option("--out", t_out, "output report file (default stdout)");

    // fit
    auto* ft = app.add_subcommand("fit", "fit the degree-law parameters");
    GraphInput ft_in;
    ft_in.attach(ft);
    int f_dim = 0;
    std::string f_method = "mle", f_out;
    ft->add_option("--dim", f_dim, "assumed dimension (beta -> alpha conversion)")->required();
    ft->add_option("--method", f_method, "tail estimator: mle or ls")
        ->check(CLI::IsMember({"mle", "ls"}));
    ft->add_option("--out", f_out, "output report file (default stdout)");

    // experiment
    auto* ex = app.add_subcommand("experiment", "run a multi-trial simulation summary");
    std::string e_config;
    ex->add_option("--config", e_config, "experiment configuration file")->required();

    // compare
    auto* cp = app.add_subcommand("compare", "generate one graph and report theory deviations");
    std::int64_t c_n = 0, c_sample = 0;
    double c_alpha = 0.0;
    int c_dim = 0;
    std::uint64_t c_seed = 0;
    bool c_und = false;
    std::string c_out;
    cp->add_option("--n", c_n, "vertex count")->required();
    cp->add_option("--alpha", c_alpha, "radius-law exponent")->required();
    cp->add_option("--dim", c_dim, "torus dimension")->required();
    cp->add_option("--seed", c_seed, "rng seed");
    cp->add_flag("--undirected", c_und, "path statistics on the undirected projection");
    cp->add_option("--sample-paths", c_sample, "sampled-source BFS with this many sources");
    cp->add_option("--out", c_out, "output report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen->parsed())
            return cmd_generate(g_n, g_alpha, g_dim, g_seed, g_fixed, g_out, g_no_edges,
                                g_export, g_format);
        if (st->parsed()) return cmd_stats(st_in, st_und, st_sample, st_hubs, st_giant, st_out);
        if (th->parsed()) return cmd_theory(t_n, t_alpha, t_dim, t_maxk, t_out);
        if (ft->parsed()) return cmd_fit(ft_in, f_dim, f_method, f_out);
        if (ex->parsed()) return cmd_experiment(e_config);
        if (cp->parsed())
            return cmd_compare(c_n, c_alpha, c_dim, c_seed, c_und, c_sample, c_out);
    } catch (const drgg::model_infeasible& e) {
        std::cerr << "infeasible model: " << e.what() << "\n";
        return kInfeasible;
    } catch (const drgg::insufficient_data& e) {
        std::cerr << "insufficient data: " << e.what() << "\n";
        return kInsufficient;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
