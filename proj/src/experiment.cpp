#include "drgg/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "drgg/theory.hpp"

namespace drgg {

namespace {

MetricSummary summarize(const std::vector<double>& xs) {
    MetricSummary m;
    const auto n = static_cast<double>(xs.size());
    for (double x : xs) m.mean += x;
    m.mean /= n;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - m.mean) * (x - m.mean);
        m.sd = std::sqrt(ss / (n - 1.0));
        m.has_sd = true;
    }
    return m;
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void emit(std::ostringstream& out, const MetricSummary& m) {
    out << ',' << num(m.mean) << ',' << (m.has_sd ? num(2.0 * m.sd) : "na");
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) throw invalid_input("run_experiment: trials must be >= 1");
    ExperimentResult result;

    std::ostringstream summary;
    summary << "n,alpha,dim,trials,seed_base"
               ",clustering_und_mean,clustering_und_2sd"
               ",clustering_in_excl_mean,clustering_in_excl_2sd"
               ",diameter_mean,diameter_2sd"
               ",avg_path_mean,avg_path_2sd"
               ",edge_count_mean,edge_count_2sd"
               ",reciprocity_mean,reciprocity_2sd"
               ",triangle_ratio_mean,triangle_ratio_2sd"
               ",theory_expected_edges,theory_clustering_constant,theory_reciprocity_limit"
               ",dev_edges_pct,dev_reciprocity_pct,dev_clustering_pct\n";
    std::ostringstream series;
    series << "n,alpha,dim,direction,k,mean_frequency,sd\n";

    for (const auto& item : config.configs) {
        ModelParams base{item.n, item.alpha, item.dim, 0, RadiusMode::pareto};
        try {
            base.validate();
        } catch (const std::exception& e) {
            result.warnings.push_back("skipped (n=" + std::to_string(item.n) +
                                      ", alpha=" + num(item.alpha) +
                                      ", d=" + std::to_string(item.dim) + "): " + e.what());
            continue;
        }

        std::vector<double> cl_und, cl_in, diam, apl, edges, recip, tri;
        // degree -> per-trial frequencies, one accumulator per direction
        std::map<std::int64_t, std::vector<double>> in_freq, out_freq;

        for (std::int64_t t = 0; t < config.trials; ++t) {
            ModelParams p = base;
            p.seed = config.seed_base + static_cast<std::uint64_t>(t);
            const auto [pts, g] = generate(p);

            cl_und.push_back(clustering_undirected(g));
            cl_in.push_back(clustering_in(g).excl);
            edges.push_back(static_cast<double>(g.edge_count));
            recip.push_back(reciprocity(g));

            PathOptions popt;
            popt.mode = config.path_mode;
            popt.exact_threshold = config.exact_path_threshold;
            popt.sample_sources = config.sample_sources;
            const auto ps = shortest_path_stats(g, popt);
            diam.push_back(static_cast<double>(ps.diameter.value_or(0)));
            apl.push_back(ps.avg_path_length);

            const double ln = std::log(static_cast<double>(item.n));
            tri.push_back(static_cast<double>(count_triangles(g).type1_labeled) /
                          (static_cast<double>(item.n) * ln * ln));

            if (config.degree_series) {
                auto [ih, oh] = degree_histograms(g);
                const auto nn = static_cast<double>(item.n);
                for (auto [k, c] : ih.counts) {
                    auto& v = in_freq[k];
                    v.resize(config.trials, 0.0);
                    v[t] = static_cast<double>(c) / nn;
                }
                for (auto [k, c] : oh.counts) {
                    auto& v = out_freq[k];
                    v.resize(config.trials, 0.0);
                    v[t] = static_cast<double>(c) / nn;
                }
            }
        }

        ExperimentRow row;
        row.n = item.n;
        row.alpha = item.alpha;
        row.dim = item.dim;
        row.trials = config.trials;
        row.clustering_und = summarize(cl_und);
        row.clustering_in_excl = summarize(cl_in);
        row.diameter = summarize(diam);
        row.avg_path = summarize(apl);
        row.edge_count = summarize(edges);
        row.reciprocity = summarize(recip);
        row.triangle_ratio = summarize(tri);
        row.theory_expected_edges = expected_edges(item.n, item.alpha, item.dim);
        if (item.dim % 2 == 1 && item.alpha > 2 * item.dim + 1)
            row.theory_clustering_constant = clustering_constant(item.alpha, item.dim);
        row.theory_reciprocity_limit = reciprocity_limit(item.alpha, item.dim);
        row.dev_edges_pct =
            100.0 * (row.edge_count.mean - row.theory_expected_edges) / row.theory_expected_edges;
        row.dev_reciprocity_pct = 100.0 * (row.reciprocity.mean - row.theory_reciprocity_limit) /
                                  row.theory_reciprocity_limit;
        if (row.theory_clustering_constant)
            row.dev_clustering_pct = 100.0 *
                                     (row.clustering_in_excl.mean - *row.theory_clustering_constant) /
                                     *row.theory_clustering_constant;

        summary << row.n << ',' << num(row.alpha) << ',' << row.dim << ',' << row.trials
                << ',' << config.seed_base;
        emit(summary, row.clustering_und);
        emit(summary, row.clustering_in_excl);
        emit(summary, row.diameter);
        emit(summary, row.avg_path);
        emit(summary, row.edge_count);
        emit(summary, row.reciprocity);
        emit(summary, row.triangle_ratio);
        summary << ',' << num(row.theory_expected_edges) << ','
                << (row.theory_clustering_constant ? num(*row.theory_clustering_constant) : "na")
                << ',' << num(row.theory_reciprocity_limit) << ',' << num(row.dev_edges_pct)
                << ',' << num(row.dev_reciprocity_pct) << ','
                << (row.dev_clustering_pct ? num(*row.dev_clustering_pct) : "na") << '\n';

        if (config.degree_series) {
            auto emit_series = [&](const char* dir,
                                   const std::map<std::int64_t, std::vector<double>>& freq) {
                for (const auto& [k, xs] : freq) {
                    const auto m = summarize(xs);
                    series << row.n << ',' << num(row.alpha) << ',' << row.dim << ',' << dir
                           << ',' << k << ',' << num(m.mean) << ','
                           << (m.has_sd ? num(m.sd) : "na") << '\n';
                }
            };
            emit_series("in", in_freq);
            emit_series("out", out_freq);
        }

        result.rows.push_back(std::move(row));
    }

    result.summary_csv = summary.str();
    result.degree_series_csv = series.str();
    return result;
}

}  // namespace drgg
