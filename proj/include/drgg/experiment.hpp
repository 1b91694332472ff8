#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drgg/graphstats.hpp"

namespace drgg {

// Trial protocol for simulation summary tables: `trials` independent graphs
// per configuration, seeded seed_base + trial index, aggregated as mean and
// two standard deviations.
struct ExperimentConfig {
    struct Item {
        std::int64_t n;
        double alpha;
        int dim;
    };
    std::vector<Item> configs;
    std::int64_t trials = 1;
    std::uint64_t seed_base = 0;
    PathMode path_mode = PathMode::undirected_projection;
    std::int64_t exact_path_threshold = 20000;
    std::int64_t sample_sources = 256;
    bool degree_series = true;
};

struct MetricSummary {
    double mean = 0.0;
    double sd = 0.0;        // sample standard deviation
    bool has_sd = false;    // false when trials == 1
};

struct ExperimentRow {
    std::int64_t n;
    double alpha;
    int dim;
    std::int64_t trials;
    MetricSummary clustering_und;      // avg local clustering of the projection
    MetricSummary clustering_in_excl;  // in-clustering, indegree >= 2 vertices
    MetricSummary diameter;
    MetricSummary avg_path;
    MetricSummary edge_count;
    MetricSummary reciprocity;
    MetricSummary triangle_ratio;      // type1_labeled / (n ln^2 n)
    double theory_expected_edges = 0.0;
    std::optional<double> theory_clustering_constant;
    double theory_reciprocity_limit = 0.0;
    double dev_edges_pct = 0.0;        // 100 (mean - theory)/theory
    double dev_reciprocity_pct = 0.0;
    std::optional<double> dev_clustering_pct;  // in-clustering vs closed form
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;
    std::string summary_csv;
    std::string degree_series_csv;  // config,n,alpha,dim,direction,k,mean,sd
    std::vector<std::string> warnings;  // skipped configurations
};

ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace drgg
