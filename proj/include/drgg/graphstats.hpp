#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drgg/generator.hpp"

namespace drgg {

struct DegreeHistogram {
    std::map<std::int64_t, std::int64_t> counts;  // degree -> #vertices
    std::int64_t total = 0;

    double mean() const;
    static DegreeHistogram from_degrees(const std::vector<std::int64_t>& degrees);
};

// Labeled (ordered-triple) triangle counts.
//   type 1: (u,v,w) with v~>u, w~>u, v~>w
//   type 2: (u,v,w) with u~>v, v~>w, w~>u
struct TriangleCensus {
    std::int64_t type1_labeled = 0;
    std::int64_t type2_labeled = 0;
};

enum class PathMode { directed, undirected_projection };

struct PathStats {
    std::optional<std::int64_t> diameter;  // empty when no reachable pair
    bool diameter_exact = false;           // false => lower-bound estimate
    double avg_path_length = 0.0;
    double reachable_pair_fraction = 0.0;
    std::int64_t sources_used = 0;
};

struct HubEntry {
    VertexId vertex;
    std::string label;  // empty when the graph is unlabeled
    std::int64_t indegree;
};

struct ClusteringIn {
    double excl = 0.0;  // average c_u over vertices with indegree >= 2
    double all = 0.0;   // c_u := 0 below indegree 2, averaged over all n
    std::map<VertexId, double> per_vertex;  // only vertices with indegree >= 2
};

struct StatsReport {
    std::int64_t n = 0;
    std::int64_t edge_count = 0;
    DegreeHistogram in_hist, out_hist;
    TriangleCensus triangles;
    double clustering_in_excl = 0.0;
    double clustering_in_all = 0.0;
    double clustering_undirected = 0.0;  // avg local clustering of the projection
    std::optional<double> reciprocity;   // empty on edgeless graphs
    PathMode path_mode = PathMode::directed;
    PathStats paths;
    std::vector<HubEntry> hubs;
};

std::pair<DegreeHistogram, DegreeHistogram> degree_histograms(const DiGraph& g);

TriangleCensus count_triangles(const DiGraph& g);

ClusteringIn clustering_in(const DiGraph& g);

// Average local clustering of the undirected projection, vertices with
// degree < 2 counted as 0 (the convention used for simulation summaries).
double clustering_undirected(const DiGraph& g);

// Fraction of directed edges whose reverse edge exists.
double reciprocity(const DiGraph& g);

struct PathOptions {
    PathMode mode = PathMode::directed;
    std::int64_t exact_threshold = 20000;  // all-source BFS up to this n
    std::int64_t sample_sources = 256;
    std::uint64_t seed = 12345;
};

PathStats shortest_path_stats(const DiGraph& g, const PathOptions& opt);

std::vector<HubEntry> top_hubs(const DiGraph& g, std::int64_t k,
                               const std::vector<std::string>* labels = nullptr);

struct StatsOptions {
    PathOptions paths;
    std::int64_t hub_k = 20;
    const std::vector<std::string>* labels = nullptr;
};

StatsReport compute_stats(const DiGraph& g, const StatsOptions& opt = {});

}  // namespace drgg
