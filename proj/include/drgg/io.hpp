#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "drgg/fit.hpp"
#include "drgg/generator.hpp"
#include "drgg/graphstats.hpp"
#include "drgg/theory.hpp"

namespace drgg {

using json = nlohmann::ordered_json;

// Canonical graph file: params + positions + radii (+ optional edge list).
// Positions and radii are sufficient statistics; a file without edges
// regenerates the identical graph via build_edges_grid.
void write_graph(const TorusPointSet& pts, const DiGraph& g,
                 const std::filesystem::path& path, bool include_edges = true);
std::pair<TorusPointSet, DiGraph> read_graph(const std::filesystem::path& path);

enum class EdgeFormat { tsv, csv };

struct LabeledEdgeList {
    std::vector<std::string> labels;  // interned in first-appearance order
    std::vector<std::pair<VertexId, VertexId>> edges;  // source ~> target
    std::int64_t self_loops_dropped = 0;
    std::int64_t duplicates_collapsed = 0;
};

LabeledEdgeList read_edge_list(const std::filesystem::path& path, EdgeFormat format);
void write_edge_list(const LabeledEdgeList& list, const std::filesystem::path& path,
                     EdgeFormat format);

// reverse flips every edge (the ingestion direction of word-association files
// is ambiguous, so both readings are reachable).
DiGraph to_digraph(const LabeledEdgeList& list, bool reverse = false);

json stats_to_json(const StatsReport& r);
json theory_to_json(const TheoryReport& r);
json fit_to_json(const FitResult& r);

void write_report(const json& report, const std::filesystem::path& path);

}  // namespace drgg
