#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "drgg/geometry.hpp"

namespace drgg {

using VertexId = std::int32_t;

enum class RadiusMode { pareto, fixed_r0 };

// Full description of one DRGG instance G(n, alpha, d).
struct ModelParams {
    std::int64_t n = 0;
    double alpha = 0.0;
    int dim = 0;
    std::uint64_t seed = 0;
    RadiusMode radius_mode = RadiusMode::pareto;

    // Throws invalid_input / model_infeasible when the instance cannot be built.
    void validate() const;
};

// Geometric realization: n uniform torus points with per-vertex radii.
struct TorusPointSet {
    ModelParams params;
    double r0 = 0.0;
    std::vector<double> coords;  // n * dim, row-major
    std::vector<double> radii;   // n, each in [r0, 1/2]

    std::span<const double> point(std::int64_t v) const {
        return {coords.data() + v * params.dim, static_cast<std::size_t>(params.dim)};
    }
};

// Immutable simple directed graph with both adjacency directions, sorted.
struct DiGraph {
    std::int64_t n = 0;
    std::vector<std::vector<VertexId>> out_adj;
    std::vector<std::vector<VertexId>> in_adj;
    std::int64_t edge_count = 0;

    bool has_edge(VertexId u, VertexId v) const;

    // Builds from a u~>v edge list; rejects self-loops and duplicates.
    static DiGraph from_edges(std::int64_t n,
                              const std::vector<std::pair<VertexId, VertexId>>& edges);
    // Derives out_adj/in_adj counts from per-vertex in-neighbor lists.
    static DiGraph from_in_lists(std::vector<std::vector<VertexId>> in_lists);
};

// Seed-deterministic sampling: all coordinates first, then all radii.
TorusPointSet sample_points(const ModelParams& params);

// O(n^2) pairwise reference builder: edge u~>v iff u != v and d(x_v, x_u) <= r_v.
DiGraph build_edges_naive(const TorusPointSet& pts);

// Cell-grid builder; bit-identical to build_edges_naive.
DiGraph build_edges_grid(const TorusPointSet& pts);

std::pair<TorusPointSet, DiGraph> generate(const ModelParams& params);

}  // namespace drgg
