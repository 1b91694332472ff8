#include "drgg/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace drgg {

void ModelParams::validate() const {
    if (n < 2) throw invalid_input("ModelParams: n must be >= 2");
    if (dim < 1) throw invalid_input("ModelParams: dim must be >= 1");
    if (radius_mode == RadiusMode::pareto && !(alpha > dim + 1))
        throw invalid_input("ModelParams: alpha must exceed d+1 in pareto mode");
    min_radius(n, dim);  // throws model_infeasible when r0 >= 1/2
}

bool DiGraph::has_edge(VertexId u, VertexId v) const {
    const auto& a = out_adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

DiGraph DiGraph::from_edges(std::int64_t n,
                            const std::vector<std::pair<VertexId, VertexId>>& edges) {
    DiGraph g;
    g.n = n;
    g.out_adj.assign(n, {});
    g.in_adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw invalid_input("DiGraph: vertex id out of range");
        if (u == v) throw invalid_input("DiGraph: self-loop rejected");
        g.out_adj[u].push_back(v);
        g.in_adj[v].push_back(u);
    }
    for (auto& a : g.out_adj) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw invalid_input("DiGraph: duplicate edge rejected");
        g.edge_count += static_cast<std::int64_t>(a.size());
    }
    for (auto& a : g.in_adj) std::sort(a.begin(), a.end());
    return g;
}

DiGraph DiGraph::from_in_lists(std::vector<std::vector<VertexId>> in_lists) {
    DiGraph g;
    g.n = static_cast<std::int64_t>(in_lists.size());
    g.in_adj = std::move(in_lists);
    g.out_adj.assign(g.n, {});
    std::vector<std::int64_t> outdeg(g.n, 0);
    for (VertexId v = 0; v < g.n; ++v)
        for (VertexId u : g.in_adj[v]) ++outdeg[u];
    for (VertexId u = 0; u < g.n; ++u) g.out_adj[u].reserve(outdeg[u]);
    for (VertexId v = 0; v < g.n; ++v) {
        auto& a = g.in_adj[v];
        std::sort(a.begin(), a.end());
        g.edge_count += static_cast<std::int64_t>(a.size());
        for (VertexId u : a) g.out_adj[u].push_back(v);
    }
    for (auto& a : g.out_adj) std::sort(a.begin(), a.end());
    return g;
}

namespace {

// 53-bit uniform in [0,1); fixed construction so output is platform-stable.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TorusPointSet sample_points(const ModelParams& params) {
    params.validate();
    TorusPointSet pts;
    pts.params = params;
    pts.r0 = min_radius(params.n, params.dim);
    pts.coords.resize(params.n * params.dim);
    pts.radii.resize(params.n);

    std::mt19937_64 rng(params.seed);
    for (auto& c : pts.coords) c = uniform01(rng);
    if (params.radius_mode == RadiusMode::fixed_r0) {
        std::fill(pts.radii.begin(), pts.radii.end(), pts.r0);
    } else {
        const RadiusLaw law = RadiusLaw::make(params.alpha, pts.r0, params.dim);
        for (auto& r : pts.radii) r = sample_radius(law, uniform01(rng));
    }
    return pts;
}

DiGraph build_edges_naive(const TorusPointSet& pts) {
    const std::int64_t n = pts.params.n;
    std::vector<std::vector<VertexId>> in_lists(n);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u = static_cast<VertexId>(v + 1); u < n; ++u) {
            const double dist = torus_distance(pts.point(v), pts.point(u));
            if (dist <= pts.radii[v]) in_lists[v].push_back(u);  // u ~> v
            if (dist <= pts.radii[u]) in_lists[u].push_back(v);  // v ~> u
        }
    }
    return DiGraph::from_in_lists(std::move(in_lists));
}

DiGraph build_edges_grid(const TorusPointSet& pts) {
    const std::int64_t n = pts.params.n;
    const int d = pts.params.dim;

    int m = static_cast<int>(std::floor(1.0 / pts.r0));
    m = std::clamp(m, 1, 64);
    std::int64_t ncells = 1;
    for (int i = 0; i < d; ++i) ncells *= m;

    std::vector<std::vector<VertexId>> cells(ncells);
    std::vector<int> cell_idx(d);
    auto cell_of = [&](std::span<const double> p) {
        std::int64_t idx = 0;
        for (int i = 0; i < d; ++i) {
            int c = static_cast<int>(p[i] * m);
            if (c >= m) c = m - 1;
            idx = idx * m + c;
        }
        return idx;
    };
    for (VertexId v = 0; v < n; ++v) cells[cell_of(pts.point(v))].push_back(v);

    std::vector<std::vector<VertexId>> in_lists(n);
    std::vector<int> base(d), off(d);
    for (VertexId v = 0; v < n; ++v) {
        const auto pv = pts.point(v);
        const double rv = pts.radii[v];
        const int reach = static_cast<int>(std::ceil(rv * m)) + 1;
        const bool all = 2 * reach + 1 >= m;  // offset window would revisit cells
        for (int i = 0; i < d; ++i) {
            base[i] = static_cast<int>(pv[i] * m);
            if (base[i] >= m) base[i] = m - 1;
        }

        auto& acc = in_lists[v];
        if (all) {
            for (std::int64_t c = 0; c < ncells; ++c)
                for (VertexId u : cells[c])
                    if (u != v && torus_distance(pv, pts.point(u)) <= rv) acc.push_back(u);
        } else {
            std::fill(off.begin(), off.end(), -reach);
            while (true) {
                std::int64_t idx = 0;
                for (int i = 0; i < d; ++i) {
                    int c = (base[i] + off[i]) % m;
                    if (c < 0) c += m;
                    idx = idx * m + c;
                }
                for (VertexId u : cells[idx])
                    if (u != v && torus_distance(pv, pts.point(u)) <= rv) acc.push_back(u);
                int i = d - 1;
                while (i >= 0 && off[i] == reach) { off[i] = -reach; --i; }
                if (i < 0) break;
                ++off[i];
            }
        }
    }
    return DiGraph::from_in_lists(std::move(in_lists));
}

std::pair<TorusPointSet, DiGraph> generate(const ModelParams& params) {
    TorusPointSet pts = sample_points(params);
    DiGraph g = build_edges_grid(pts);
    return {std::move(pts), std::move(g)};
}

}  // namespace drgg
