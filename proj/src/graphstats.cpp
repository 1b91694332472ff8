#include "drgg/graphstats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace drgg {

double DegreeHistogram::mean() const {
    if (total == 0) return 0.0;
    double s = 0.0;
    for (auto [k, c] : counts) s += static_cast<double>(k) * static_cast<double>(c);
    return s / static_cast<double>(total);
}

DegreeHistogram DegreeHistogram::from_degrees(const std::vector<std::int64_t>& degrees) {
    DegreeHistogram h;
    for (auto d : degrees) ++h.counts[d];
    h.total = static_cast<std::int64_t>(degrees.size());
    return h;
}

std::pair<DegreeHistogram, DegreeHistogram> degree_histograms(const DiGraph& g) {
    DegreeHistogram in, out;
    for (std::int64_t v = 0; v < g.n; ++v) {
        ++in.counts[static_cast<std::int64_t>(g.in_adj[v].size())];
        ++out.counts[static_cast<std::int64_t>(g.out_adj[v].size())];
    }
    in.total = out.total = g.n;
    return {std::move(in), std::move(out)};
}

namespace {

std::int64_t sorted_intersection_size(const std::vector<VertexId>& a,
                                      const std::vector<VertexId>& b) {
    std::int64_t cnt = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++cnt; ++ia; ++ib; }
    }
    return cnt;
}

}  // namespace

TriangleCensus count_triangles(const DiGraph& g) {
    TriangleCensus c;
    for (VertexId u = 0; u < g.n; ++u) {
        for (VertexId v : g.in_adj[u])
            c.type1_labeled += sorted_intersection_size(g.out_adj[v], g.in_adj[u]);
        for (VertexId v : g.out_adj[u])
            c.type2_labeled += sorted_intersection_size(g.out_adj[v], g.in_adj[u]);
    }
    return c;
}

ClusteringIn clustering_in(const DiGraph& g) {
    ClusteringIn r;
    double sum = 0.0;
    std::int64_t counted = 0;
    for (VertexId u = 0; u < g.n; ++u) {
        const auto k = static_cast<std::int64_t>(g.in_adj[u].size());
        if (k < 2) continue;
        std::int64_t pairs = 0;
        for (VertexId v : g.in_adj[u])
            pairs += sorted_intersection_size(g.out_adj[v], g.in_adj[u]);
        const double cu = static_cast<double>(pairs) / (static_cast<double>(k) * (k - 1));
        r.per_vertex[u] = cu;
        sum += cu;
        ++counted;
    }
    r.excl = counted > 0 ? sum / static_cast<double>(counted) : 0.0;
    r.all = g.n > 0 ? sum / static_cast<double>(g.n) : 0.0;
    return r;
}

namespace {

std::vector<std::vector<VertexId>> undirected_adjacency(const DiGraph& g) {
    std::vector<std::vector<VertexId>> und(g.n);
    for (VertexId u = 0; u < g.n; ++u) {
        und[u].resize(g.in_adj[u].size() + g.out_adj[u].size());
        auto end = std::set_union(g.in_adj[u].begin(), g.in_adj[u].end(),
                                  g.out_adj[u].begin(), g.out_adj[u].end(), und[u].begin());
        und[u].erase(end, und[u].end());
    }
    return und;
}

}  // namespace

double clustering_undirected(const DiGraph& g) {
    if (g.n == 0) return 0.0;
    const auto und = undirected_adjacency(g);
    double sum = 0.0;
    for (VertexId u = 0; u < g.n; ++u) {
        const auto k = static_cast<std::int64_t>(und[u].size());
        if (k < 2) continue;
        std::int64_t closed = 0;  // counts each neighbor pair edge twice
        for (VertexId v : und[u]) closed += sorted_intersection_size(und[v], und[u]);
        sum += static_cast<double>(closed) / (static_cast<double>(k) * (k - 1));
    }
    return sum / static_cast<double>(g.n);
}

double reciprocity(const DiGraph& g) {
    if (g.edge_count == 0)
        throw undefined_statistic("reciprocity: graph has no edges");
    std::int64_t mutual = 0;
    for (VertexId u = 0; u < g.n; ++u)
        for (VertexId v : g.out_adj[u])
            if (g.has_edge(v, u)) ++mutual;
    return static_cast<double>(mutual) / static_cast<double>(g.edge_count);
}

namespace {

struct Csr {
    std::vector<std::int64_t> offsets;
    std::vector<VertexId> targets;
};

Csr to_csr(const DiGraph& g, PathMode mode) {
    Csr c;
    c.offsets.assign(g.n + 1, 0);
    if (mode == PathMode::directed) {
        for (VertexId u = 0; u < g.n; ++u)
            c.offsets[u + 1] = c.offsets[u] + static_cast<std::int64_t>(g.out_adj[u].size());
        c.targets.reserve(c.offsets[g.n]);
        for (VertexId u = 0; u < g.n; ++u)
            c.targets.insert(c.targets.end(), g.out_adj[u].begin(), g.out_adj[u].end());
    } else {
        auto und = undirected_adjacency(g);
        for (VertexId u = 0; u < g.n; ++u)
            c.offsets[u + 1] = c.offsets[u] + static_cast<std::int64_t>(und[u].size());
        c.targets.reserve(c.offsets[g.n]);
        for (VertexId u = 0; u < g.n; ++u)
            c.targets.insert(c.targets.end(), und[u].begin(), und[u].end());
    }
    return c;
}

}  // namespace

PathStats shortest_path_stats(const DiGraph& g, const PathOptions& opt) {
    if (g.n < 2) throw invalid_input("shortest_path_stats: n must be >= 2");
    const Csr csr = to_csr(g, opt.mode);

    std::vector<VertexId> sources(g.n);
    std::iota(sources.begin(), sources.end(), 0);
    const bool exact = g.n <= opt.exact_threshold;
    if (!exact) {
        std::mt19937_64 rng(opt.seed);
        std::shuffle(sources.begin(), sources.end(), rng);
        sources.resize(std::min<std::int64_t>(opt.sample_sources, g.n));
    }

    std::vector<std::int32_t> dist(g.n);
    std::vector<VertexId> queue(g.n);
    std::int64_t max_ecc = -1;
    std::int64_t finite_pairs = 0;
    double dist_sum = 0.0;

    for (VertexId s : sources) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::int64_t head = 0, tail = 0;
        queue[tail++] = s;
        std::int64_t ecc = 0, reached = 0, local_sum = 0;
        while (head < tail) {
            const VertexId u = queue[head++];
            const std::int32_t du = dist[u];
            for (std::int64_t i = csr.offsets[u]; i < csr.offsets[u + 1]; ++i) {
                const VertexId w = csr.targets[i];
                if (dist[w] < 0) {
                    dist[w] = du + 1;
                    queue[tail++] = w;
                    local_sum += du + 1;
                    ++reached;
                    if (du + 1 > ecc) ecc = du + 1;
                }
            }
        }
        if (reached > 0 && ecc > max_ecc) max_ecc = ecc;
        finite_pairs += reached;
        dist_sum += static_cast<double>(local_sum);
    }

    if (finite_pairs == 0)
        throw undefined_statistic("shortest_path_stats: no reachable pairs");

    PathStats r;
    r.diameter = max_ecc;
    r.diameter_exact = exact;
    r.avg_path_length = dist_sum / static_cast<double>(finite_pairs);
    r.reachable_pair_fraction =
        static_cast<double>(finite_pairs) /
        (static_cast<double>(sources.size()) * static_cast<double>(g.n - 1));
    r.sources_used = static_cast<std::int64_t>(sources.size());
    return r;
}

std::vector<HubEntry> top_hubs(const DiGraph& g, std::int64_t k,
                               const std::vector<std::string>* labels) {
    if (k < 1) throw invalid_input("top_hubs: k must be >= 1");
    std::vector<VertexId> ids(g.n);
    std::iota(ids.begin(), ids.end(), 0);
    const auto take = std::min<std::int64_t>(k, g.n);
    auto cmp = [&](VertexId a, VertexId b) {
        const auto da = g.in_adj[a].size(), db = g.in_adj[b].size();
        if (da != db) return da > db;
        return a < b;
    };
    std::partial_sort(ids.begin(), ids.begin() + take, ids.end(), cmp);
    std::vector<HubEntry> out;
    out.reserve(take);
    for (std::int64_t i = 0; i < take; ++i) {
        const VertexId v = ids[i];
        out.push_back({v, labels ? (*labels)[v] : std::string{},
                       static_cast<std::int64_t>(g.in_adj[v].size())});
    }
    return out;
}

StatsReport compute_stats(const DiGraph& g, const StatsOptions& opt) {
    StatsReport r;
    r.n = g.n;
    r.edge_count = g.edge_count;
    std::tie(r.in_hist, r.out_hist) = degree_histograms(g);
    r.triangles = count_triangles(g);
    const auto cl = clustering_in(g);
    r.clustering_in_excl = cl.excl;
    r.clustering_in_all = cl.all;
    r.clustering_undirected = clustering_undirected(g);
    if (g.edge_count > 0) r.reciprocity = reciprocity(g);
    r.path_mode = opt.paths.mode;
    if (g.n >= 2) {
        try {
            r.paths = shortest_path_stats(g, opt.paths);
        } catch (const undefined_statistic&) {
            r.paths = PathStats{};  // unreachable marker: empty diameter
        }
    }
    r.hubs = top_hubs(g, std::max<std::int64_t>(1, opt.hub_k), opt.labels);
    return r;
}

}  // namespace drgg
