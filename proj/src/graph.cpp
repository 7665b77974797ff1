#include "spanet/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace spanet {

Graph Graph::from_undirected_edges(uint32_t n,
                                   std::span<const std::pair<uint32_t, uint32_t>> edges) {
    Graph g;
    g.n_ = n;
    g.offsets_.assign(n + 2, 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw std::invalid_argument("Graph: bad edge endpoint");
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (uint32_t v = 1; v <= n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adj_.resize(2 * edges.size());
    std::vector<uint64_t> cursor(g.offsets_.begin(), g.offsets_.end());
    for (auto [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (uint32_t v = 1; v <= n; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    return g;
}

Graph Graph::complete(uint32_t n) {
    Graph g;
    g.n_ = n;
    g.offsets_.assign(n + 2, 0);
    if (n == 0) return g;
    g.adj_.resize(static_cast<size_t>(n) * (n - 1));
    size_t pos = 0;
    for (uint32_t v = 1; v <= n; ++v) {
        g.offsets_[v] = pos;
        for (uint32_t u = 1; u <= n; ++u)
            if (u != v) g.adj_[pos++] = u;
    }
    g.offsets_[n + 1] = pos;
    return g;
}

void BfsScratch::run(const Graph& g, uint32_t source) {
    dist_.assign(g.num_vertices() + 1, -1);
    queue_.clear();
    queue_.push_back(source);
    dist_[source] = 0;
    for (size_t head = 0; head < queue_.size(); ++head) {
        uint32_t v = queue_[head];
        int32_t d = dist_[v] + 1;
        for (uint32_t u : g.neighbors(v)) {
            if (dist_[u] < 0) {
                dist_[u] = d;
                queue_.push_back(u);
            }
        }
    }
}

int32_t BfsScratch::distance(const Graph& g, uint32_t source, uint32_t target) {
    if (source == target) return 0;
    dist_.assign(g.num_vertices() + 1, -1);
    queue_.clear();
    queue_.push_back(source);
    dist_[source] = 0;
    for (size_t head = 0; head < queue_.size(); ++head) {
        uint32_t v = queue_[head];
        int32_t d = dist_[v] + 1;
        for (uint32_t u : g.neighbors(v)) {
            if (dist_[u] < 0) {
                if (u == target) return d;
                dist_[u] = d;
                queue_.push_back(u);
            }
        }
    }
    return -1;
}

std::vector<int32_t> bfs_distances(const Graph& g, uint32_t source) {
    BfsScratch scratch;
    scratch.run(g, source);
    return {scratch.dist().begin(), scratch.dist().end()};
}

std::pair<Graph, std::vector<uint32_t>> induced_subgraph(const Graph& g,
                                                         std::span<const uint32_t> vertices) {
    std::vector<uint32_t> old_by_new(vertices.begin(), vertices.end());
    std::vector<uint32_t> new_by_old(g.num_vertices() + 1, 0);
    for (uint32_t i = 0; i < old_by_new.size(); ++i) new_by_old[old_by_new[i]] = i + 1;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t i = 0; i < old_by_new.size(); ++i) {
        uint32_t v = old_by_new[i];
        for (uint32_t u : g.neighbors(v)) {
            uint32_t nu = new_by_old[u];
            if (nu != 0 && nu > i + 1) edges.emplace_back(i + 1, nu);
        }
    }
    return {Graph::from_undirected_edges(static_cast<uint32_t>(old_by_new.size()), edges),
            std::move(old_by_new)};
}

} // namespace spanet
