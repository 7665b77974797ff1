#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spanet {

// Undirected simple graph in CSR form. Vertex ids are 1..n.
class Graph {
public:
    Graph() = default;

    static Graph from_undirected_edges(uint32_t n,
                                       std::span<const std::pair<uint32_t, uint32_t>> edges);
    static Graph complete(uint32_t n);

    uint32_t num_vertices() const { return n_; }
    uint64_t num_edges() const { return adj_.size() / 2; }

    std::span<const uint32_t> neighbors(uint32_t v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    uint32_t degree(uint32_t v) const {
        return static_cast<uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> offsets_; // size n_+2, offsets_[0] unused
    std::vector<uint32_t> adj_;
};

// Reusable BFS workspace; distances are -1 for unreached vertices.
class BfsScratch {
public:
    // Fills dist (size n+1) with hop counts from source.
    void run(const Graph& g, uint32_t source);
    // Stops early once target is reached; returns distance or -1.
    int32_t distance(const Graph& g, uint32_t source, uint32_t target);

    std::span<const int32_t> dist() const { return dist_; }

private:
    std::vector<int32_t> dist_;
    std::vector<uint32_t> queue_;
};

std::vector<int32_t> bfs_distances(const Graph& g, uint32_t source);

// Subgraph induced by `vertices` (sorted unique ids); new ids are 1..k in the
// order given. Returns the subgraph and the old-id-by-new-id table.
std::pair<Graph, std::vector<uint32_t>> induced_subgraph(const Graph& g,
                                                         std::span<const uint32_t> vertices);

} // namespace spanet
