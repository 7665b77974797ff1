#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spanet/geometry.hpp"
#include "spanet/graph.hpp"
#include "spanet/spa_graph.hpp"

namespace spanet {

enum class MetricMode { torus, euclidean_square };

const char* metric_mode_name(MetricMode mode);
MetricMode metric_mode_from_name(const std::string& name);

struct unsupported_dimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Proximity graph on t points with threshold radius r. For snapshots derived
// from an SPA graph, vertex ids 1..t are the graph's first t vertices and
// M == A2; for standalone instances the points are fresh uniform draws.
struct RggSnapshot {
    uint32_t t = 0;
    double r = 0.0;
    MetricMode metric = MetricMode::torus;
    double M = 0.0; // pi * t * r^2
    uint64_t seed = 0;
    PointStore points{2};
    std::vector<std::pair<uint32_t, uint32_t>> edges; // u < v, lexicographic

    Graph graph() const { return Graph::from_undirected_edges(t, edges); }
};

RggSnapshot generate_rgg(uint32_t N, double r, MetricMode mode, uint64_t seed);

// Proximity graph over caller-supplied positions (used by tests and fixtures).
RggSnapshot rgg_from_points(PointStore pts, double r, MetricMode mode);

// R_t: the first t vertices of g with radius r_t = sqrt(A2/(t*pi)), edges by
// torus distance. Requires m == 2; throws unsupported_dimension otherwise and
// std::invalid_argument for t > n.
RggSnapshot snapshot(const SpaGraph& g, uint32_t t);

// Halving t-list n, floor(n/2), ..., stopping once t <= log n (or t hits 1).
std::vector<uint32_t> snapshot_levels(uint32_t n);

std::vector<RggSnapshot> snapshot_hierarchy(const SpaGraph& g);

} // namespace spanet
