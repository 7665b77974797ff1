#pragma once

#include <cstdint>
#include <vector>

#include "spanet/geometry.hpp"
#include "spanet/graph.hpp"

namespace spanet {

struct SpaParams {
    int m = 2;         // dimension
    double A1 = 0.5;   // in [0,1)
    double A2 = 1.0;   // > 0
    double p = 1.0;    // link probability, in (0,1]
    uint32_t n = 1;    // vertex count
    uint64_t seed = 1;

    void validate() const; // throws std::invalid_argument
};

// Directed edge (child, parent); the child is always the vertex born at the
// edge's birth step, so birth == child.
struct SpaEdge {
    uint32_t child;
    uint32_t parent;
};

// Birth-ordered SPA graph. Vertex ids equal birth steps 1..n. In-degree
// trajectories are stored as event logs: in_events[v] lists the steps at
// which v gained an in-edge, in increasing order.
struct SpaGraph {
    SpaParams params;
    PointStore positions{2};
    std::vector<SpaEdge> edges; // creation order
    std::vector<std::vector<uint32_t>> in_events;
    std::vector<uint32_t> out_degree;

    uint32_t n() const { return params.n; }

    // deg^-(v,t): in-edges gained at steps <= t
    uint32_t in_degree_at(uint32_t v, uint32_t t) const;
    // in-degree before step t's additions (events at steps < t)
    uint32_t in_degree_before(uint32_t v, uint32_t t) const;
    // total degree at time t; out-edges all appear at v's own birth step
    uint32_t degree_at(uint32_t v, uint32_t t) const;
};

// A(v,t) capped at 1; the sphere of influence covers the whole space when the
// raw value reaches 1.
double influence_volume(uint32_t indeg, uint32_t t, const SpaParams& prm);

// Membership test "newcomer at squared distance dist_sq lies in the sphere of
// influence of a vertex with the given in-degree at step t". Evaluated in
// volume space (c_m d^m vs A(v,t)) so that proximity thresholds compare
// consistently with snapshot radii.
bool sphere_contains(double dist_sq, uint32_t indeg, uint32_t t, const SpaParams& prm);

SpaGraph generate(const SpaParams& prm);

// Undirected simple view; orientations dropped. Multi-edges cannot occur in
// the model (one link chance per (child, parent) pair, at the child's birth).
Graph undirected_view(const SpaGraph& g);

} // namespace spanet
