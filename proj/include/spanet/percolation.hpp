#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spanet/graph.hpp"
#include "spanet/rgg.hpp"

namespace spanet {

struct degenerate_geometry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Canonical component labels: label[v] is the smallest vertex id in v's
// component, so the labeling does not depend on edge processing order.
struct ComponentLabeling {
    std::vector<uint32_t> label; // size n+1, [0] unused
    uint32_t num_components = 0;
    uint32_t giant_label = 0;
    uint32_t giant_size = 0;
    double giant_fraction = 0.0;

    uint32_t size_of(uint32_t lbl) const;
    std::vector<uint32_t> component_sizes; // aligned with component_labels
    std::vector<uint32_t> component_labels;
};

ComponentLabeling connected_components(const Graph& g);

// r/5-subsquare occupancy of the unit square: ceil(5/r) cells per axis, each
// cell at most r/5 on a side. min_vertex is 0 for empty cells, else the
// lowest vertex id inside.
struct OccupancyGrid {
    uint32_t cells_per_axis = 0;
    std::vector<uint32_t> min_vertex; // ix + cells_per_axis * iy
    uint64_t occupied_count = 0;

    bool occupied(uint32_t ix, uint32_t iy) const {
        return min_vertex[ix + static_cast<size_t>(cells_per_axis) * iy] != 0;
    }
    uint32_t vertex_in(uint32_t ix, uint32_t iy) const {
        return min_vertex[ix + static_cast<size_t>(cells_per_axis) * iy];
    }
};

OccupancyGrid subsquare_occupancy(const RggSnapshot& snapshot);

struct SlabCrossing {
    bool found = false;
    std::vector<uint32_t> path; // vertex ids, one per occupied subsquare
};

struct CrossingReport {
    double W = 0.0;          // ideal slab width M * r * log N
    uint32_t num_slabs = 1;  // max(1, floor(1/W)); actual width 1/num_slabs
    double slab_width = 1.0;
    std::vector<SlabCrossing> horizontal; // left-to-right, one per slab
    std::vector<SlabCrossing> vertical;   // top-to-bottom
    std::optional<uint32_t> spanning_component_label;

    bool all_crossings() const;
};

// Slab crossings via flood fill over occupied subsquares (4-adjacency),
// computed on plain square geometry without wraparound. Requires N >= 3 and
// at least 5 subsquares per axis (else degenerate_geometry).
CrossingReport find_crossings(const RggSnapshot& snapshot);

struct StretchSample {
    uint32_t u = 0, v = 0;
    double d_e = 0.0;    // metric distance under the snapshot's metric mode
    uint32_t d_graph = 0;
};

// Uniformly random connected pairs with their metric and BFS distances.
// Empty when no component has two vertices.
std::vector<StretchSample> distance_stretch(const RggSnapshot& snapshot,
                                            const ComponentLabeling& labeling,
                                            uint32_t num_pairs, uint64_t seed);

// max over samples of d_graph * r / d_E, restricted to pairs with
// d_E >= gamma_hat * log(N) / (r * N); 0 when no sample qualifies.
double stretch_constant(const std::vector<StretchSample>& samples, double r, uint32_t N,
                        double gamma_hat);

} // namespace spanet
