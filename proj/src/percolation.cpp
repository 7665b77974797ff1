#include "spanet/percolation.hpp"

#include <algorithm>
#include <cmath>

#include "spanet/rng.hpp"

namespace spanet {

namespace {

struct Dsu {
    std::vector<uint32_t> parent;
    std::vector<uint32_t> size;

    explicit Dsu(uint32_t n) : parent(n + 1), size(n + 1, 1) {
        for (uint32_t v = 0; v <= n; ++v) parent[v] = v;
    }
    uint32_t find(uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]]; // path halving
            v = parent[v];
        }
        return v;
    }
    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

} // namespace

uint32_t ComponentLabeling::size_of(uint32_t lbl) const {
    auto it = std::lower_bound(component_labels.begin(), component_labels.end(), lbl);
    if (it == component_labels.end() || *it != lbl) return 0;
    return component_sizes[it - component_labels.begin()];
}

ComponentLabeling connected_components(const Graph& g) {
    const uint32_t n = g.num_vertices();
    ComponentLabeling out;
    out.label.assign(n + 1, 0);
    if (n == 0) return out;

    Dsu dsu(n);
    for (uint32_t v = 1; v <= n; ++v)
        for (uint32_t u : g.neighbors(v))
            if (u < v) dsu.unite(u, v);

    // canonical label: smallest id in the component
    std::vector<uint32_t> canon(n + 1, 0);
    for (uint32_t v = 1; v <= n; ++v) {
        uint32_t root = dsu.find(v);
        if (canon[root] == 0) canon[root] = v;
        out.label[v] = canon[root];
    }

    std::vector<uint32_t> count(n + 1, 0);
    for (uint32_t v = 1; v <= n; ++v) ++count[out.label[v]];
    for (uint32_t lbl = 1; lbl <= n; ++lbl) {
        if (count[lbl] == 0) continue;
        out.component_labels.push_back(lbl);
        out.component_sizes.push_back(count[lbl]);
        ++out.num_components;
        if (count[lbl] > out.giant_size) {
            out.giant_size = count[lbl];
            out.giant_label = lbl;
        }
    }
    out.giant_fraction = static_cast<double>(out.giant_size) / n;
    return out;
}

OccupancyGrid subsquare_occupancy(const RggSnapshot& snapshot) {
    OccupancyGrid grid;
    grid.cells_per_axis = static_cast<uint32_t>(std::ceil(5.0 / snapshot.r));
    if (grid.cells_per_axis < 1) grid.cells_per_axis = 1;
    const uint32_t g = grid.cells_per_axis;
    grid.min_vertex.assign(static_cast<size_t>(g) * g, 0);
    for (uint32_t v = 1; v <= snapshot.t; ++v) {
        auto p = snapshot.points.point(v);
        uint32_t ix = std::min<uint32_t>(g - 1, static_cast<uint32_t>(p[0] * g));
        uint32_t iy = std::min<uint32_t>(g - 1, static_cast<uint32_t>(p[1] * g));
        uint32_t& slot = grid.min_vertex[ix + static_cast<size_t>(g) * iy];
        if (slot == 0 || v < slot) slot = v;
    }
    for (uint32_t slot : grid.min_vertex)
        if (slot != 0) ++grid.occupied_count;
    return grid;
}

bool CrossingReport::all_crossings() const {
    for (const auto& c : horizontal)
        if (!c.found) return false;
    for (const auto& c : vertical)
        if (!c.found) return false;
    return !horizontal.empty();
}

namespace {

// Flood fill over occupied subsquares restricted to rows/columns of one slab.
// `axis` 0: left-to-right (seed column 0, target column g-1, rows in
// [band_lo, band_hi]); axis 1: top-to-bottom, transposed.
SlabCrossing subsquare_crossing(const OccupancyGrid& grid, int axis, uint32_t band_lo,
                                uint32_t band_hi) {
    const uint32_t g = grid.cells_per_axis;
    auto cell_at = [&](uint32_t along, uint32_t across) {
        // `along` runs in the crossing direction, `across` spans the band
        uint32_t ix = axis == 0 ? along : across;
        uint32_t iy = axis == 0 ? across : along;
        return ix + static_cast<size_t>(g) * iy;
    };

    std::vector<int32_t> parent(static_cast<size_t>(g) * g, -2); // -2 unvisited, -1 seed
    std::vector<uint32_t> queue;
    for (uint32_t across = band_lo; across <= band_hi; ++across) {
        size_t c = cell_at(0, across);
        if (grid.min_vertex[c] != 0) {
            parent[c] = -1;
            queue.push_back(static_cast<uint32_t>(c));
        }
    }

    SlabCrossing crossing;
    size_t goal = SIZE_MAX;
    for (size_t head = 0; head < queue.size() && goal == SIZE_MAX; ++head) {
        size_t c = queue[head];
        uint32_t ix = static_cast<uint32_t>(c % g);
        uint32_t iy = static_cast<uint32_t>(c / g);
        uint32_t along = axis == 0 ? ix : iy;
        uint32_t across = axis == 0 ? iy : ix;
        if (along == g - 1) {
            goal = c;
            break;
        }
        const int d_along[4] = {1, -1, 0, 0};
        const int d_across[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            int64_t na = static_cast<int64_t>(along) + d_along[k];
            int64_t nb = static_cast<int64_t>(across) + d_across[k];
            if (na < 0 || na >= g || nb < static_cast<int64_t>(band_lo) ||
                nb > static_cast<int64_t>(band_hi))
                continue;
            size_t nc = cell_at(static_cast<uint32_t>(na), static_cast<uint32_t>(nb));
            if (parent[nc] != -2 || grid.min_vertex[nc] == 0) continue;
            parent[nc] = static_cast<int32_t>(c);
            queue.push_back(static_cast<uint32_t>(nc));
        }
    }
    if (goal == SIZE_MAX) return crossing;

    crossing.found = true;
    for (int64_t c = static_cast<int64_t>(goal); c != -1; c = parent[c])
        crossing.path.push_back(grid.min_vertex[c]);
    std::reverse(crossing.path.begin(), crossing.path.end());
    return crossing;
}

} // namespace

CrossingReport find_crossings(const RggSnapshot& snapshot) {
    if (snapshot.t < 3) throw std::invalid_argument("find_crossings: need N >= 3");

    CrossingReport report;
    const double N = static_cast<double>(snapshot.t);
    report.W = snapshot.M * snapshot.r * std::log(N);
    report.num_slabs = std::max<uint32_t>(1, static_cast<uint32_t>(std::floor(1.0 / report.W)));
    report.slab_width = 1.0 / report.num_slabs;

    OccupancyGrid grid = subsquare_occupancy(snapshot);
    const uint32_t g = grid.cells_per_axis;
    if (g < 5)
        throw degenerate_geometry("find_crossings: fewer than 5 subsquares per slab side");
    if (report.num_slabs > g)
        throw degenerate_geometry("find_crossings: slab thinner than one subsquare");

    // subsquare row/column j belongs to the slab containing its center
    auto slab_of = [&](uint32_t j) {
        auto s = static_cast<uint32_t>((j + 0.5) / g * report.num_slabs);
        return std::min(s, report.num_slabs - 1);
    };
    std::vector<uint32_t> band_lo(report.num_slabs, g), band_hi(report.num_slabs, 0);
    for (uint32_t j = 0; j < g; ++j) {
        uint32_t s = slab_of(j);
        band_lo[s] = std::min(band_lo[s], j);
        band_hi[s] = std::max(band_hi[s], j);
    }
    for (uint32_t s = 0; s < report.num_slabs; ++s)
        if (band_lo[s] > band_hi[s])
            throw degenerate_geometry("find_crossings: empty slab band");

    for (uint32_t s = 0; s < report.num_slabs; ++s) {
        report.horizontal.push_back(subsquare_crossing(grid, 0, band_lo[s], band_hi[s]));
        report.vertical.push_back(subsquare_crossing(grid, 1, band_lo[s], band_hi[s]));
    }

    if (report.all_crossings()) {
        ComponentLabeling labeling = connected_components(snapshot.graph());
        report.spanning_component_label = labeling.label[report.horizontal[0].path[0]];
    }
    return report;
}

std::vector<StretchSample> distance_stretch(const RggSnapshot& snapshot,
                                            const ComponentLabeling& labeling,
                                            uint32_t num_pairs, uint64_t seed) {
    if (num_pairs < 1) throw std::invalid_argument("distance_stretch: num_pairs must be >= 1");

    // group vertices by component; only components with >= 2 vertices can
    // contribute a connected pair
    std::vector<std::vector<uint32_t>> members;
    std::vector<uint64_t> cum_weight;
    uint64_t total = 0;
    {
        std::vector<std::vector<uint32_t>> by_label(snapshot.t + 1);
        for (uint32_t v = 1; v <= snapshot.t; ++v) by_label[labeling.label[v]].push_back(v);
        for (auto& vs : by_label) {
            if (vs.size() < 2) continue;
            total += static_cast<uint64_t>(vs.size()) * (vs.size() - 1);
            members.push_back(std::move(vs));
            cum_weight.push_back(total);
        }
    }
    std::vector<StretchSample> samples;
    if (total == 0) return samples;

    Graph graph = snapshot.graph();
    BfsScratch scratch;
    Rng rng = substream(seed, 0x5f3e);
    for (uint32_t k = 0; k < num_pairs; ++k) {
        uint64_t x = rng.next_below(total);
        size_t c = std::upper_bound(cum_weight.begin(), cum_weight.end(), x) - cum_weight.begin();
        const auto& vs = members[c];
        uint32_t ui = static_cast<uint32_t>(rng.next_below(vs.size()));
        uint32_t vi = static_cast<uint32_t>(rng.next_below(vs.size() - 1));
        if (vi >= ui) ++vi;
        StretchSample s;
        s.u = vs[ui];
        s.v = vs[vi];
        auto pu = snapshot.points.point(s.u);
        auto pv = snapshot.points.point(s.v);
        s.d_e = snapshot.metric == MetricMode::torus ? torus_distance(pu, pv)
                                                     : std::sqrt(euclidean_distance_sq(pu, pv));
        s.d_graph = static_cast<uint32_t>(scratch.distance(graph, s.u, s.v));
        samples.push_back(s);
    }
    return samples;
}

double stretch_constant(const std::vector<StretchSample>& samples, double r, uint32_t N,
                        double gamma_hat) {
    double threshold = gamma_hat * std::log(static_cast<double>(N)) / (r * N);
    double best = 0.0;
    for (const auto& s : samples)
        if (s.d_e >= threshold && s.d_e > 0.0)
            best = std::max(best, s.d_graph * r / s.d_e);
    return best;
}

} // namespace spanet
