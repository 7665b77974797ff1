#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "spanet/percolation.hpp"
#include "spanet/rng.hpp"

using namespace spanet;

namespace {

Graph cycle(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 1; v <= n; ++v) edges.emplace_back(v, v % n + 1);
    if (n == 2) edges.pop_back();
    return Graph::from_undirected_edges(n, edges);
}

// component partition via BFS, independent of the DSU path
std::vector<uint32_t> bfs_components(const Graph& g) {
    std::vector<uint32_t> comp(g.num_vertices() + 1, 0);
    uint32_t next = 0;
    std::vector<uint32_t> queue;
    for (uint32_t s = 1; s <= g.num_vertices(); ++s) {
        if (comp[s] != 0) continue;
        comp[s] = ++next;
        queue.assign(1, s);
        for (size_t head = 0; head < queue.size(); ++head)
            for (uint32_t u : g.neighbors(queue[head]))
                if (comp[u] == 0) {
                    comp[u] = next;
                    queue.push_back(u);
                }
    }
    return comp;
}

// exhaustive-path oracle for slab crossings: union occupied cells within the
// band, then test whether any seed-column cell reaches the far column
bool crossing_exists_oracle(const OccupancyGrid& grid, int axis, uint32_t band_lo,
                            uint32_t band_hi) {
    const uint32_t g = grid.cells_per_axis;
    auto cell_at = [&](uint32_t along, uint32_t across) {
        uint32_t ix = axis == 0 ? along : across;
        uint32_t iy = axis == 0 ? across : along;
        return ix + static_cast<size_t>(g) * iy;
    };
    std::vector<size_t> parent(static_cast<size_t>(g) * g);
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (uint32_t along = 0; along < g; ++along) {
        for (uint32_t across = band_lo; across <= band_hi; ++across) {
            size_t c = cell_at(along, across);
            if (grid.min_vertex[c] == 0) continue;
            if (along + 1 < g && grid.min_vertex[cell_at(along + 1, across)] != 0)
                parent[find(c)] = find(cell_at(along + 1, across));
            if (across + 1 <= band_hi && grid.min_vertex[cell_at(along, across + 1)] != 0)
                parent[find(c)] = find(cell_at(along, across + 1));
        }
    }
    for (uint32_t a = band_lo; a <= band_hi; ++a) {
        size_t left = cell_at(0, a);
        if (grid.min_vertex[left] == 0) continue;
        for (uint32_t b = band_lo; b <= band_hi; ++b) {
            size_t right = cell_at(g - 1, b);
            if (grid.min_vertex[right] != 0 && find(left) == find(right)) return true;
        }
    }
    return false;
}

// the same band assignment the implementation documents: a row belongs to the
// slab containing its center
std::pair<std::vector<uint32_t>, std::vector<uint32_t>> slab_bands(uint32_t g,
                                                                   uint32_t num_slabs) {
    std::vector<uint32_t> lo(num_slabs, g), hi(num_slabs, 0);
    for (uint32_t j = 0; j < g; ++j) {
        auto s = std::min<uint32_t>(num_slabs - 1,
                                    static_cast<uint32_t>((j + 0.5) / g * num_slabs));
        lo[s] = std::min(lo[s], j);
        hi[s] = std::max(hi[s], j);
    }
    return {lo, hi};
}

} // namespace

TEST_CASE("components of the empty graph") {
    Graph g = Graph::from_undirected_edges(5, {});
    ComponentLabeling lab = connected_components(g);
    CHECK(lab.num_components == 5);
    CHECK(lab.giant_size == 1);
    CHECK(lab.giant_fraction == doctest::Approx(0.2));
    for (uint32_t v = 1; v <= 5; ++v) CHECK(lab.label[v] == v);
}

TEST_CASE("components of a cycle") {
    ComponentLabeling lab = connected_components(cycle(5));
    CHECK(lab.num_components == 1);
    CHECK(lab.giant_fraction == 1.0);
    CHECK(lab.giant_label == 1);
}

TEST_CASE("component labels agree with BFS partition") {
    RggSnapshot snap = generate_rgg(3000, std::sqrt(3.0 / (M_PI * 3000)), MetricMode::torus, 5);
    Graph g = snap.graph();
    ComponentLabeling lab = connected_components(g);
    std::vector<uint32_t> oracle = bfs_components(g);
    uint64_t oracle_giant = 0;
    std::vector<uint64_t> count(g.num_vertices() + 1, 0);
    for (uint32_t v = 1; v <= g.num_vertices(); ++v) oracle_giant = std::max(oracle_giant, ++count[oracle[v]]);
    CHECK(oracle_giant == lab.giant_size);
    for (uint32_t v = 1; v <= g.num_vertices(); ++v)
        for (uint32_t u = 1; u < v; u += 37)
            CHECK((lab.label[u] == lab.label[v]) == (oracle[u] == oracle[v]));
    // canonical labels: the label is the smallest member id
    for (uint32_t v = 1; v <= g.num_vertices(); ++v) CHECK(lab.label[v] <= v);
}

TEST_CASE("subsquare occupancy") {
    PointStore pts(2);
    pts.append(std::vector<double>{0.5, 0.5});
    RggSnapshot snap = rgg_from_points(std::move(pts), 0.5, MetricMode::torus);
    OccupancyGrid grid = subsquare_occupancy(snap);
    CHECK(grid.cells_per_axis == 10);
    CHECK(grid.occupied_count == 1);
    CHECK(grid.occupied(5, 5));
    CHECK(grid.vertex_in(5, 5) == 1);
    CHECK(!grid.occupied(4, 5));
}

TEST_CASE("occupancy is bounded by points and cells") {
    RggSnapshot snap = generate_rgg(500, 0.2, MetricMode::torus, 3);
    OccupancyGrid grid = subsquare_occupancy(snap);
    uint64_t cells = static_cast<uint64_t>(grid.cells_per_axis) * grid.cells_per_axis;
    CHECK(grid.occupied_count <= std::min<uint64_t>(500, cells));
    CHECK(grid.occupied_count > 0);
}

TEST_CASE("crossing found along a constructed occupied row") {
    const double r = 0.5; // 10x10 subsquare grid
    PointStore pts(2);
    for (int k = 0; k < 10; ++k)
        pts.append(std::vector<double>{k * r / 5.0 + r / 10.0, 0.5});
    RggSnapshot snap = rgg_from_points(std::move(pts), r, MetricMode::torus);
    CrossingReport report = find_crossings(snap);
    REQUIRE(report.num_slabs == 1);
    REQUIRE(report.horizontal[0].found);
    CHECK(report.horizontal[0].path.size() == 10);
    // no column of points, so no top-to-bottom crossing
    CHECK(!report.vertical[0].found);
    CHECK(!report.spanning_component_label.has_value());

    // endpoint and hop conditions from the crossing definition
    const auto& path = report.horizontal[0].path;
    CHECK(snap.points.point(path.front())[0] <= r / 5.0);
    CHECK(snap.points.point(path.back())[0] >= 1.0 - r / 5.0);
    for (size_t i = 1; i < path.size(); ++i) {
        double d = std::sqrt(euclidean_distance_sq(snap.points.point(path[i - 1]),
                                                   snap.points.point(path[i])));
        CHECK(d < r / 2.0);
    }
}

TEST_CASE("no crossing when the right half is empty") {
    PointStore pts(2);
    Rng rng(4);
    for (int i = 0; i < 300; ++i)
        pts.append(std::vector<double>{0.4 * rng.next_double(), rng.next_double()});
    RggSnapshot snap = rgg_from_points(std::move(pts), 0.3, MetricMode::torus);
    CrossingReport report = find_crossings(snap);
    for (const auto& slab : report.horizontal) CHECK(!slab.found);
}

TEST_CASE("degenerate geometry is rejected") {
    RggSnapshot snap = generate_rgg(50, 1.3, MetricMode::torus, 1); // 4 subsquares per axis
    CHECK_THROWS_AS((void)find_crossings(snap), degenerate_geometry);
}

TEST_CASE("crossing search agrees with an exhaustive oracle") {
    // random sparse point sets give a mix of crossed and uncrossed grids
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Rng rng(seed);
        uint32_t n = 40 + static_cast<uint32_t>(rng.next_below(160));
        PointStore pts(2);
        for (uint32_t i = 0; i < n; ++i)
            pts.append(std::vector<double>{rng.next_double(), rng.next_double()});
        double r = 0.2 + 0.2 * rng.next_double(); // grids up to 25x25
        RggSnapshot snap = rgg_from_points(std::move(pts), r, MetricMode::torus);
        CrossingReport report = find_crossings(snap);
        OccupancyGrid grid = subsquare_occupancy(snap);
        auto [lo, hi] = slab_bands(grid.cells_per_axis, report.num_slabs);
        for (uint32_t s = 0; s < report.num_slabs; ++s) {
            CHECK(report.horizontal[s].found == crossing_exists_oracle(grid, 0, lo[s], hi[s]));
            CHECK(report.vertical[s].found == crossing_exists_oracle(grid, 1, lo[s], hi[s]));
        }
    }
}

TEST_CASE("spanning component ties all crossings together") {
    int spanning_seen = 0;
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        uint32_t N = 2000;
        double r = std::sqrt(120.0 / (M_PI * N)); // dense enough to cross
        RggSnapshot snap = generate_rgg(N, r, MetricMode::torus, seed);
        CrossingReport report = find_crossings(snap);
        if (!report.all_crossings()) continue;
        ++spanning_seen;
        REQUIRE(report.spanning_component_label.has_value());
        ComponentLabeling lab = connected_components(snap.graph());
        for (const auto& group : {report.horizontal, report.vertical})
            for (const auto& slab : group)
                for (uint32_t v : slab.path) CHECK(lab.label[v] == *report.spanning_component_label);
    }
    CHECK(spanning_seen > 0);
}

TEST_CASE("distance stretch on a two-vertex graph") {
    const double r = 0.2;
    PointStore pts(2);
    pts.append(std::vector<double>{0.4, 0.5});
    pts.append(std::vector<double>{0.5, 0.5}); // distance r/2
    RggSnapshot snap = rgg_from_points(std::move(pts), r, MetricMode::torus);
    ComponentLabeling lab = connected_components(snap.graph());
    auto samples = distance_stretch(snap, lab, 5, 9);
    REQUIRE(samples.size() == 5);
    for (const auto& s : samples) {
        CHECK(s.d_e == doctest::Approx(r / 2.0).epsilon(1e-12));
        CHECK(s.d_graph == 1);
    }
}

TEST_CASE("distance stretch skips isolated vertices") {
    PointStore pts(2);
    pts.append(std::vector<double>{0.1, 0.1});
    pts.append(std::vector<double>{0.9, 0.9});
    RggSnapshot snap = rgg_from_points(std::move(pts), 0.05, MetricMode::torus);
    ComponentLabeling lab = connected_components(snap.graph());
    CHECK(distance_stretch(snap, lab, 3, 1).empty());
}

TEST_CASE("graph distance dominates metric distance over r") {
    RggSnapshot snap = generate_rgg(2000, std::sqrt(10.0 / (M_PI * 2000)), MetricMode::torus, 6);
    ComponentLabeling lab = connected_components(snap.graph());
    auto samples = distance_stretch(snap, lab, 50, 2);
    REQUIRE(!samples.empty());
    for (const auto& s : samples) {
        CHECK(lab.label[s.u] == lab.label[s.v]);
        CHECK(s.d_graph >= static_cast<uint32_t>(std::ceil(s.d_e / snap.r - 1e-9)));
    }
}

TEST_CASE("subcritical and supercritical densities bracket one half") {
    const uint32_t N = 4000;
    std::vector<double> low, high;
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        RggSnapshot sub = generate_rgg(N, std::sqrt(2.0 / (M_PI * N)), MetricMode::torus, seed);
        RggSnapshot sup = generate_rgg(N, std::sqrt(8.0 / (M_PI * N)), MetricMode::torus, seed);
        low.push_back(connected_components(sub.graph()).giant_fraction);
        high.push_back(connected_components(sup.graph()).giant_fraction);
    }
    std::sort(low.begin(), low.end());
    std::sort(high.begin(), high.end());
    CHECK(low[2] < 0.5);
    CHECK(high[2] > 0.5);
}
