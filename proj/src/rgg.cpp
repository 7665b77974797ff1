#include "spanet/rgg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spanet/rng.hpp"

namespace spanet {

const char* metric_mode_name(MetricMode mode) {
    return mode == MetricMode::torus ? "torus" : "euclidean-square";
}

MetricMode metric_mode_from_name(const std::string& name) {
    if (name == "torus") return MetricMode::torus;
    if (name == "euclidean-square") return MetricMode::euclidean_square;
    throw std::invalid_argument("unknown metric mode: " + name);
}

namespace {

// Collects all pairs accepted by `within`, given a conservative scan radius.
// The scan always uses the torus grid; a euclidean ball is a subset of the
// torus ball of the same radius, so the prefilter is safe for both modes.
template <class Pred>
std::vector<std::pair<uint32_t, uint32_t>> proximity_edges(const PointStore& pts,
                                                           double scan_radius, MetricMode mode,
                                                           Pred&& within) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    SpatialIndex index(pts, scan_radius);
    const uint32_t n = pts.size();
    for (uint32_t v = 1; v <= n; ++v) {
        auto center = pts.point(v);
        index.for_each_in_ball(center, scan_radius, [&](uint32_t u, double torus_dsq) {
            if (u >= v) return;
            double dsq = mode == MetricMode::torus ? torus_dsq
                                                   : euclidean_distance_sq(pts.point(u), center);
            if (within(dsq)) edges.emplace_back(u, v);
        });
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace

RggSnapshot generate_rgg(uint32_t N, double r, MetricMode mode, uint64_t seed) {
    if (N < 1) throw std::invalid_argument("generate_rgg: N must be >= 1");
    if (!(r > 0.0)) throw std::invalid_argument("generate_rgg: r must be > 0");
    PointStore pts(2);
    pts.reserve(N);
    double coords[2];
    for (uint32_t i = 1; i <= N; ++i) {
        Rng stream = substream(seed, i);
        coords[0] = stream.next_double();
        coords[1] = stream.next_double();
        pts.append(coords);
    }
    RggSnapshot snap = rgg_from_points(std::move(pts), r, mode);
    snap.seed = seed;
    return snap;
}

RggSnapshot rgg_from_points(PointStore pts, double r, MetricMode mode) {
    RggSnapshot snap;
    snap.t = pts.size();
    snap.r = r;
    snap.metric = mode;
    snap.M = M_PI * static_cast<double>(snap.t) * r * r;
    double rsq = r * r;
    snap.edges = proximity_edges(pts, r, mode, [rsq](double dsq) { return dsq <= rsq; });
    snap.points = std::move(pts);
    return snap;
}

RggSnapshot snapshot(const SpaGraph& g, uint32_t t) {
    if (g.params.m != 2)
        throw unsupported_dimension("snapshot: defined for dimension m = 2 only");
    if (t < 1 || t > g.n()) throw std::invalid_argument("snapshot: t out of range");

    RggSnapshot snap;
    snap.t = t;
    snap.metric = MetricMode::torus;
    double td = static_cast<double>(t);
    snap.r = std::sqrt(g.params.A2 / (td * M_PI));
    snap.M = g.params.A2;
    snap.seed = g.params.seed;

    PointStore pts(2);
    pts.reserve(t);
    for (uint32_t v = 1; v <= t; ++v) pts.append(g.positions.point(v));

    // Edge rule in volume space, pi*d^2*t <= A2, matching the generator's
    // sphere test exactly so that R_t c G_t holds with zero tolerance at p=1.
    double A2 = g.params.A2;
    double scan_radius = std::min(snap.r * (1.0 + 1e-9), std::sqrt(2.0));
    snap.edges = proximity_edges(pts, scan_radius, MetricMode::torus,
                                 [A2, td](double dsq) { return M_PI * dsq * td <= A2; });
    snap.points = std::move(pts);
    return snap;
}

std::vector<uint32_t> snapshot_levels(uint32_t n) {
    std::vector<uint32_t> levels{n};
    double log_n = std::log(static_cast<double>(n));
    while (levels.back() > log_n && levels.back() > 1) levels.push_back(levels.back() / 2);
    return levels;
}

std::vector<RggSnapshot> snapshot_hierarchy(const SpaGraph& g) {
    std::vector<RggSnapshot> out;
    for (uint32_t t : snapshot_levels(g.n())) out.push_back(snapshot(g, t));
    return out;
}

} // namespace spanet
