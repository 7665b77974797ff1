#include "spanet/spa_graph.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "spanet/rng.hpp"

namespace spanet {

void SpaParams::validate() const {
    if (m < 1 || m > 16) throw std::invalid_argument("SpaParams: dimension m must be in [1,16]");
    if (!(A1 >= 0.0 && A1 < 1.0)) throw std::invalid_argument("SpaParams: A1 must be in [0,1)");
    if (!(A2 > 0.0)) throw std::invalid_argument("SpaParams: A2 must be > 0");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("SpaParams: p must be in (0,1]");
    if (n < 1) throw std::invalid_argument("SpaParams: n must be >= 1");
}

uint32_t SpaGraph::in_degree_at(uint32_t v, uint32_t t) const {
    const auto& ev = in_events[v];
    return static_cast<uint32_t>(std::upper_bound(ev.begin(), ev.end(), t) - ev.begin());
}

uint32_t SpaGraph::in_degree_before(uint32_t v, uint32_t t) const {
    const auto& ev = in_events[v];
    return static_cast<uint32_t>(std::lower_bound(ev.begin(), ev.end(), t) - ev.begin());
}

uint32_t SpaGraph::degree_at(uint32_t v, uint32_t t) const {
    if (t < v) return 0;
    return in_degree_at(v, t) + out_degree[v];
}

double influence_volume(uint32_t indeg, uint32_t t, const SpaParams& prm) {
    if (t < 1) throw std::invalid_argument("influence_volume: t must be >= 1");
    double raw = (prm.A1 * indeg + prm.A2) / t;
    return raw > 1.0 ? 1.0 : raw;
}

bool sphere_contains(double dist_sq, uint32_t indeg, uint32_t t, const SpaParams& prm) {
    double num = prm.A1 * indeg + prm.A2; // t * A(v,t), uncapped
    double td = static_cast<double>(t);
    if (num >= td) return true; // sphere covers all of S
    if (prm.m == 2) return M_PI * dist_sq * td <= num;
    return ball_volume(std::sqrt(dist_sq), prm.m) * td <= num;
}

SpaGraph generate(const SpaParams& prm) {
    prm.validate();
    SpaGraph g;
    g.params = prm;
    g.positions = PointStore(prm.m);
    g.positions.reserve(prm.n);
    g.in_events.assign(prm.n + 1, {});
    g.out_degree.assign(prm.n + 1, 0);

    std::vector<uint32_t> indeg(prm.n + 1, 0);
    uint32_t maxdeg = 0;

    std::optional<SpatialIndex> index;
    double built_radius = 0.0;

    std::vector<double> coords(prm.m);
    std::vector<uint32_t> candidates;

    for (uint32_t t = 1; t <= prm.n; ++t) {
        // per-step substream: position draw first, then parent coins in
        // increasing parent id
        Rng stream = substream(prm.seed, t);
        for (int a = 0; a < prm.m; ++a) coords[a] = stream.next_double();
        std::span<const double> center{coords};

        if (t > 1) {
            double td = static_cast<double>(t);
            double num_max = prm.A1 * maxdeg + prm.A2;
            double r_query;
            if (num_max >= td) {
                r_query = std::sqrt(static_cast<double>(prm.m)); // covers the torus
            } else {
                // slightly inflated so the grid prefilter never drops a point
                // that the exact volume-space test would accept
                r_query = ball_radius_from_volume(num_max / td, prm.m) * (1.0 + 1e-9);
            }
            if (!index || r_query < built_radius / 2.0) {
                index.emplace(g.positions, r_query);
                built_radius = r_query;
            }
            candidates.clear();
            index->for_each_in_ball(center, r_query, [&](uint32_t id, double dsq) {
                if (sphere_contains(dsq, indeg[id], t, prm)) candidates.push_back(id);
            });
            std::sort(candidates.begin(), candidates.end());
            for (uint32_t u : candidates) {
                if (stream.next_double() < prm.p) {
                    g.edges.push_back({t, u});
                    g.in_events[u].push_back(t);
                    if (++indeg[u] > maxdeg) maxdeg = indeg[u];
                    ++g.out_degree[t];
                }
            }
        }

        g.positions.append(coords);
        if (index) index->insert(t);
    }
    return g;
}

Graph undirected_view(const SpaGraph& g) {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    pairs.reserve(g.edges.size());
    for (const SpaEdge& e : g.edges) pairs.emplace_back(e.child, e.parent);
    return Graph::from_undirected_edges(g.n(), pairs);
}

} // namespace spanet
