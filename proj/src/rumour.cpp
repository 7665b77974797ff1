#include "spanet/rumour.hpp"

#include <algorithm>
#include <stdexcept>

#include "spanet/rng.hpp"

namespace spanet {

const char* protocol_name(Protocol p) {
    return p == Protocol::push ? "push" : "push-and-pull";
}

Protocol protocol_from_name(const std::string& name) {
    if (name == "push") return Protocol::push;
    if (name == "push-and-pull" || name == "push-pull" || name == "pushpull")
        return Protocol::push_and_pull;
    throw std::invalid_argument("unknown protocol: " + name);
}

RumourTrace run(const Graph& g, const ProtocolConfig& cfg, const PointStore* positions,
                std::optional<double> L, uint32_t stop_at_count) {
    const uint32_t n = g.num_vertices();
    if (cfg.source < 1 || cfg.source > n)
        throw std::invalid_argument("rumour::run: unknown source id");
    if (cfg.max_rounds < 1) throw std::invalid_argument("rumour::run: max_rounds must be >= 1");
    const bool measure_long = positions != nullptr && L.has_value();

    RumourTrace trace;
    trace.source = cfg.source;
    trace.informed_at.assign(n + 1, UINT32_MAX);
    trace.informed_at[cfg.source] = 0;
    if (measure_long) trace.long_edge_transmissions = 0;

    // the rumour can never leave the source's component
    {
        auto dist = bfs_distances(g, cfg.source);
        trace.component_size = 0;
        for (uint32_t v = 1; v <= n; ++v)
            if (dist[v] >= 0) ++trace.component_size;
    }

    std::vector<uint32_t> informed_list{cfg.source}; // in order informed
    uint32_t informed_count = 1;
    if (informed_count == trace.component_size) {
        trace.spread_time = 0;
        return trace;
    }

    auto edge_is_long = [&](uint32_t a, uint32_t b) {
        return torus_distance(positions->point(a), positions->point(b)) > *L;
    };

    std::vector<uint32_t> new_targets;
    for (uint32_t round = 1; round <= cfg.max_rounds; ++round) {
        RoundRecord rec;
        new_targets.clear();

        // informed vertices push along one uniformly random incident edge
        for (uint32_t v : informed_list) {
            uint32_t deg = g.degree(v);
            if (deg == 0) continue;
            Rng stream = substream(cfg.seed, round, v);
            uint32_t w = g.neighbors(v)[stream.next_below(deg)];
            if (trace.informed_at[w] == UINT32_MAX) {
                rec.transmissions.push_back({v, w, Via::push});
                new_targets.push_back(w);
            }
        }
        // uninformed vertices pull; success iff the contact was informed at
        // the round's start
        if (cfg.protocol == Protocol::push_and_pull) {
            for (uint32_t v = 1; v <= n; ++v) {
                if (trace.informed_at[v] != UINT32_MAX) continue;
                uint32_t deg = g.degree(v);
                if (deg == 0) continue;
                Rng stream = substream(cfg.seed, round, v);
                uint32_t w = g.neighbors(v)[stream.next_below(deg)];
                if (trace.informed_at[w] != UINT32_MAX && trace.informed_at[w] < round) {
                    rec.transmissions.push_back({w, v, Via::pull});
                    new_targets.push_back(v);
                }
            }
        }

        if (measure_long) {
            for (const Transmission& tr : rec.transmissions)
                if (edge_is_long(tr.from, tr.to)) ++rec.long_transmissions;
            *trace.long_edge_transmissions += rec.long_transmissions;
        }

        std::sort(new_targets.begin(), new_targets.end());
        new_targets.erase(std::unique(new_targets.begin(), new_targets.end()),
                          new_targets.end());
        for (uint32_t w : new_targets) {
            trace.informed_at[w] = round;
            informed_list.push_back(w);
        }
        informed_count += static_cast<uint32_t>(new_targets.size());
        rec.newly_informed = new_targets;
        trace.rounds.push_back(std::move(rec));
        trace.informed_count_per_round.push_back(informed_count);

        if (informed_count == trace.component_size) {
            trace.spread_time = round;
            break;
        }
        if (stop_at_count != 0 && informed_count >= stop_at_count) break;
    }
    return trace;
}

double containment_radius(const RumourTrace& trace, const PointStore& positions,
                          uint32_t source, uint32_t through_round) {
    double best = 0.0;
    auto src = positions.point(source);
    for (uint32_t v = 1; v < trace.informed_at.size(); ++v) {
        uint32_t r = trace.informed_at[v];
        if (r == UINT32_MAX || r > through_round) continue;
        best = std::max(best, torus_distance(positions.point(v), src));
    }
    return best;
}

} // namespace spanet
