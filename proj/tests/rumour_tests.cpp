#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "spanet/percolation.hpp"
#include "spanet/rumour.hpp"
#include "spanet/spa_graph.hpp"

using namespace spanet;

namespace {

Graph path3() {
    return Graph::from_undirected_edges(3, std::vector<std::pair<uint32_t, uint32_t>>{{1, 2},
                                                                                      {2, 3}});
}

// center 1, leaves 2..5
Graph star5() {
    return Graph::from_undirected_edges(
        5, std::vector<std::pair<uint32_t, uint32_t>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}});
}

ProtocolConfig cfg(Protocol protocol, uint32_t source, uint64_t seed) {
    ProtocolConfig c;
    c.protocol = protocol;
    c.source = source;
    c.max_rounds = 10000;
    c.seed = seed;
    return c;
}

} // namespace

TEST_CASE("push&pull on a 3-path from the middle takes one round") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        RumourTrace trace = run(path3(), cfg(Protocol::push_and_pull, 2, seed));
        REQUIRE(trace.spread_time.has_value());
        CHECK(*trace.spread_time == 1); // both leaves pull from their only neighbour
    }
}

TEST_CASE("push&pull on a star from a leaf takes exactly two rounds") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        RumourTrace trace = run(star5(), cfg(Protocol::push_and_pull, 2, seed));
        REQUIRE(trace.spread_time.has_value());
        CHECK(*trace.spread_time == 2);
        CHECK(trace.informed_count_per_round[0] == 2); // source + center
    }
}

TEST_CASE("push-only star spread from the center is slow") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        RumourTrace trace = run(star5(), cfg(Protocol::push, 1, seed));
        REQUIRE(trace.spread_time.has_value());
        // the center informs at most one leaf per round (four leaves), so
        // the documented lower bound of 3 holds with room to spare
        CHECK(*trace.spread_time >= 4);
    }
}

TEST_CASE("isolated source") {
    Graph g = Graph::from_undirected_edges(4, std::vector<std::pair<uint32_t, uint32_t>>{{1, 2}});
    RumourTrace trace = run(g, cfg(Protocol::push_and_pull, 3, 5));
    REQUIRE(trace.spread_time.has_value());
    CHECK(*trace.spread_time == 0);
    CHECK(trace.rounds.empty());
    CHECK(trace.component_size == 1);
}

TEST_CASE("unknown source is rejected") {
    CHECK_THROWS_AS((void)run(path3(), cfg(Protocol::push, 9, 1)), std::invalid_argument);
    CHECK_THROWS_AS((void)run(path3(), cfg(Protocol::push, 0, 1)), std::invalid_argument);
    ProtocolConfig zero_rounds = cfg(Protocol::push, 1, 1);
    zero_rounds.max_rounds = 0;
    CHECK_THROWS_AS((void)run(path3(), zero_rounds), std::invalid_argument);
}

TEST_CASE("trace bookkeeping invariants") {
    SpaParams prm{2, 0.5, 3.0, 1.0, 400, 44};
    SpaGraph g = generate(prm);
    Graph und = undirected_view(g);
    ComponentLabeling lab = connected_components(und);
    uint32_t source = 0;
    for (uint32_t v = 1; v <= g.n(); ++v)
        if (lab.label[v] == lab.giant_label) {
            source = v;
            break;
        }
    REQUIRE(source != 0);

    RumourTrace trace = run(und, cfg(Protocol::push_and_pull, source, 7));
    REQUIRE(trace.spread_time.has_value());
    CHECK(trace.component_size == lab.giant_size);
    CHECK(trace.informed_count_per_round.back() == trace.component_size);

    auto dist = bfs_distances(und, source);
    uint32_t prev = 1;
    for (size_t k = 0; k < trace.rounds.size(); ++k) {
        uint32_t round = static_cast<uint32_t>(k + 1);
        CHECK(trace.informed_count_per_round[k] >= prev); // nondecreasing
        prev = trace.informed_count_per_round[k];
        for (uint32_t v : trace.rounds[k].newly_informed) {
            CHECK(lab.label[v] == lab.label[source]);
            // a vertex at BFS distance d is never informed before round d
            CHECK(static_cast<uint32_t>(dist[v]) <= round);
        }
        for (const Transmission& tr : trace.rounds[k].transmissions) {
            CHECK(trace.informed_at[tr.to] == round);
            CHECK(trace.informed_at[tr.from] < round); // knew it at round start
            auto nb = und.neighbors(tr.from);
            CHECK(std::find(nb.begin(), nb.end(), tr.to) != nb.end());
        }
    }
}

TEST_CASE("push informed count at most doubles per round") {
    SpaParams prm{2, 0.4, 2.0, 1.0, 300, 15};
    SpaGraph g = generate(prm);
    Graph und = undirected_view(g);
    RumourTrace trace = run(und, cfg(Protocol::push, 1, 3));
    uint32_t prev = 1;
    for (uint32_t count : trace.informed_count_per_round) {
        CHECK(count <= 2 * prev);
        prev = count;
    }
}

TEST_CASE("identical config gives identical traces") {
    SpaParams prm{2, 0.5, 2.0, 0.9, 300, 8};
    Graph und = undirected_view(generate(prm));
    RumourTrace a = run(und, cfg(Protocol::push_and_pull, 1, 42));
    RumourTrace b = run(und, cfg(Protocol::push_and_pull, 1, 42));
    CHECK(a.spread_time == b.spread_time);
    REQUIRE(a.rounds.size() == b.rounds.size());
    for (size_t k = 0; k < a.rounds.size(); ++k) {
        CHECK(a.rounds[k].newly_informed == b.rounds[k].newly_informed);
        REQUIRE(a.rounds[k].transmissions.size() == b.rounds[k].transmissions.size());
        for (size_t i = 0; i < a.rounds[k].transmissions.size(); ++i) {
            CHECK(a.rounds[k].transmissions[i].from == b.rounds[k].transmissions[i].from);
            CHECK(a.rounds[k].transmissions[i].to == b.rounds[k].transmissions[i].to);
        }
    }
}

TEST_CASE("push&pull is not slower than push on a fixed graph") {
    RggSnapshot snap = generate_rgg(500, std::sqrt(12.0 / (M_PI * 500)), MetricMode::torus, 10);
    Graph g = snap.graph();
    ComponentLabeling lab = connected_components(g);
    uint32_t source = lab.giant_label;

    std::vector<double> push_times, pp_times;
    for (uint64_t seed = 1; seed <= 200; ++seed) {
        auto push_trace = run(g, cfg(Protocol::push, source, seed));
        auto pp_trace = run(g, cfg(Protocol::push_and_pull, source, seed));
        REQUIRE(push_trace.spread_time.has_value());
        REQUIRE(pp_trace.spread_time.has_value());
        push_times.push_back(*push_trace.spread_time);
        pp_times.push_back(*pp_trace.spread_time);
    }
    std::sort(push_times.begin(), push_times.end());
    std::sort(pp_times.begin(), pp_times.end());
    CHECK(pp_times[100] <= push_times[100]);
}

TEST_CASE("containment radius") {
    PointStore pts(2);
    pts.append(std::vector<double>{0.2, 0.2});
    pts.append(std::vector<double>{0.2, 0.5}); // 0.3 from the source
    pts.append(std::vector<double>{0.9, 0.9});

    RumourTrace trace;
    trace.informed_at = {UINT32_MAX, 0, UINT32_MAX, UINT32_MAX};
    CHECK(containment_radius(trace, pts, 1) == 0.0);

    trace.informed_at[2] = 1;
    CHECK(containment_radius(trace, pts, 1) == doctest::Approx(0.3).epsilon(1e-12));
    // cut off before the vertex was informed
    CHECK(containment_radius(trace, pts, 1, 0) == 0.0);
}

TEST_CASE("short transmissions bound the containment radius by rounds * L") {
    SpaParams prm{2, 0.5, 2.0, 1.0, 600, 23};
    SpaGraph g = generate(prm);
    Graph und = undirected_view(g);
    const double L = 0.08;

    ProtocolConfig c = cfg(Protocol::push_and_pull, 1, 77);
    RumourTrace trace = run(und, c, &g.positions, L);
    REQUIRE(trace.long_edge_transmissions.has_value());

    // through every long-free prefix, the informed set stays in a ball of
    // radius rounds * L
    uint64_t long_so_far = 0;
    for (uint32_t k = 1; k <= trace.rounds.size(); ++k) {
        long_so_far += trace.rounds[k - 1].long_transmissions;
        if (long_so_far > 0) break;
        CHECK(containment_radius(trace, g.positions, 1, k) <= k * L + 1e-12);
    }
}

TEST_CASE("long transmissions are counted against the cutoff") {
    PointStore pts(2);
    pts.append(std::vector<double>{0.1, 0.5});
    pts.append(std::vector<double>{0.45, 0.5}); // edge length 0.35
    Graph g = Graph::from_undirected_edges(2, std::vector<std::pair<uint32_t, uint32_t>>{{1, 2}});

    RumourTrace with_long = run(g, cfg(Protocol::push, 1, 1), &pts, 0.2);
    REQUIRE(with_long.long_edge_transmissions.has_value());
    CHECK(*with_long.long_edge_transmissions == 1);

    RumourTrace with_short = run(g, cfg(Protocol::push, 1, 1), &pts, 0.5);
    CHECK(*with_short.long_edge_transmissions == 0);

    RumourTrace unmeasured = run(g, cfg(Protocol::push, 1, 1));
    CHECK(!unmeasured.long_edge_transmissions.has_value());
}
