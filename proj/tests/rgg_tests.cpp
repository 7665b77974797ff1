#include <doctest.h>

#include <cmath>
#include <unordered_set>

#include "spanet/rgg.hpp"
#include "spanet/rng.hpp"

using namespace spanet;

TEST_CASE("single vertex rgg") {
    RggSnapshot snap = generate_rgg(1, 0.3, MetricMode::torus, 1);
    CHECK(snap.t == 1);
    CHECK(snap.edges.empty());
}

TEST_CASE("forced two-point rgg") {
    PointStore pts(2);
    pts.append(std::vector<double>{0.10, 0.5});
    pts.append(std::vector<double>{0.15, 0.5});
    RggSnapshot snap = rgg_from_points(std::move(pts), 0.1, MetricMode::torus);
    REQUIRE(snap.edges.size() == 1);
    CHECK(snap.edges[0] == std::pair<uint32_t, uint32_t>{1, 2});
}

TEST_CASE("rgg edges match pairwise scan in both metrics") {
    for (MetricMode mode : {MetricMode::torus, MetricMode::euclidean_square}) {
        RggSnapshot snap = generate_rgg(600, 0.045, mode, 77);
        std::unordered_set<uint64_t> got(snap.edges.size() * 2);
        for (auto [u, v] : snap.edges) got.insert(static_cast<uint64_t>(u) << 32 | v);
        uint64_t expected = 0;
        for (uint32_t v = 1; v <= snap.t; ++v) {
            for (uint32_t u = 1; u < v; ++u) {
                double dsq = mode == MetricMode::torus
                                 ? torus_distance_sq(snap.points.point(u), snap.points.point(v))
                                 : euclidean_distance_sq(snap.points.point(u),
                                                         snap.points.point(v));
                if (dsq <= snap.r * snap.r) {
                    ++expected;
                    CHECK(got.count(static_cast<uint64_t>(u) << 32 | v) == 1);
                }
            }
        }
        CHECK(snap.edges.size() == expected);
    }
}

TEST_CASE("mean degree tracks pi N r^2") {
    const uint32_t N = 5000;
    double r = std::sqrt(10.0 / (M_PI * N));
    int hits = 0;
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        RggSnapshot snap = generate_rgg(N, r, MetricMode::torus, seed);
        double mean_degree = 2.0 * static_cast<double>(snap.edges.size()) / N;
        if (std::fabs(mean_degree - 10.0) <= 1.0) ++hits;
    }
    CHECK(hits == 20);
}

TEST_CASE("snapshot radii") {
    SpaParams prm{2, 0.0, M_PI, 1.0, 400, 8};
    SpaGraph g = generate(prm);
    CHECK(snapshot(g, 100).r == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(snapshot(g, 400).r == doctest::Approx(0.05).epsilon(1e-12));

    // halving: r_{2t} = r_t / sqrt(2), i.e. r^2 * t is constant
    RggSnapshot a = snapshot(g, 200), b = snapshot(g, 400);
    CHECK(a.r * a.r * 200.0 == doctest::Approx(b.r * b.r * 400.0).epsilon(1e-12));
    CHECK(b.r == doctest::Approx(a.r / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(a.M == doctest::Approx(prm.A2).epsilon(1e-12));
}

TEST_CASE("snapshot argument errors") {
    SpaParams prm{2, 0.5, 1.0, 1.0, 50, 8};
    SpaGraph g = generate(prm);
    CHECK_THROWS_AS((void)snapshot(g, 51), std::invalid_argument);
    CHECK_THROWS_AS((void)snapshot(g, 0), std::invalid_argument);

    SpaParams prm3{3, 0.5, 1.0, 1.0, 50, 8};
    SpaGraph g3 = generate(prm3);
    CHECK_THROWS_AS((void)snapshot(g3, 10), unsupported_dimension);
}

TEST_CASE("snapshot level list") {
    CHECK(snapshot_levels(16) == std::vector<uint32_t>{16, 8, 4, 2});
    CHECK(snapshot_levels(2) == std::vector<uint32_t>{2, 1});
    CHECK(snapshot_levels(1) == std::vector<uint32_t>{1});
    // first level at or below log n ends the list
    auto levels = snapshot_levels(100000);
    CHECK(levels.front() == 100000);
    CHECK(levels.back() <= std::log(1e5));
    CHECK(levels[levels.size() - 2] > std::log(1e5));
}

TEST_CASE("snapshots are subgraphs of the SPA graph at p=1") {
    SpaParams prm{2, 0.5, 5.0, 1.0, 600, 21};
    SpaGraph g = generate(prm);
    std::unordered_set<uint64_t> spa_edges(g.edges.size() * 2);
    for (const SpaEdge& e : g.edges)
        spa_edges.insert(static_cast<uint64_t>(e.child) << 32 | e.parent);

    for (const RggSnapshot& snap : snapshot_hierarchy(g)) {
        for (auto [i, j] : snap.edges) {
            REQUIRE(i < j);
            // snapshot edge {i,j} must exist as SPA edge (j, i), exactly
            CHECK(spa_edges.count(static_cast<uint64_t>(j) << 32 | i) == 1);
        }
    }
}
