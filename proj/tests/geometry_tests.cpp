#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spanet/geometry.hpp"
#include "spanet/rng.hpp"

using namespace spanet;

namespace {

// brute-force oracle for query_ball
std::vector<uint32_t> scan_ball(const PointStore& pts, std::span<const double> center,
                                double radius) {
    std::vector<uint32_t> out;
    for (uint32_t id = 1; id <= pts.size(); ++id)
        if (torus_distance_sq(pts.point(id), center) <= radius * radius) out.push_back(id);
    return out;
}

PointStore random_points(int dim, uint32_t n, uint64_t seed) {
    PointStore pts(dim);
    Rng rng(seed);
    std::vector<double> c(dim);
    for (uint32_t i = 0; i < n; ++i) {
        for (int a = 0; a < dim; ++a) c[a] = rng.next_double();
        pts.append(c);
    }
    return pts;
}

} // namespace

TEST_CASE("torus distance basics") {
    std::vector<double> a{0.5, 0.5}, b{0.5, 0.5};
    CHECK(torus_distance(a, b) == 0.0);

    std::vector<double> p{0.05, 0.0}, q{0.95, 0.0};
    CHECK(torus_distance(p, q) == doctest::Approx(0.1).epsilon(1e-12));

    std::vector<double> o{0.0, 0.0}, h{0.5, 0.5};
    CHECK(torus_distance(o, h) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    std::vector<double> one{0.3};
    CHECK_THROWS_AS((void)torus_distance(a, one), std::invalid_argument);
}

TEST_CASE("torus distance symmetry and triangle inequality") {
    Rng rng(42);
    for (int it = 0; it < 10000; ++it) {
        std::vector<double> p{rng.next_double(), rng.next_double()};
        std::vector<double> q{rng.next_double(), rng.next_double()};
        std::vector<double> s{rng.next_double(), rng.next_double()};
        double pq = torus_distance(p, q);
        double qp = torus_distance(q, p);
        double qs = torus_distance(q, s);
        double ps = torus_distance(p, s);
        CHECK(pq == qp);
        CHECK(pq + qs >= ps - 1e-12);
        CHECK(pq <= std::sqrt(2.0) / 2.0 + 1e-15);
    }
}

TEST_CASE("ball radius from volume") {
    CHECK(ball_radius_from_volume(0.0, 2) == 0.0);
    CHECK(ball_radius_from_volume(0.0, 5) == 0.0);
    CHECK(ball_radius_from_volume(0.01 * M_PI, 2) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(ball_radius_from_volume(0.2, 1) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS((void)ball_radius_from_volume(-1e-9, 2), std::invalid_argument);

    // c_1 = 2, c_2 = pi, c_3 = 4pi/3
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(unit_ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));
}

TEST_CASE("ball radius/volume round trip") {
    for (int m : {1, 2, 3, 4}) {
        Rng rng(100 + m);
        for (int it = 0; it < 200; ++it) {
            // log-uniform volumes over [1e-9, 1]
            double vol = std::pow(10.0, -9.0 * rng.next_double());
            double r = ball_radius_from_volume(vol, m);
            CHECK(ball_volume(r, m) == doctest::Approx(vol).epsilon(1e-12));
            // monotone in vol
            CHECK(ball_radius_from_volume(vol * 1.01, m) > r);
        }
    }
}

TEST_CASE("query_ball equals brute-force scan") {
    PointStore pts = random_points(2, 10000, 7);
    SpatialIndex index(pts, 0.03);
    Rng rng(8);
    for (int it = 0; it < 1000; ++it) {
        std::vector<double> center{rng.next_double(), rng.next_double()};
        double radius = 0.05 * rng.next_double();
        auto got = index.query_ball(center, radius);
        auto want = scan_ball(pts, center, radius);
        CHECK(got == want);
    }
}

TEST_CASE("point store rejects out-of-range coordinates") {
    PointStore pts(2);
    CHECK_THROWS_AS((void)pts.append(std::vector<double>{0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)pts.append(std::vector<double>{-0.1, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS((void)pts.append(std::vector<double>{0.5}), std::invalid_argument);
    CHECK(pts.append(std::vector<double>{0.0, 0.999}) == 1);
}

TEST_CASE("query_ball rejects negative radius") {
    PointStore pts = random_points(2, 10, 3);
    SpatialIndex index(pts, 0.2);
    CHECK_THROWS_AS((void)index.query_ball(pts.point(1), -0.1), std::invalid_argument);
}

TEST_CASE("query_ball radius zero and wrap seam") {
    PointStore pts(2);
    pts.append(std::vector<double>{0.001, 0.5}); // id 1
    pts.append(std::vector<double>{0.951, 0.5}); // id 2, across the seam
    pts.append(std::vector<double>{0.30, 0.5});  // id 3
    SpatialIndex index(pts, 0.1);

    std::vector<double> center{0.999, 0.5};
    CHECK(index.query_ball(center, 0.0).empty());
    // wraparound: id 1 is 0.002 away, id 2 is 0.048 away
    CHECK(index.query_ball(center, 0.1) == std::vector<uint32_t>{1, 2});
}

TEST_CASE("query_ball selects by distance rank") {
    PointStore pts(2);
    pts.append(std::vector<double>{0.55, 0.5}); // 0.05 from center
    pts.append(std::vector<double>{0.5, 0.6});  // 0.10
    pts.append(std::vector<double>{0.5, 0.7});  // 0.20
    SpatialIndex index(pts, 0.25);
    std::vector<double> center{0.5, 0.5};
    CHECK(index.query_ball(center, 0.1) == std::vector<uint32_t>{1, 2});
}

TEST_CASE("spatial index brute-force fallback with large cells") {
    PointStore pts = random_points(2, 500, 9);
    SpatialIndex index(pts, 0.6); // fewer than 3 cells per axis
    CHECK(index.brute_force());
    std::vector<double> center{0.1, 0.9};
    CHECK(index.query_ball(center, 0.3) == scan_ball(pts, center, 0.3));
}

TEST_CASE("spatial index in three dimensions") {
    PointStore pts = random_points(3, 2000, 11);
    SpatialIndex index(pts, 0.08);
    Rng rng(12);
    for (int it = 0; it < 100; ++it) {
        std::vector<double> center{rng.next_double(), rng.next_double(), rng.next_double()};
        double radius = 0.1 * rng.next_double();
        CHECK(index.query_ball(center, radius) == scan_ball(pts, center, radius));
    }
}

TEST_CASE("incremental insert matches rebuilt index") {
    PointStore pts(2);
    Rng rng(13);
    SpatialIndex index(pts, 0.05);
    CHECK(index.query_ball(std::vector<double>{0.5, 0.5}, 0.2).empty());
    for (int i = 0; i < 3000; ++i) {
        pts.append(std::vector<double>{rng.next_double(), rng.next_double()});
        index.insert(pts.size());
    }
    std::vector<double> center{0.25, 0.75};
    CHECK(index.query_ball(center, 0.07) == scan_ball(pts, center, 0.07));
}
