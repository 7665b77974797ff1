#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace spanet {

// ---- torus metric on the unit hypercube -----------------------------------

// Squared torus distance; per axis the displacement is min(|d|, 1-|d|).
// Throws std::invalid_argument on dimension mismatch.
double torus_distance_sq(std::span<const double> p, std::span<const double> q);
double torus_distance(std::span<const double> p, std::span<const double> q);

// Squared Euclidean distance on the plain unit square/cube (no wraparound).
double euclidean_distance_sq(std::span<const double> p, std::span<const double> q);

// Largest possible torus distance, sqrt(m)/2.
double max_torus_distance(int m);

// ---- ball volume <-> radius ------------------------------------------------

// Volume of the unit m-ball, pi^{m/2} / Gamma(m/2 + 1).
double unit_ball_volume(int m);

// c_m * r^m
double ball_volume(double radius, int m);

// Inverse map (vol / c_m)^{1/m}; throws std::invalid_argument for vol < 0.
double ball_radius_from_volume(double vol, int m);

// ---- point storage ---------------------------------------------------------

// Flat coordinate store. Point ids are 1-based; id v occupies the slice
// [(v-1)*dim, v*dim) of the coordinate array.
class PointStore {
public:
    explicit PointStore(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    uint32_t size() const { return static_cast<uint32_t>(coords_.size() / dim_); }

    std::span<const double> point(uint32_t id) const {
        return {coords_.data() + static_cast<size_t>(id - 1) * dim_, static_cast<size_t>(dim_)};
    }

    uint32_t append(std::span<const double> coords);
    void reserve(uint32_t n) { coords_.reserve(static_cast<size_t>(n) * dim_); }

    std::span<const double> raw() const { return coords_; }

private:
    int dim_;
    std::vector<double> coords_;
};

// ---- grid spatial index ----------------------------------------------------

// Uniform grid over the unit torus. Cell coordinates are floor(coord * g) per
// axis with g cells per axis; queries wrap around the torus seam. With fewer
// than 3 cells per axis the wraparound stencil degenerates, so the index
// falls back to scanning every stored point.
class SpatialIndex {
public:
    // Builds over the store's current contents. cell_size is a lower bound on
    // the actual cell width; the grid also caps the total cell count so that
    // it stays within a small multiple of the point count.
    SpatialIndex(const PointStore& pts, double cell_size);

    // Point must already be present in the store.
    void insert(uint32_t id);

    bool brute_force() const { return brute_; }
    int cells_per_axis() const { return g_; }
    double cell_width() const { return cell_width_; }

    // Ids at torus distance <= radius from center, ascending.
    std::vector<uint32_t> query_ball(std::span<const double> center, double radius) const;

    // Visits (id, dist_sq) for every stored point at torus distance <= radius.
    template <class F>
    void for_each_in_ball(std::span<const double> center, double radius, F&& f) const {
        const int m = pts_->dim();
        const double rsq = radius * radius;
        if (brute_) {
            const uint32_t n = pts_->size();
            for (uint32_t id = 1; id <= n; ++id) {
                double d = torus_distance_sq(pts_->point(id), center);
                if (d <= rsq) f(id, d);
            }
            return;
        }
        // per-axis wrapped stencil; span capped at g_ so no cell repeats
        int range = static_cast<int>(radius * g_) + 1;
        int lo[kMaxDim];
        int span[kMaxDim];
        int idx[kMaxDim];
        for (int a = 0; a < m; ++a) {
            int c = cell_of(center[a]);
            span[a] = 2 * range + 1 >= g_ ? g_ : 2 * range + 1;
            lo[a] = span[a] == g_ ? 0 : wrap(c - range);
            idx[a] = 0;
        }
        while (true) {
            size_t cell = 0;
            for (int a = m - 1; a >= 0; --a) {
                int c = lo[a] + idx[a];
                if (c >= g_) c -= g_;
                cell = cell * g_ + c;
            }
            for (uint32_t id : cells_[cell]) {
                double d = torus_distance_sq(pts_->point(id), center);
                if (d <= rsq) f(id, d);
            }
            int a = 0;
            while (a < m && ++idx[a] == span[a]) idx[a++] = 0;
            if (a == m) break;
        }
    }

private:
    static constexpr int kMaxDim = 16;

    int cell_of(double x) const {
        int c = static_cast<int>(x * g_);
        return c >= g_ ? g_ - 1 : c;
    }
    int wrap(int c) const { return ((c % g_) + g_) % g_; }
    size_t cell_index(std::span<const double> p) const;

    const PointStore* pts_;
    int g_ = 1;
    double cell_width_ = 1.0;
    bool brute_ = false;
    std::vector<std::vector<uint32_t>> cells_;
};

} // namespace spanet
