#include "spanet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spanet {

double torus_distance_sq(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw std::invalid_argument("torus_distance: dimension mismatch");
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        double d = std::fabs(p[i] - q[i]);
        if (d > 0.5) d = 1.0 - d;
        s += d * d;
    }
    return s;
}

double torus_distance(std::span<const double> p, std::span<const double> q) {
    return std::sqrt(torus_distance_sq(p, q));
}

double euclidean_distance_sq(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw std::invalid_argument("euclidean_distance: dimension mismatch");
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        double d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

double max_torus_distance(int m) { return std::sqrt(static_cast<double>(m)) / 2.0; }

double unit_ball_volume(int m) {
    if (m < 1) throw std::invalid_argument("unit_ball_volume: dimension must be positive");
    return std::pow(M_PI, m / 2.0) / std::tgamma(m / 2.0 + 1.0);
}

double ball_volume(double radius, int m) {
    return unit_ball_volume(m) * std::pow(radius, m);
}

double ball_radius_from_volume(double vol, int m) {
    if (vol < 0.0) throw std::invalid_argument("ball_radius_from_volume: negative volume");
    if (vol == 0.0) return 0.0;
    return std::pow(vol / unit_ball_volume(m), 1.0 / m);
}

uint32_t PointStore::append(std::span<const double> coords) {
    if (static_cast<int>(coords.size()) != dim_)
        throw std::invalid_argument("PointStore::append: dimension mismatch");
    for (double c : coords)
        if (!(c >= 0.0 && c < 1.0))
            throw std::invalid_argument("PointStore::append: coordinate outside [0,1)");
    coords_.insert(coords_.end(), coords.begin(), coords.end());
    return size();
}

SpatialIndex::SpatialIndex(const PointStore& pts, double cell_size) : pts_(&pts) {
    if (pts.dim() > kMaxDim)
        throw std::invalid_argument("SpatialIndex: dimension too large");
    if (!(cell_size > 0.0)) throw std::invalid_argument("SpatialIndex: cell_size must be > 0");
    // keep the dense cell array within ~4x the point count
    double max_cells = std::max(4096.0, 4.0 * pts.size() + 4.0);
    int cap = static_cast<int>(std::pow(max_cells, 1.0 / pts.dim()));
    while (cap > 1 && std::pow(static_cast<double>(cap), pts.dim()) > max_cells) --cap;
    double wanted = cell_size >= 1.0 ? 1.0 : std::floor(1.0 / cell_size);
    g_ = static_cast<int>(std::min(wanted, static_cast<double>(std::max(cap, 1))));
    cell_width_ = 1.0 / g_;
    brute_ = g_ < 3;
    if (!brute_) {
        size_t total = 1;
        for (int a = 0; a < pts.dim(); ++a) total *= g_;
        cells_.assign(total, {});
        for (uint32_t id = 1; id <= pts.size(); ++id) cells_[cell_index(pts.point(id))].push_back(id);
    }
}

size_t SpatialIndex::cell_index(std::span<const double> p) const {
    size_t cell = 0;
    for (int a = pts_->dim() - 1; a >= 0; --a) cell = cell * g_ + cell_of(p[a]);
    return cell;
}

void SpatialIndex::insert(uint32_t id) {
    if (!brute_) cells_[cell_index(pts_->point(id))].push_back(id);
}

std::vector<uint32_t> SpatialIndex::query_ball(std::span<const double> center, double radius) const {
    if (radius < 0.0) throw std::invalid_argument("query_ball: negative radius");
    std::vector<uint32_t> out;
    for_each_in_ball(center, radius, [&](uint32_t id, double) { out.push_back(id); });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace spanet
