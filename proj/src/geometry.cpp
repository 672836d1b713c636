#include "topoctl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "topoctl/error.hpp"

namespace topo {

Instance::Instance(std::size_t dim, std::vector<Point> points) : dim_(dim) {
    if (dim == 0) throw DomainError("instance dimension must be positive");
    if (points.empty()) throw DomainError("instance must contain at least one sensor");
    coords_.reserve(points.size() * dim);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim) {
            throw DomainError("sensor " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                              " coordinates, expected " + std::to_string(dim));
        }
        for (double x : points[i]) {
            if (!std::isfinite(x)) throw DomainError("sensor " + std::to_string(i) + " has a non-finite coordinate");
            coords_.push_back(x);
        }
    }
}

std::span<const double> Instance::point(SensorId s) const {
    if (s >= size()) throw DomainError("sensor index " + std::to_string(s) + " out of range");
    return {coords_.data() + s * dim_, dim_};
}

std::vector<Point> Instance::points() const {
    std::vector<Point> out;
    out.reserve(size());
    for (SensorId s = 0; s < size(); ++s) {
        auto p = point(s);
        out.emplace_back(p.begin(), p.end());
    }
    return out;
}

Instance Instance::with_point(const Point& p) const {
    auto pts = points();
    pts.push_back(p);
    return Instance(dim_, std::move(pts));
}

double distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DomainError("dimension mismatch");
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

double distance(const Instance& instance, SensorId u, SensorId v) {
    return distance(instance.point(u), instance.point(v));
}

EdgeList emst(const Instance& instance) {
    // Prim's algorithm on the complete graph. Keys compare (length, lo, hi) so
    // every edge weight is distinct and the resulting tree is unique.
    using Key = std::tuple<double, SensorId, SensorId>;
    const std::size_t n = instance.size();
    constexpr double inf = std::numeric_limits<double>::infinity();

    std::vector<bool> in_tree(n, false);
    std::vector<Key> best(n, Key{inf, 0, 0});
    EdgeList edges;
    edges.reserve(n - 1);

    SensorId current = 0;
    in_tree[0] = true;
    for (std::size_t added = 1; added < n; ++added) {
        for (SensorId v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            Key candidate{distance(instance, current, v), std::min(current, v), std::max(current, v)};
            if (candidate < best[v]) best[v] = candidate;
        }
        SensorId next = n;
        for (SensorId v = 0; v < n; ++v) {
            if (!in_tree[v] && (next == n || best[v] < best[next])) next = v;
        }
        const auto& [len, lo, hi] = best[next];
        edges.push_back({lo, hi, len});
        in_tree[next] = true;
        current = next;
    }

    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.length, a.u, a.v) < std::tie(b.length, b.u, b.v);
    });
    return edges;
}

double r_min(const Instance& instance) {
    if (instance.size() < 2) throw DomainError("r_min is undefined for singleton");
    double longest = 0.0;
    for (const auto& e : emst(instance)) longest = std::max(longest, e.length);
    return longest;
}

double diameter(const Instance& instance) {
    double best = 0.0;
    for (SensorId u = 0; u < instance.size(); ++u)
        for (SensorId v = u + 1; v < instance.size(); ++v) best = std::max(best, distance(instance, u, v));
    return best;
}

SensorId nearest_neighbor(const Instance& instance, SensorId s, std::span<const SensorId> among) {
    const auto origin = instance.point(s);
    SensorId best = instance.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (SensorId t : among) {
        if (t == s) continue;
        const double dist = distance(origin, instance.point(t));
        if (dist < best_dist || (dist == best_dist && t < best)) {
            best = t;
            best_dist = dist;
        }
    }
    if (best == instance.size()) throw DomainError("nearest_neighbor: empty candidate set");
    return best;
}

namespace {

void check_grid(std::span<const double> p, const GridSpec& grid) {
    if (!(grid.cell_side > 0.0) || !std::isfinite(grid.cell_side)) throw DomainError("grid cell side must be positive");
    if (grid.origin.size() != p.size()) throw DomainError("grid origin dimension mismatch");
}

}  // namespace

BucketIndex bucket_of(std::span<const double> p, const GridSpec& grid) {
    check_grid(p, grid);
    BucketIndex cell(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        cell[k] = static_cast<std::int64_t>(std::floor((p[k] - grid.origin[k]) / grid.cell_side));
    return cell;
}

SubBucket sub_bucket_of(std::span<const double> p, const GridSpec& grid) {
    check_grid(p, grid);
    const std::size_t d = p.size();
    const auto per_axis = static_cast<std::int64_t>(d);
    SubBucket out{BucketIndex(d), std::vector<std::int64_t>(d)};
    for (std::size_t k = 0; k < d; ++k) {
        const double t = (p[k] - grid.origin[k]) / grid.cell_side;
        const double cell = std::floor(t);
        out.bucket[k] = static_cast<std::int64_t>(cell);
        auto sub = static_cast<std::int64_t>(std::floor((t - cell) * static_cast<double>(d)));
        out.sub[k] = std::clamp<std::int64_t>(sub, 0, per_axis - 1);
    }
    return out;
}

std::pair<Point, Point> bounding_box(const Instance& instance) {
    auto first = instance.point(0);
    Point lo(first.begin(), first.end());
    Point hi = lo;
    for (SensorId s = 1; s < instance.size(); ++s) {
        auto p = instance.point(s);
        for (std::size_t k = 0; k < instance.dim(); ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    }
    return {lo, hi};
}

GridSpec default_grid(const Instance& instance, double cell_side) {
    if (!(cell_side > 0.0) || !std::isfinite(cell_side)) throw DomainError("grid cell side must be positive");
    return {cell_side, bounding_box(instance).first};
}

}  // namespace topo
