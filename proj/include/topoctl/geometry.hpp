#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace topo {

using SensorId = std::size_t;
using Point = std::vector<double>;
using BucketIndex = std::vector<std::int64_t>;

/// An ordered set of sensor positions in R^d. Sensors are identified by their
/// zero-based position in the list; indices never change.
class Instance {
public:
    Instance(std::size_t dim, std::vector<Point> points);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return coords_.size() / dim_; }

    std::span<const double> point(SensorId s) const;
    std::vector<Point> points() const;

    /// Returns a copy with `p` appended as sensor size().
    Instance with_point(const Point& p) const;

private:
    std::size_t dim_;
    std::vector<double> coords_;
};

/// Axis-aligned grid of half-open cubes [origin_k + j*side, origin_k + (j+1)*side).
struct GridSpec {
    double cell_side;
    Point origin;
};

struct Edge {
    SensorId u;
    SensorId v;
    double length;

    bool operator==(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

struct SubBucket {
    BucketIndex bucket;
    std::vector<std::int64_t> sub;  // each coordinate in [0, d)
};

double distance(std::span<const double> a, std::span<const double> b);
double distance(const Instance& instance, SensorId u, SensorId v);

/// Minimum spanning tree of the complete Euclidean graph. Edges are ordered
/// by (length, u, v) with u < v; ties resolve to lexicographically smaller
/// index pairs, so the tree is unique.
EdgeList emst(const Instance& instance);

/// Longest EMST edge: the smallest uniform radius that connects the instance.
double r_min(const Instance& instance);

/// Largest pairwise distance (0 for a single sensor).
double diameter(const Instance& instance);

/// Nearest sensor to `s` among `among` (excluding `s`), ties to the smaller index.
SensorId nearest_neighbor(const Instance& instance, SensorId s, std::span<const SensorId> among);

BucketIndex bucket_of(std::span<const double> p, const GridSpec& grid);
SubBucket sub_bucket_of(std::span<const double> p, const GridSpec& grid);

/// Grid of side `cell_side` anchored at the componentwise minimum of the instance.
GridSpec default_grid(const Instance& instance, double cell_side);

/// Componentwise min and max corners.
std::pair<Point, Point> bounding_box(const Instance& instance);

}  // namespace topo
