#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "topoctl/geometry.hpp"
#include "topoctl/network.hpp"

namespace topo {

/// Connected component of the uniform-radius graph restricted to one bucket.
struct Cluster {
    BucketIndex bucket;
    std::vector<SensorId> members;  // ascending
};

/// Sensors u (in cluster_u) and v (in cluster_v) with d(u, v) <= R, u < v.
struct WitnessPair {
    SensorId u;
    SensorId v;
    std::size_t cluster_u;
    std::size_t cluster_v;

    bool operator==(const WitnessPair&) const = default;
};

struct ClusterDecomposition {
    GridSpec grid;  // cell_side is the radius cap R
    std::vector<Cluster> clusters;               // ordered by bucket, then smallest member
    std::vector<std::size_t> cluster_of;         // per sensor
    std::vector<std::vector<SensorId>> leaders;  // per cluster, ascending; empty until filled
    std::vector<WitnessPair> witness_pairs;      // ordered by cluster pair
    std::vector<std::pair<std::size_t, std::size_t>> neighbor_pairs;  // cluster pairs, first < second

    double radius() const noexcept { return grid.cell_side; }
};

/// Buckets of side R and their clusters (leaders and witnesses left empty).
/// Requires R >= r_min(instance) when the instance has two or more sensors.
ClusterDecomposition decompose(const Instance& instance, double R);
ClusterDecomposition decompose(const Instance& instance, double R, const GridSpec& grid);

/// Leader set of one cluster: the smallest index if the cluster occupies a
/// single sub-bucket (side R/d), otherwise both endpoints of the
/// lexicographically smallest uniform-radius edge between every pair of
/// occupied sub-buckets that has one.
std::vector<SensorId> leaders(const Instance& instance, const ClusterDecomposition& decomposition,
                              std::size_t cluster);

/// One witness pair (lexicographically smallest) per pair of clusters within distance R.
std::vector<WitnessPair> witnesses(const Instance& instance, const ClusterDecomposition& decomposition);

/// decompose() plus leaders, witnesses and the neighbour relation.
ClusterDecomposition full_decomposition(const Instance& instance, double R, const GridSpec& grid);

/// Leaders and witnesses: the sensors assigned radius R. Ascending.
std::vector<SensorId> raised_sensors(const ClusterDecomposition& decomposition);

struct TransformResult {
    RadiiAssignment assignment;
    ClusterDecomposition decomposition;
};

/// Caps every radius at R while keeping the assignment valid: leaders and
/// witnesses get R, every other sensor min{r_in(s), R}. The input must be
/// valid in `model`; the output then is valid in the same model.
TransformResult transform(const Instance& instance, const RadiiAssignment& r_in, double R,
                          Model model = Model::symmetric, const std::optional<GridSpec>& grid = std::nullopt);

}  // namespace topo
