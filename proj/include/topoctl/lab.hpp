#pragma once

#include <cstddef>
#include <cstdint>

#include "topoctl/geometry.hpp"
#include "topoctl/network.hpp"

namespace topo {

inline constexpr std::size_t kMaxLowerBoundLevel = 12;
inline constexpr std::size_t kMaxOracleSensors = 8;

/// U_k on the line: U_0 = {0}; U_i is U_{i-1} followed by a copy of itself
/// placed so the gap between the copies is 4^i. 2^k points.
Instance gen_lower_bound(std::size_t k);

/// n i.i.d. uniform points in [0, extent]^d.
Instance gen_uniform_random(std::size_t n, std::size_t dim, std::uint64_t seed, double extent);

/// n - 1 points uniform in the ball of radius `spread` around the origin and
/// one point at distance `separation` from the origin along the first axis.
/// Requires separation >= 3 * spread so every cluster point lies within
/// r_min of every other.
Instance gen_clustered_plus_outlier(std::size_t n, std::size_t dim, std::uint64_t seed, double spread,
                                    double separation);

struct MinInterference {
    std::size_t value = 0;
    RadiiAssignment assignment;
};

/// Exhaustive minimum interference over assignments whose radii are drawn
/// from each sensor's distances to the other sensors. Among optimal
/// assignments the lexicographically smallest is returned. n <= 8, d <= 2.
MinInterference oracle_min_interference(const Instance& instance, MeasureMode mode, Model model = Model::symmetric);

struct GridDepth {
    std::size_t value = 0;
    Point witness_point;
    std::size_t rows = 0;
};

/// Largest interference_at over the grid {lo + pitch * j} covering the
/// bounding box inflated by the largest radius. d <= 2.
GridDepth oracle_max_depth(const Instance& instance, const RadiiAssignment& r, double pitch);

}  // namespace topo
