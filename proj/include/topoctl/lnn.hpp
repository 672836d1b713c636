#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "topoctl/geometry.hpp"
#include "topoctl/network.hpp"

namespace topo {

/// Nearest neighbour graph over a subset of sensors. Entry k of every vector
/// describes sensor nodes[k].
struct NngGraph {
    std::vector<SensorId> nodes;                       // ascending
    std::vector<SensorId> next;                        // nearest neighbour of nodes[k]
    std::vector<std::size_t> component;                // weak component label of nodes[k]
    std::vector<std::pair<SensorId, SensorId>> roots;  // mutual nearest pair per component, first < second

    std::size_t component_count() const noexcept { return roots.size(); }
};

/// Largest number of sensors sharing one nearest neighbour.
std::size_t max_in_degree(const NngGraph& graph);

NngGraph nng(const Instance& instance, std::span<const SensorId> active);

struct LnnResult {
    RadiiAssignment assignment;
    std::vector<std::size_t> level;  // last round each sensor took part in
    std::size_t rounds = 0;
    std::vector<SensorId> parent;    // nearest neighbour in the sensor's last round; the survivor is its own parent
};

/// Layered nearest neighbour construction.
///
/// Each round computes the NNG of the surviving sensors, keeps the smaller
/// index of every component's root pair, and gives every other sensor the
/// distance to its nearest neighbour as radius. The final survivor gets the
/// instance diameter, which reaches every sensor.
///
/// The result is strongly connected in the asymmetric model. With
/// Model::symmetric every sensor is additionally raised to the longest NNG
/// edge pointing at it in its last round, which turns the parent edges into
/// undirected edges and makes the assignment valid in the symmetric model.
LnnResult lnn(const Instance& instance, Model model = Model::asymmetric);

}  // namespace topo
