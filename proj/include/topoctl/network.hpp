#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topoctl/geometry.hpp"

namespace topo {

/// Symmetric: undirected edge uv iff min{r(u), r(v)} >= d(u, v).
/// Asymmetric: directed edge u->v iff r(u) >= d(u, v).
enum class Model { symmetric, asymmetric };

std::string_view to_string(Model model);
Model parse_model(std::string_view name);

/// One nonnegative, finite communication radius per sensor.
struct RadiiAssignment {
    std::vector<double> radii;

    std::size_t size() const noexcept { return radii.size(); }
    double operator[](SensorId s) const { return radii[s]; }
    double max_radius() const;
};

struct Network {
    Model model;
    std::size_t size;
    /// Symmetric: pairs (u, v) with u < v. Asymmetric: directed pairs u -> v.
    /// Sorted lexicographically.
    std::vector<std::pair<SensorId, SensorId>> edges;
    /// Out-neighbours (both directions for the symmetric model).
    std::vector<std::vector<SensorId>> adjacency;
};

enum class MeasureMode { exact1d, exact2d, at_sensors, sampled };

std::string_view to_string(MeasureMode mode);
MeasureMode parse_measure_mode(std::string_view name);

/// Exact mode for d <= 2, sampled otherwise.
MeasureMode default_measure_mode(std::size_t dim);

struct SamplingOptions {
    std::size_t samples = 0;
    std::optional<std::uint64_t> seed;
};

struct InterferenceReport {
    std::size_t value = 0;
    Point witness_point;
    MeasureMode mode = MeasureMode::at_sensors;
    std::size_t candidates_evaluated = 0;
};

RadiiAssignment uniform_assignment(const Instance& instance, double radius);

/// Throws unless the assignment has one finite nonnegative radius per sensor.
void check_assignment(const Instance& instance, const RadiiAssignment& r);

Network build_network(const Instance& instance, const RadiiAssignment& r, Model model);

/// Connected (symmetric) or strongly connected (asymmetric). A single sensor is valid.
bool is_valid(const Instance& instance, const RadiiAssignment& r, Model model);
bool is_valid(const Network& network);

/// Component label per vertex, labels numbered by first appearance.
std::vector<std::size_t> connected_components(const std::vector<std::vector<SensorId>>& adjacency);

/// Tarjan's algorithm (iterative). Component label per vertex.
std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<SensorId>>& adjacency);

/// Number of sensors s with r(s) >= d(s, p); boundary points count.
std::size_t interference_at(const Instance& instance, const RadiiAssignment& r, std::span<const double> p);

/// Depth of the deepest point of the disk arrangement.
///
/// exact1d   every interval endpoint s +- r(s) and every sensor position.
/// exact2d   every disk centre and every circle-circle intersection point.
/// at_sensors  sensor positions only.
/// sampled   sensor positions plus `samples` uniform points in the bounding
///           box inflated by the largest radius (a lower bound).
///
/// Candidates on a circle boundary are also evaluated after a tiny step into
/// the covering region, so rounding in the candidate coordinates does not drop
/// a disk that passes through the candidate in exact arithmetic.
InterferenceReport network_interference(const Instance& instance, const RadiiAssignment& r, MeasureMode mode,
                                        const SamplingOptions& sampling = {});

}  // namespace topo
