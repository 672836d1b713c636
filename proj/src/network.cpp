#include "topoctl/network.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "topoctl/detail/random.hpp"
#include "topoctl/error.hpp"

namespace topo {

std::string_view to_string(Model model) {
    return model == Model::symmetric ? "symmetric" : "asymmetric";
}

Model parse_model(std::string_view name) {
    if (name == "symmetric") return Model::symmetric;
    if (name == "asymmetric") return Model::asymmetric;
    throw DomainError("unknown model '" + std::string(name) + "'");
}

std::string_view to_string(MeasureMode mode) {
    switch (mode) {
        case MeasureMode::exact1d: return "exact1d";
        case MeasureMode::exact2d: return "exact2d";
        case MeasureMode::at_sensors: return "at_sensors";
        case MeasureMode::sampled: return "sampled";
    }
    return "unknown";
}

MeasureMode parse_measure_mode(std::string_view name) {
    if (name == "exact1d") return MeasureMode::exact1d;
    if (name == "exact2d") return MeasureMode::exact2d;
    if (name == "at_sensors" || name == "at-sensors") return MeasureMode::at_sensors;
    if (name == "sampled") return MeasureMode::sampled;
    throw DomainError("unknown measurement mode '" + std::string(name) + "'");
}

MeasureMode default_measure_mode(std::size_t dim) {
    if (dim == 1) return MeasureMode::exact1d;
    if (dim == 2) return MeasureMode::exact2d;
    return MeasureMode::sampled;
}

double RadiiAssignment::max_radius() const {
    return radii.empty() ? 0.0 : *std::max_element(radii.begin(), radii.end());
}

RadiiAssignment uniform_assignment(const Instance& instance, double radius) {
    if (!(radius >= 0.0) || !std::isfinite(radius)) throw DomainError("radius must be finite and nonnegative");
    return {std::vector<double>(instance.size(), radius)};
}

void check_assignment(const Instance& instance, const RadiiAssignment& r) {
    if (r.size() != instance.size()) {
        throw DomainError("assignment has " + std::to_string(r.size()) + " radii for " +
                          std::to_string(instance.size()) + " sensors");
    }
    for (std::size_t s = 0; s < r.size(); ++s) {
        if (!(r[s] >= 0.0) || !std::isfinite(r[s]))
            throw DomainError("radius of sensor " + std::to_string(s) + " must be finite and nonnegative");
    }
}

Network build_network(const Instance& instance, const RadiiAssignment& r, Model model) {
    check_assignment(instance, r);
    const std::size_t n = instance.size();
    Network net{model, n, {}, std::vector<std::vector<SensorId>>(n)};
    for (SensorId u = 0; u < n; ++u) {
        for (SensorId v = 0; v < n; ++v) {
            if (u == v) continue;
            const double dist = distance(instance, u, v);
            if (model == Model::symmetric) {
                if (u < v && std::min(r[u], r[v]) >= dist) {
                    net.edges.emplace_back(u, v);
                    net.adjacency[u].push_back(v);
                    net.adjacency[v].push_back(u);
                }
            } else if (r[u] >= dist) {
                net.edges.emplace_back(u, v);
                net.adjacency[u].push_back(v);
            }
        }
    }
    for (auto& adj : net.adjacency) std::sort(adj.begin(), adj.end());
    return net;
}

std::vector<std::size_t> connected_components(const std::vector<std::vector<SensorId>>& adjacency) {
    const std::size_t n = adjacency.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unset);
    std::vector<SensorId> stack;
    std::size_t next = 0;
    for (SensorId root = 0; root < n; ++root) {
        if (label[root] != unset) continue;
        label[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            const SensorId u = stack.back();
            stack.pop_back();
            for (SensorId v : adjacency[u]) {
                if (label[v] == unset) {
                    label[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<SensorId>>& adjacency) {
    const std::size_t n = adjacency.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unset), low(n, 0), label(n, unset);
    std::vector<bool> on_stack(n, false);
    std::vector<SensorId> scc_stack;
    std::vector<std::pair<SensorId, std::size_t>> call_stack;  // (vertex, next edge)
    std::size_t counter = 0, components = 0;

    for (SensorId root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        call_stack.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        scc_stack.push_back(root);
        on_stack[root] = true;

        while (!call_stack.empty()) {
            auto& [u, edge] = call_stack.back();
            if (edge < adjacency[u].size()) {
                const SensorId v = adjacency[u][edge++];
                if (index[v] == unset) {
                    index[v] = low[v] = counter++;
                    scc_stack.push_back(v);
                    on_stack[v] = true;
                    call_stack.emplace_back(v, 0);
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
                continue;
            }
            const SensorId done = u;
            call_stack.pop_back();
            if (!call_stack.empty()) {
                const SensorId parent = call_stack.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                SensorId w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = false;
                    label[w] = components;
                } while (w != done);
                ++components;
            }
        }
    }
    return label;
}

bool is_valid(const Network& network) {
    if (network.size <= 1) return true;
    const auto labels = network.model == Model::symmetric ? connected_components(network.adjacency)
                                                          : strongly_connected_components(network.adjacency);
    return std::all_of(labels.begin(), labels.end(), [&](std::size_t l) { return l == labels.front(); });
}

bool is_valid(const Instance& instance, const RadiiAssignment& r, Model model) {
    return is_valid(build_network(instance, r, model));
}

namespace {

std::size_t depth(const Instance& instance, const RadiiAssignment& r, std::span<const double> p) {
    std::size_t count = 0;
    for (SensorId s = 0; s < instance.size(); ++s)
        if (r[s] >= distance(instance.point(s), p)) ++count;
    return count;
}

class DeepestPoint {
public:
    DeepestPoint(const Instance& instance, const RadiiAssignment& r) : instance_(instance), r_(r) {}

    void offer(std::span<const double> p) {
        const std::size_t value = depth(instance_, r_, p);
        ++evaluated_;
        if (evaluated_ == 1 || value > best_) {
            best_ = value;
            witness_.assign(p.begin(), p.end());
        }
    }

    InterferenceReport report(MeasureMode mode) const { return {best_, witness_, mode, evaluated_}; }

private:
    const Instance& instance_;
    const RadiiAssignment& r_;
    std::size_t best_ = 0;
    Point witness_;
    std::size_t evaluated_ = 0;
};

// Fractions of the way from a boundary point towards the interior target.
constexpr double kInwardSteps[] = {1e-9, 1e-6, 1e-3};

void offer_exact1d(const Instance& instance, const RadiiAssignment& r, DeepestPoint& deepest) {
    for (SensorId s = 0; s < instance.size(); ++s) deepest.offer(instance.point(s));
    for (SensorId s = 0; s < instance.size(); ++s) {
        const double x = instance.point(s)[0];
        for (double endpoint : {x - r[s], x + r[s]}) {
            double p = endpoint;
            deepest.offer({&p, 1});
            p = std::nextafter(endpoint, x);
            deepest.offer({&p, 1});
            p = std::nextafter(p, x);
            deepest.offer({&p, 1});
            for (double t : kInwardSteps) {
                p = endpoint + (x - endpoint) * t;
                deepest.offer({&p, 1});
            }
        }
    }
}

void offer_exact2d(const Instance& instance, const RadiiAssignment& r, DeepestPoint& deepest) {
    const std::size_t n = instance.size();
    for (SensorId s = 0; s < n; ++s) deepest.offer(instance.point(s));
    for (SensorId i = 0; i < n; ++i) {
        const auto ci = instance.point(i);
        for (SensorId j = i + 1; j < n; ++j) {
            const auto cj = instance.point(j);
            const double dist = distance(ci, cj);
            // Coincident centres contribute their centres only.
            if (dist == 0.0) continue;
            if (dist > r[i] + r[j] || dist < std::abs(r[i] - r[j])) continue;
            const double ux = (cj[0] - ci[0]) / dist;
            const double uy = (cj[1] - ci[1]) / dist;
            const double a = (dist * dist + r[i] * r[i] - r[j] * r[j]) / (2.0 * dist);
            const double h = std::sqrt(std::max(0.0, r[i] * r[i] - a * a));
            const double mid[2] = {ci[0] + a * ux, ci[1] + a * uy};
            deepest.offer(mid);
            if (h == 0.0) continue;
            for (double sign : {1.0, -1.0}) {
                const double vertex[2] = {mid[0] - sign * h * uy, mid[1] + sign * h * ux};
                deepest.offer(vertex);
                for (double t : kInwardSteps) {
                    const double inward[2] = {vertex[0] + (mid[0] - vertex[0]) * t,
                                              vertex[1] + (mid[1] - vertex[1]) * t};
                    deepest.offer(inward);
                }
            }
        }
    }
}

void offer_samples(const Instance& instance, const RadiiAssignment& r, std::size_t samples, std::uint64_t seed,
                   DeepestPoint& deepest) {
    constexpr std::size_t chunk = 4096;
    auto [lo, hi] = bounding_box(instance);
    const double pad = r.max_radius();
    for (std::size_t k = 0; k < lo.size(); ++k) {
        lo[k] -= pad;
        hi[k] += pad;
    }
    Point p(instance.dim());
    for (std::size_t start = 0; start < samples; start += chunk) {
        auto rng = detail::substream(seed, start / chunk);
        const std::size_t end = std::min(samples, start + chunk);
        for (std::size_t i = start; i < end; ++i) {
            for (std::size_t k = 0; k < p.size(); ++k) p[k] = lo[k] + (hi[k] - lo[k]) * detail::unit_uniform(rng);
            deepest.offer(p);
        }
    }
}

}  // namespace

std::size_t interference_at(const Instance& instance, const RadiiAssignment& r, std::span<const double> p) {
    check_assignment(instance, r);
    if (p.size() != instance.dim()) throw DomainError("point dimension does not match instance");
    return depth(instance, r, p);
}

InterferenceReport network_interference(const Instance& instance, const RadiiAssignment& r, MeasureMode mode,
                                        const SamplingOptions& sampling) {
    check_assignment(instance, r);
    if (mode == MeasureMode::exact1d && instance.dim() != 1) throw DomainError("mode requires dimension 1");
    if (mode == MeasureMode::exact2d && instance.dim() != 2) throw DomainError("mode requires dimension 2");
    if (mode == MeasureMode::sampled && !sampling.seed) throw DomainError("sampled mode requires a seed");

    DeepestPoint deepest(instance, r);
    switch (mode) {
        case MeasureMode::exact1d: offer_exact1d(instance, r, deepest); break;
        case MeasureMode::exact2d: offer_exact2d(instance, r, deepest); break;
        case MeasureMode::at_sensors:
            for (SensorId s = 0; s < instance.size(); ++s) deepest.offer(instance.point(s));
            break;
        case MeasureMode::sampled:
            for (SensorId s = 0; s < instance.size(); ++s) deepest.offer(instance.point(s));
            offer_samples(instance, r, sampling.samples, *sampling.seed, deepest);
            break;
    }
    return deepest.report(mode);
}

}  // namespace topo
