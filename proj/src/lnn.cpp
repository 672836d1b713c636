#include "topoctl/lnn.hpp"

#include <algorithm>
#include <map>

#include "topoctl/detail/disjoint_sets.hpp"
#include "topoctl/error.hpp"

namespace topo {

NngGraph nng(const Instance& instance, std::span<const SensorId> active) {
    if (active.size() < 2) throw DomainError("nng requires at least 2 active sensors");
    NngGraph g;
    g.nodes.assign(active.begin(), active.end());
    std::sort(g.nodes.begin(), g.nodes.end());
    if (std::adjacent_find(g.nodes.begin(), g.nodes.end()) != g.nodes.end())
        throw DomainError("nng: duplicate sensor in active set");

    const std::size_t m = g.nodes.size();
    std::map<SensorId, std::size_t> position;
    for (std::size_t k = 0; k < m; ++k) position[g.nodes[k]] = k;

    g.next.resize(m);
    detail::DisjointSets sets(m);
    for (std::size_t k = 0; k < m; ++k) {
        g.next[k] = nearest_neighbor(instance, g.nodes[k], g.nodes);
        sets.unite(k, position[g.next[k]]);
    }

    // Label components in order of their smallest sensor.
    std::map<std::size_t, std::size_t> label_of_set;
    g.component.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        auto [it, inserted] = label_of_set.try_emplace(sets.find(k), label_of_set.size());
        g.component[k] = it->second;
    }

    // With index tie-breaking every cycle of the functional graph is a
    // 2-cycle, so each component holds exactly one mutual pair.
    g.roots.assign(label_of_set.size(), {0, 0});
    for (std::size_t k = 0; k < m; ++k) {
        const SensorId u = g.nodes[k];
        const SensorId v = g.next[k];
        if (u < v && g.next[position[v]] == u) g.roots[g.component[k]] = {u, v};
    }
    return g;
}

std::size_t max_in_degree(const NngGraph& graph) {
    std::map<SensorId, std::size_t> indegree;
    std::size_t best = 0;
    for (SensorId target : graph.next) best = std::max(best, ++indegree[target]);
    return best;
}

LnnResult lnn(const Instance& instance, Model model) {
    const std::size_t n = instance.size();
    LnnResult result;
    result.assignment.radii.assign(n, 0.0);
    result.level.assign(n, 0);
    result.parent.resize(n);
    for (SensorId s = 0; s < n; ++s) result.parent[s] = s;

    std::vector<SensorId> layer(n);
    for (SensorId s = 0; s < n; ++s) layer[s] = s;

    std::size_t round = 0;
    while (layer.size() > 1) {
        const NngGraph graph = nng(instance, layer);
        std::vector<SensorId> survivors;
        for (const auto& [first, second] : graph.roots) survivors.push_back(std::min(first, second));
        std::sort(survivors.begin(), survivors.end());

        for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
            const SensorId s = graph.nodes[k];
            result.level[s] = round;
            if (std::binary_search(survivors.begin(), survivors.end(), s)) continue;
            result.parent[s] = graph.next[k];
            result.assignment.radii[s] = distance(instance, s, graph.next[k]);
        }
        layer = std::move(survivors);
        ++round;
    }

    result.rounds = round;
    const SensorId last = layer.front();
    result.level[last] = round;
    result.parent[last] = last;
    result.assignment.radii[last] = diameter(instance);

    if (model == Model::symmetric) {
        auto& radii = result.assignment.radii;
        for (SensorId s = 0; s < n; ++s) {
            const SensorId p = result.parent[s];
            if (p != s) radii[p] = std::max(radii[p], distance(instance, s, p));
        }
    }
    return result;
}

}  // namespace topo
