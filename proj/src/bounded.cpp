#include "topoctl/bounded.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "topoctl/detail/disjoint_sets.hpp"
#include "topoctl/error.hpp"

namespace topo {

namespace {

void check_radius(const Instance& instance, double R) {
    if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("radius must be positive and finite");
    if (instance.size() >= 2 && R < r_min(instance)) throw DomainError("radius below connectivity threshold");
}

std::int64_t sub_bucket_key(const SubBucket& sb) {
    const auto d = static_cast<std::int64_t>(sb.sub.size());
    std::int64_t key = 0;
    for (auto it = sb.sub.rbegin(); it != sb.sub.rend(); ++it) key = key * d + *it;
    return key;
}

// All offsets in {-1, 0, 1}^d.
std::vector<BucketIndex> neighborhood_offsets(std::size_t d) {
    std::vector<BucketIndex> out{BucketIndex(d, -1)};
    while (true) {
        BucketIndex next = out.back();
        std::size_t k = 0;
        while (k < d && next[k] == 1) next[k++] = -1;
        if (k == d) break;
        ++next[k];
        out.push_back(next);
    }
    return out;
}

std::optional<WitnessPair> smallest_witness(const Instance& instance, const ClusterDecomposition& dec,
                                            std::size_t a, std::size_t b) {
    std::optional<WitnessPair> best;
    for (SensorId u : dec.clusters[a].members) {
        for (SensorId v : dec.clusters[b].members) {
            WitnessPair candidate{std::min(u, v), std::max(u, v), dec.cluster_of[std::min(u, v)],
                                  dec.cluster_of[std::max(u, v)]};
            if (best && std::pair(candidate.u, candidate.v) >= std::pair(best->u, best->v)) continue;
            if (distance(instance, u, v) <= dec.radius()) best = candidate;
        }
    }
    return best;
}

}  // namespace

ClusterDecomposition decompose(const Instance& instance, double R) {
    check_radius(instance, R);
    return decompose(instance, R, default_grid(instance, R));
}

ClusterDecomposition decompose(const Instance& instance, double R, const GridSpec& grid) {
    check_radius(instance, R);
    if (grid.cell_side != R) throw DomainError("grid cell side must equal the radius cap");
    if (grid.origin.size() != instance.dim()) throw DomainError("grid origin dimension mismatch");

    std::map<BucketIndex, std::vector<SensorId>> buckets;
    for (SensorId s = 0; s < instance.size(); ++s) buckets[bucket_of(instance.point(s), grid)].push_back(s);

    ClusterDecomposition dec{grid, {}, std::vector<std::size_t>(instance.size()), {}, {}, {}};
    for (const auto& [bucket, members] : buckets) {
        detail::DisjointSets sets(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (distance(instance, members[i], members[j]) <= R) sets.unite(i, j);

        // Members are ascending, so clusters appear in order of smallest member.
        std::map<std::size_t, std::size_t> cluster_of_root;
        for (std::size_t i = 0; i < members.size(); ++i) {
            auto [it, inserted] = cluster_of_root.try_emplace(sets.find(i), dec.clusters.size());
            if (inserted) dec.clusters.push_back({bucket, {}});
            dec.clusters[it->second].members.push_back(members[i]);
            dec.cluster_of[members[i]] = it->second;
        }
    }
    dec.leaders.resize(dec.clusters.size());
    return dec;
}

std::vector<SensorId> leaders(const Instance& instance, const ClusterDecomposition& dec, std::size_t cluster) {
    const auto& members = dec.clusters.at(cluster).members;
    if (members.empty()) throw DomainError("cluster is empty");

    std::vector<std::int64_t> sub(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        sub[i] = sub_bucket_key(sub_bucket_of(instance.point(members[i]), dec.grid));
    if (std::all_of(sub.begin(), sub.end(), [&](std::int64_t k) { return k == sub.front(); })) return {members.front()};

    // Pairs are visited in lexicographic order, so the first edge seen between
    // two sub-buckets is the smallest one.
    std::set<std::pair<std::int64_t, std::int64_t>> linked;
    std::set<SensorId> chosen;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (sub[i] == sub[j]) continue;
            const std::pair key{std::min(sub[i], sub[j]), std::max(sub[i], sub[j])};
            if (linked.contains(key)) continue;
            if (distance(instance, members[i], members[j]) > dec.radius()) continue;
            linked.insert(key);
            chosen.insert(members[i]);
            chosen.insert(members[j]);
        }
    }
    return {chosen.begin(), chosen.end()};
}

std::vector<WitnessPair> witnesses(const Instance& instance, const ClusterDecomposition& dec) {
    std::map<BucketIndex, std::vector<std::size_t>> by_bucket;
    for (std::size_t c = 0; c < dec.clusters.size(); ++c) by_bucket[dec.clusters[c].bucket].push_back(c);

    std::vector<WitnessPair> out;
    const auto offsets = neighborhood_offsets(instance.dim());
    for (std::size_t a = 0; a < dec.clusters.size(); ++a) {
        std::vector<std::size_t> candidates;
        for (const auto& offset : offsets) {
            BucketIndex cell = dec.clusters[a].bucket;
            for (std::size_t k = 0; k < cell.size(); ++k) cell[k] += offset[k];
            auto it = by_bucket.find(cell);
            if (it == by_bucket.end()) continue;
            for (std::size_t b : it->second)
                if (b > a) candidates.push_back(b);
        }
        std::sort(candidates.begin(), candidates.end());
        for (std::size_t b : candidates)
            if (auto w = smallest_witness(instance, dec, a, b)) out.push_back(*w);
    }
    return out;
}

ClusterDecomposition full_decomposition(const Instance& instance, double R, const GridSpec& grid) {
    ClusterDecomposition dec = decompose(instance, R, grid);
    for (std::size_t c = 0; c < dec.clusters.size(); ++c) dec.leaders[c] = leaders(instance, dec, c);
    dec.witness_pairs = witnesses(instance, dec);
    for (const auto& w : dec.witness_pairs)
        dec.neighbor_pairs.emplace_back(std::min(w.cluster_u, w.cluster_v), std::max(w.cluster_u, w.cluster_v));
    return dec;
}

std::vector<SensorId> raised_sensors(const ClusterDecomposition& dec) {
    std::set<SensorId> raised;
    for (const auto& group : dec.leaders) raised.insert(group.begin(), group.end());
    for (const auto& w : dec.witness_pairs) {
        raised.insert(w.u);
        raised.insert(w.v);
    }
    return {raised.begin(), raised.end()};
}

TransformResult transform(const Instance& instance, const RadiiAssignment& r_in, double R, Model model,
                          const std::optional<GridSpec>& grid) {
    check_assignment(instance, r_in);
    check_radius(instance, R);
    if (!is_valid(instance, r_in, model)) throw DomainError("input assignment not valid");

    TransformResult result{RadiiAssignment{}, full_decomposition(instance, R, grid ? *grid : default_grid(instance, R))};
    auto& radii = result.assignment.radii;
    radii.resize(instance.size());
    for (SensorId s = 0; s < instance.size(); ++s) radii[s] = std::min(r_in[s], R);
    for (SensorId s : raised_sensors(result.decomposition)) radii[s] = R;
    return result;
}

}  // namespace topo
