#include "topoctl/lab.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "topoctl/detail/random.hpp"
#include "topoctl/error.hpp"

namespace topo {

Instance gen_lower_bound(std::size_t k) {
    if (k > kMaxLowerBoundLevel) throw DomainError("k too large (max " + std::to_string(kMaxLowerBoundLevel) + ")");
    std::vector<double> xs{0.0};
    for (std::size_t i = 1; i <= k; ++i) {
        const double span = xs.back() - xs.front();
        const double shift = span + std::ldexp(1.0, static_cast<int>(2 * i));
        const std::size_t half = xs.size();
        for (std::size_t j = 0; j < half; ++j) xs.push_back(xs[j] + shift);
    }
    std::vector<Point> pts;
    pts.reserve(xs.size());
    for (double x : xs) pts.push_back({x});
    return Instance(1, std::move(pts));
}

Instance gen_uniform_random(std::size_t n, std::size_t dim, std::uint64_t seed, double extent) {
    if (n == 0) throw DomainError("n must be positive");
    if (dim == 0) throw DomainError("dimension must be positive");
    if (!(extent > 0.0) || !std::isfinite(extent)) throw DomainError("extent must be positive");
    std::mt19937_64 rng(seed);
    std::vector<Point> pts(n, Point(dim));
    for (auto& p : pts)
        for (double& x : p) x = extent * detail::unit_uniform(rng);
    return Instance(dim, std::move(pts));
}

Instance gen_clustered_plus_outlier(std::size_t n, std::size_t dim, std::uint64_t seed, double spread,
                                    double separation) {
    if (n < 2) throw DomainError("n must be at least 2");
    if (dim == 0) throw DomainError("dimension must be positive");
    if (!(spread >= 0.0) || !std::isfinite(spread)) throw DomainError("spread must be nonnegative");
    if (!(separation >= 3.0 * spread) || !(separation > 0.0) || !std::isfinite(separation))
        throw DomainError("separation must be positive and at least 3 * spread");

    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(n);
    Point p(dim);
    while (pts.size() + 1 < n) {
        double norm2 = 0.0;
        for (double& x : p) {
            x = spread * (2.0 * detail::unit_uniform(rng) - 1.0);
            norm2 += x * x;
        }
        if (norm2 <= spread * spread) pts.push_back(p);
    }
    Point outlier(dim, 0.0);
    outlier[0] = separation;
    pts.push_back(outlier);
    return Instance(dim, std::move(pts));
}

namespace {

// Depth-first search over radius choices in lexicographic order. A partial
// assignment (unassigned sensors at radius 0) bounds the interference of
// every completion from below, since interference is monotone in the radii.
class MinInterferenceSearch {
public:
    MinInterferenceSearch(const Instance& instance, MeasureMode mode, Model model,
                          const std::vector<std::vector<double>>& choices)
        : instance_(instance), mode_(mode), model_(model), choices_(choices), n_(instance.size()) {
        dist_.assign(n_ * n_, 0.0);
        for (SensorId u = 0; u < n_; ++u)
            for (SensorId v = 0; v < n_; ++v) dist_[u * n_ + v] = distance(instance, u, v);
        current_.radii.assign(n_, 0.0);
    }

    std::optional<MinInterference> run(double first_radius) {
        current_.radii[0] = first_radius;
        descend(1);
        return best_;
    }

private:
    std::size_t measure() const { return network_interference(instance_, current_, mode_).value; }

    bool edge(SensorId u, SensorId v) const {
        const double d = dist_[u * n_ + v];
        return model_ == Model::symmetric ? std::min(current_[u], current_[v]) >= d : current_[u] >= d;
    }

    std::uint32_t reach(SensorId from, bool reverse) const {
        std::uint32_t seen = 1u << from;
        std::uint32_t frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (SensorId u = 0; u < n_; ++u) {
                if (!(frontier & (1u << u))) continue;
                for (SensorId v = 0; v < n_; ++v)
                    if (!(seen & (1u << v)) && (reverse ? edge(v, u) : edge(u, v))) next |= 1u << v;
            }
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    bool valid() const {
        const std::uint32_t all = (1u << n_) - 1;
        if (reach(0, false) != all) return false;
        return model_ == Model::symmetric || reach(0, true) == all;
    }

    void descend(std::size_t sensor) {
        if (best_ && measure() >= best_->value) return;
        if (sensor == n_) {
            if (!valid()) return;
            best_ = MinInterference{measure(), current_};
            return;
        }
        for (double radius : choices_[sensor]) {
            current_.radii[sensor] = radius;
            descend(sensor + 1);
        }
        current_.radii[sensor] = 0.0;
    }

    const Instance& instance_;
    MeasureMode mode_;
    Model model_;
    const std::vector<std::vector<double>>& choices_;
    std::size_t n_;
    std::vector<double> dist_;
    RadiiAssignment current_;
    std::optional<MinInterference> best_;
};

}  // namespace

MinInterference oracle_min_interference(const Instance& instance, MeasureMode mode, Model model) {
    const std::size_t n = instance.size();
    if (n > kMaxOracleSensors)
        throw DomainError("exhaustive search supports at most " + std::to_string(kMaxOracleSensors) + " sensors, got " +
                          std::to_string(n));
    if (instance.dim() > 2) throw DomainError("exhaustive search supports dimension at most 2");
    if (mode == MeasureMode::sampled) throw DomainError("exhaustive search needs a deterministic measurement mode");
    if (n == 1) {
        RadiiAssignment zero{{0.0}};
        return {network_interference(instance, zero, mode).value, zero};
    }

    std::vector<std::vector<double>> choices(n);
    for (SensorId s = 0; s < n; ++s) {
        for (SensorId t = 0; t < n; ++t)
            if (t != s) choices[s].push_back(distance(instance, s, t));
        std::sort(choices[s].begin(), choices[s].end());
        choices[s].erase(std::unique(choices[s].begin(), choices[s].end()), choices[s].end());
    }

    // One worker per radius choice of sensor 0; reduce by value, then by the
    // lexicographically smallest assignment (= smallest first radius).
    std::vector<std::future<std::optional<MinInterference>>> workers;
    for (double first : choices[0]) {
        workers.push_back(std::async(std::launch::async, [&, first] {
            return MinInterferenceSearch(instance, mode, model, choices).run(first);
        }));
    }
    std::optional<MinInterference> best;
    for (auto& w : workers) {
        auto found = w.get();
        if (found && (!best || found->value < best->value)) best = std::move(found);
    }
    // The all-maximum assignment is always valid, so some worker finds a solution.
    return *best;
}

GridDepth oracle_max_depth(const Instance& instance, const RadiiAssignment& r, double pitch) {
    check_assignment(instance, r);
    const std::size_t d = instance.dim();
    if (d > 2) throw DomainError("grid oracle supports dimension at most 2");
    if (!(pitch > 0.0) || !std::isfinite(pitch)) throw DomainError("grid pitch must be positive");

    auto [lo, hi] = bounding_box(instance);
    const double pad = r.max_radius();
    for (std::size_t k = 0; k < d; ++k) {
        lo[k] -= pad;
        hi[k] += pad;
    }
    const auto cols = static_cast<std::int64_t>(std::ceil((hi[0] - lo[0]) / pitch));
    const auto rows = d == 2 ? static_cast<std::int64_t>(std::ceil((hi[1] - lo[1]) / pitch)) : 0;
    if (rows > 20'000'000) throw DomainError("grid pitch too fine");

    GridDepth best{0, Point(d), static_cast<std::size_t>(rows + 1)};
    bool have_best = false;
    Point p(d);
    std::vector<std::pair<std::int64_t, int>> events;

    // Each disk covers a contiguous run of columns in a row. The run is
    // estimated from the chord and then fixed up against the exact predicate,
    // so the count at every grid point equals interference_at there.
    for (std::int64_t row = 0; row <= rows; ++row) {
        if (d == 2) p[1] = lo[1] + static_cast<double>(row) * pitch;
        events.clear();
        for (SensorId s = 0; s < instance.size(); ++s) {
            const auto c = instance.point(s);
            const double dy = d == 2 ? p[1] - c[1] : 0.0;
            const double half = std::sqrt(std::max(0.0, r[s] * r[s] - dy * dy));
            auto covered = [&](std::int64_t col) {
                p[0] = lo[0] + static_cast<double>(col) * pitch;
                return r[s] >= distance(c, p);
            };
            auto first = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::ceil((c[0] - half - lo[0]) / pitch)), 0, cols);
            auto last = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor((c[0] + half - lo[0]) / pitch)), 0, cols);
            while (first > 0 && covered(first - 1)) --first;
            while (first <= last && !covered(first)) ++first;
            if (first > last) continue;
            while (last < cols && covered(last + 1)) ++last;
            while (last > first && !covered(last)) --last;
            events.emplace_back(first, +1);
            events.emplace_back(last + 1, -1);
        }
        std::sort(events.begin(), events.end());
        std::size_t depth = 0;
        if (!have_best) {
            best.witness_point = p;
            best.witness_point[0] = lo[0];
            have_best = true;
        }
        for (const auto& [col, delta] : events) {
            depth = static_cast<std::size_t>(static_cast<std::int64_t>(depth) + delta);
            if (delta > 0 && depth > best.value) {
                best.value = depth;
                best.witness_point = p;
                best.witness_point[0] = lo[0] + static_cast<double>(col) * pitch;
            }
        }
    }
    return best;
}

}  // namespace topo
