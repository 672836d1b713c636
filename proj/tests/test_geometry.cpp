#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "topoctl/error.hpp"
#include "topoctl/geometry.hpp"
#include "topoctl/network.hpp"

using namespace topo;
using topo::testing::brute_force_mst_weight;

namespace {

Instance line(std::vector<double> xs) {
    std::vector<Point> pts;
    for (double x : xs) pts.push_back({x});
    return Instance(1, std::move(pts));
}

}  // namespace

TEST(InstanceTest, RejectsMalformedInput) {
    EXPECT_THROW(Instance(0, {{}}), DomainError);
    EXPECT_THROW(Instance(2, {}), DomainError);
    EXPECT_THROW(Instance(2, {{1.0, 2.0}, {1.0}}), DomainError);
    EXPECT_THROW(Instance(1, {{std::nan("")}}), DomainError);
}

TEST(DistanceTest, Examples) {
    Instance plane(2, {{0, 0}, {3, 4}});
    EXPECT_EQ(distance(plane, 0, 1), 5.0);
    EXPECT_EQ(distance(plane, 1, 0), 5.0);
    EXPECT_EQ(distance(plane, 1, 1), 0.0);
    EXPECT_EQ(distance(line({0.0, 2.5}), 0, 1), 2.5);
}

TEST(DistanceTest, IndexOutOfRange) {
    Instance plane(2, {{0, 0}, {3, 4}});
    EXPECT_THROW(distance(plane, 0, 2), DomainError);
}

TEST(EmstTest, ForcedTriangle) {
    Instance tri(2, {{0, 0}, {3, 0}, {3, 4}});
    EdgeList expected{{0, 1, 3.0}, {1, 2, 4.0}};
    EXPECT_EQ(emst(tri), expected);
}

TEST(EmstTest, CollinearPath) {
    auto edges = emst(line({0, 1, 3}));
    ASSERT_EQ(edges.size(), 2u);
    EXPECT_EQ(edges[0].length, 1.0);
    EXPECT_EQ(edges[1].length, 2.0);
}

TEST(EmstTest, SingletonHasNoEdges) { EXPECT_TRUE(emst(line({4})).empty()); }

TEST(EmstTest, TiesPreferSmallerIndexPairs) {
    // Unit square: four edges of length 1, the pair (2,3) is the one left out.
    Instance square(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    EdgeList expected{{0, 1, 1.0}, {0, 2, 1.0}, {1, 3, 1.0}};
    EXPECT_EQ(emst(square), expected);
}

TEST(EmstTest, DuplicatePointsGiveZeroLengthEdges) {
    auto edges = emst(line({2, 2, 5}));
    ASSERT_EQ(edges.size(), 2u);
    EXPECT_EQ(edges[0], (Edge{0, 1, 0.0}));
}

TEST(EmstTest, WeightMatchesSpanningTreeEnumeration) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const std::size_t dim = 1 + trial % 3;
        auto inst = topo::testing::random_instance(rng, n, dim);
        auto edges = emst(inst);
        ASSERT_EQ(edges.size(), n - 1);
        double weight = 0.0;
        for (const auto& e : edges) {
            EXPECT_LT(e.u, e.v);
            EXPECT_EQ(e.length, distance(inst, e.u, e.v));
            weight += e.length;
        }
        EXPECT_NEAR(weight, brute_force_mst_weight(inst), 1e-9 * (1.0 + weight)) << "trial " << trial;
    }
}

TEST(RMinTest, Examples) {
    EXPECT_EQ(r_min(Instance(2, {{0, 0}, {3, 0}, {3, 4}})), 4.0);
    EXPECT_EQ(r_min(line({0, 1, 10, 11})), 9.0);
    EXPECT_THROW(r_min(line({0})), DomainError);
}

TEST(RMinTest, IsTheConnectivityThreshold) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = topo::testing::random_instance(rng, 2 + trial % 30, 1 + trial % 3);
        const double threshold = r_min(inst);
        EXPECT_TRUE(is_valid(inst, uniform_assignment(inst, threshold), Model::symmetric));
        EXPECT_FALSE(is_valid(inst, uniform_assignment(inst, threshold * (1 - 1e-9)), Model::symmetric));
    }
}

TEST(NearestNeighborTest, Examples) {
    auto inst = line({0, 1, 3});
    std::vector<SensorId> all{0, 1, 2};
    EXPECT_EQ(nearest_neighbor(inst, 1, all), 0u);

    // Sensor 0 at the origin is equidistant to sensors 2 and 5.
    auto tie = line({0, 7, -4, 9, 12, 4});
    std::vector<SensorId> every{0, 1, 2, 3, 4, 5};
    EXPECT_EQ(nearest_neighbor(tie, 0, every), 2u);

    std::vector<SensorId> self_only{1};
    EXPECT_THROW(nearest_neighbor(inst, 1, self_only), DomainError);
    EXPECT_THROW(nearest_neighbor(inst, 1, {}), DomainError);
}

TEST(NearestNeighborTest, MatchesLinearScan) {
    std::mt19937_64 rng(17);
    for (int q = 0; q < 100; ++q) {
        auto inst = topo::testing::random_instance(rng, 30, 2, 10.0);
        std::vector<SensorId> among;
        for (SensorId s = 0; s < inst.size(); ++s)
            if (rng() % 2 == 0) among.push_back(s);
        const SensorId s = rng() % inst.size();
        among.push_back((s + 1) % inst.size());
        EXPECT_EQ(nearest_neighbor(inst, s, among), topo::testing::linear_scan_nearest(inst, s, among));
    }
}

TEST(BucketTest, HalfOpenCells) {
    GridSpec plane{1.0, {0.0, 0.0}};
    Point origin{0.0, 0.0};
    EXPECT_EQ(bucket_of(origin, plane), (BucketIndex{0, 0}));

    GridSpec nine{9.0, {0.0}};
    Point at_boundary{9.0}, below{8.999}, negative{-0.5};
    EXPECT_EQ(bucket_of(at_boundary, nine), (BucketIndex{1}));
    EXPECT_EQ(bucket_of(below, nine), (BucketIndex{0}));
    EXPECT_EQ(bucket_of(negative, nine), (BucketIndex{-1}));

    EXPECT_THROW(bucket_of(origin, GridSpec{0.0, {0.0, 0.0}}), DomainError);
}

TEST(BucketTest, SubBuckets) {
    GridSpec unit{1.0, {0.0, 0.0}};
    Point a{0.1, 0.1}, b{0.6, 0.6}, c{1.6, 0.2};
    EXPECT_EQ(sub_bucket_of(a, unit).bucket, (BucketIndex{0, 0}));
    EXPECT_EQ(sub_bucket_of(a, unit).sub, (std::vector<std::int64_t>{0, 0}));
    EXPECT_EQ(sub_bucket_of(b, unit).sub, (std::vector<std::int64_t>{1, 1}));
    EXPECT_EQ(sub_bucket_of(c, unit).bucket, (BucketIndex{1, 0}));
    EXPECT_EQ(sub_bucket_of(c, unit).sub, (std::vector<std::int64_t>{1, 0}));

    GridSpec seg{3.0, {0.0}};
    for (double x : {0.0, 1.4, 2.99, 7.5}) {
        Point p{x};
        EXPECT_EQ(sub_bucket_of(p, seg).sub, (std::vector<std::int64_t>{0}));
    }
}

TEST(BucketTest, SameSubBucketMeansWithinRadiusOverSqrtD) {
    std::mt19937_64 rng(23);
    for (std::size_t dim : {2u, 3u}) {
        const double R = 10.0;
        auto inst = topo::testing::random_instance(rng, 400, dim, 40.0);
        GridSpec grid = default_grid(inst, R);
        for (SensorId u = 0; u < inst.size(); ++u) {
            auto su = sub_bucket_of(inst.point(u), grid);
            for (SensorId v = u + 1; v < inst.size(); ++v) {
                auto sv = sub_bucket_of(inst.point(v), grid);
                if (su.bucket == sv.bucket && su.sub == sv.sub)
                    EXPECT_LE(distance(inst, u, v), R / std::sqrt(static_cast<double>(dim)) * (1 + 1e-12));
            }
        }
    }
}

TEST(BucketTest, SmallPerturbationKeepsCell) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> coord(-50.0, 50.0), unit(0.0, 1.0);
    GridSpec grid{3.0, {0.5, -1.25}};
    for (int trial = 0; trial < 1000; ++trial) {
        Point p{coord(rng), coord(rng)};
        auto cell = bucket_of(p, grid);
        double slack = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < 2; ++k) {
            const double lower = grid.origin[k] + static_cast<double>(cell[k]) * grid.cell_side;
            slack = std::min({slack, p[k] - lower, lower + grid.cell_side - p[k]});
        }
        Point q = p;
        q[trial % 2] += (unit(rng) - 0.5) * slack;
        EXPECT_EQ(bucket_of(q, grid), cell);
    }
}

TEST(BucketTest, DefaultGridAnchorsAtComponentwiseMinimum) {
    Instance inst(2, {{3, -1}, {-2, 5}, {0, 0}});
    auto grid = default_grid(inst, 2.0);
    EXPECT_EQ(grid.origin, (Point{-2, -1}));
    EXPECT_EQ(grid.cell_side, 2.0);
    EXPECT_THROW(default_grid(inst, -1.0), DomainError);
}
