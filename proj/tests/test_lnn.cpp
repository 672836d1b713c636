#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "topoctl/error.hpp"
#include "topoctl/lab.hpp"
#include "topoctl/lnn.hpp"

using namespace topo;
using topo::testing::ceil_log2;

namespace {

Instance line(std::vector<double> xs) {
    std::vector<Point> pts;
    for (double x : xs) pts.push_back({x});
    return Instance(1, std::move(pts));
}

std::vector<SensorId> all_sensors(const Instance& inst) {
    std::vector<SensorId> ids(inst.size());
    std::iota(ids.begin(), ids.end(), SensorId{0});
    return ids;
}

}  // namespace

TEST(NngTest, SingleComponentOnALine) {
    auto inst = line({0, 1, 3, 7});
    auto g = nng(inst, all_sensors(inst));
    EXPECT_EQ(g.next, (std::vector<SensorId>{1, 0, 1, 2}));
    EXPECT_EQ(g.component_count(), 1u);
    EXPECT_EQ(g.roots.front(), (std::pair<SensorId, SensorId>{0, 1}));
}

TEST(NngTest, TwoComponents) {
    auto inst = line({0, 1, 10, 11});
    auto g = nng(inst, all_sensors(inst));
    EXPECT_EQ(g.component, (std::vector<std::size_t>{0, 0, 1, 1}));
    ASSERT_EQ(g.roots.size(), 2u);
    EXPECT_EQ(g.roots[0], (std::pair<SensorId, SensorId>{0, 1}));
    EXPECT_EQ(g.roots[1], (std::pair<SensorId, SensorId>{2, 3}));
}

TEST(NngTest, SubsetOfSensors) {
    auto inst = line({0, 1, 10, 11});
    std::vector<SensorId> active{2, 0};
    auto g = nng(inst, active);
    EXPECT_EQ(g.nodes, (std::vector<SensorId>{0, 2}));
    EXPECT_EQ(g.next, (std::vector<SensorId>{2, 0}));
}

TEST(NngTest, RequiresTwoSensors) {
    auto inst = line({0, 1});
    std::vector<SensorId> one{0};
    EXPECT_THROW(nng(inst, one), DomainError);
}

TEST(NngTest, ComponentsAreTwoRootedTrees) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        // Coarse integer coordinates force plenty of distance ties.
        std::uniform_int_distribution<int> coord(0, 6);
        std::vector<Point> pts(2 + trial % 40, Point(2));
        for (auto& p : pts) p = {double(coord(rng)), double(coord(rng))};
        Instance inst(2, pts);
        auto g = nng(inst, all_sensors(inst));
        std::vector<std::size_t> size(g.component_count(), 0);
        for (auto c : g.component) ++size[c];
        for (auto s : size) EXPECT_GE(s, 2u);

        for (std::size_t c = 0; c < g.component_count(); ++c) {
            auto [a, b] = g.roots[c];
            EXPECT_LT(a, b);
            EXPECT_EQ(g.next[a], b);
            EXPECT_EQ(g.next[b], a);
            EXPECT_EQ(g.component[a], c);
        }
        // Following out-edges from any sensor ends in its component's root pair.
        for (SensorId s = 0; s < inst.size(); ++s) {
            SensorId cur = s;
            for (std::size_t step = 0; step < inst.size(); ++step) cur = g.next[cur];
            auto [a, b] = g.roots[g.component[s]];
            EXPECT_TRUE(cur == a || cur == b);
        }
    }
}

TEST(NngTest, PlanarInDegreeAtMostSix) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        auto inst = topo::testing::random_instance(rng, 200, 2);
        EXPECT_LE(max_in_degree(nng(inst, all_sensors(inst))), 6u);
    }
    // Hexagon around a centre: the centre is everyone's nearest neighbour.
    std::vector<Point> hex{{0, 0}};
    for (int k = 0; k < 6; ++k) hex.push_back({std::cos(k * M_PI / 3), std::sin(k * M_PI / 3)});
    Instance star(2, hex);
    EXPECT_LE(max_in_degree(nng(star, all_sensors(star))), 6u);
}

TEST(LnnTest, HandTracedExamples) {
    auto a = lnn(line({0, 1, 3, 7}));
    EXPECT_EQ(a.assignment.radii, (std::vector<double>{7, 1, 2, 4}));
    EXPECT_EQ(a.rounds, 1u);
    EXPECT_EQ(a.level, (std::vector<std::size_t>{1, 0, 0, 0}));

    auto b = lnn(line({0, 1, 10, 11}));
    EXPECT_EQ(b.assignment.radii, (std::vector<double>{11, 1, 10, 1}));
    EXPECT_EQ(b.rounds, 2u);
    EXPECT_EQ(b.level, (std::vector<std::size_t>{2, 0, 1, 0}));

    auto single = lnn(line({5}));
    EXPECT_EQ(single.assignment.radii, (std::vector<double>{0}));
    EXPECT_EQ(single.rounds, 0u);
}

TEST(LnnTest, ValidInTheAsymmetricModelOnly) {
    auto inst = line({0, 1, 3, 7});
    auto plain = lnn(inst);
    EXPECT_TRUE(is_valid(inst, plain.assignment, Model::asymmetric));
    // Sensor 2 (at 3) reaches sensor 1 but sensor 1 does not reach back.
    EXPECT_FALSE(is_valid(inst, plain.assignment, Model::symmetric));

    auto sym = lnn(inst, Model::symmetric);
    EXPECT_EQ(sym.assignment.radii, (std::vector<double>{7, 2, 4, 4}));
    EXPECT_TRUE(is_valid(inst, sym.assignment, Model::symmetric));
}

TEST(LnnTest, RoundsLevelsAndValidity) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + (rng() % 150);
        auto inst = topo::testing::random_instance(rng, n, 1 + trial % 3);
        auto result = lnn(inst);
        EXPECT_LE(result.rounds, ceil_log2(n));
        EXPECT_EQ(std::count(result.level.begin(), result.level.end(), result.rounds), 1);

        // |S_{i+1}| <= |S_i| / 2 where S_i holds the sensors of level >= i.
        for (std::size_t i = 0; i < result.rounds; ++i) {
            auto at_least = [&](std::size_t l) {
                return std::count_if(result.level.begin(), result.level.end(), [&](auto x) { return x >= l; });
            };
            EXPECT_LE(2 * at_least(i + 1), at_least(i));
        }
        EXPECT_TRUE(is_valid(inst, result.assignment, Model::asymmetric));
        EXPECT_TRUE(is_valid(inst, lnn(inst, Model::symmetric).assignment, Model::symmetric));
    }
}

TEST(LnnTest, SymmetricVariantOnlyRaisesRadii) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = topo::testing::random_instance(rng, 60, 2);
        auto plain = lnn(inst);
        auto sym = lnn(inst, Model::symmetric);
        EXPECT_EQ(plain.level, sym.level);
        for (SensorId s = 0; s < inst.size(); ++s) {
            EXPECT_GE(sym.assignment[s], plain.assignment[s]);
            // Every parent edge is present in the symmetric network.
            const SensorId p = sym.parent[s];
            if (p != s) EXPECT_GE(std::min(sym.assignment[s], sym.assignment[p]), distance(inst, s, p));
        }
    }
}

TEST(LnnTest, PerLevelCoverageAtMostSixInThePlane) {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> coord(-10.0, 110.0);
    for (int trial = 0; trial < 30; ++trial) {
        auto inst = topo::testing::random_instance(rng, 150, 2);
        auto result = lnn(inst);
        auto report = network_interference(inst, result.assignment, MeasureMode::exact2d);
        std::vector<Point> probes{report.witness_point};
        for (int k = 0; k < 300; ++k) probes.push_back({coord(rng), coord(rng)});
        for (SensorId s = 0; s < inst.size(); ++s) {
            auto p = inst.point(s);
            probes.emplace_back(p.begin(), p.end());
        }
        for (const auto& p : probes) {
            std::vector<std::size_t> per_level(result.rounds + 1, 0);
            for (SensorId s = 0; s < inst.size(); ++s)
                if (result.assignment[s] >= distance(inst.point(s), p)) ++per_level[result.level[s]];
            for (std::size_t i = 0; i < result.rounds; ++i) EXPECT_LE(per_level[i], 6u);
        }
        EXPECT_LE(report.value, 6 * result.rounds + 1);
    }
}

TEST(LnnTest, NearOptimalOnLowerBoundFamily) {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto inst = gen_lower_bound(k);
        const auto built = network_interference(inst, lnn(inst).assignment, MeasureMode::exact1d).value;
        const auto best = oracle_min_interference(inst, MeasureMode::exact1d, Model::asymmetric).value;
        EXPECT_GE(built, best);
        EXPECT_LE(built, 3 * best) << "k=" << k;
    }
}
