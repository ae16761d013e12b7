#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle_values.hpp"
#include "perbar/treecover.hpp"

using namespace perbar;

namespace {

std::vector<Label> labels(int k) {
    std::vector<Label> s;
    for (int i = 0; i < k; ++i) s.push_back(std::to_string(i));
    return s;
}

std::set<std::string> passing_names(const std::vector<StratumRecord>& recs) {
    std::set<std::string> out;
    for (const auto& r : recs)
        if (r.passes_diagonal) out.insert(catalog_name(r.type));
    return out;
}

}  // namespace

TEST(StableTrees, CountsMatchBoundaryOfM0n) {
    // number of points of the boundary complex of M_{0,k}: 1, 4, 26, 236, 2752
    const std::vector<size_t> want{1, 4, 26, 236, 2752};
    for (int k = 3; k <= 7; ++k) EXPECT_EQ(enumerate_stable_trees(labels(k)).size(), want[k - 3]) << k;
}

TEST(StableTrees, AllStableAndPairwiseDistinct) {
    auto ts = enumerate_stable_trees(labels(6));
    std::set<std::string> keys;
    for (const auto& t : ts) {
        EXPECT_TRUE(is_stable(t));
        keys.insert(t.canonical());
    }
    EXPECT_EQ(keys.size(), ts.size());
}

TEST(StableTrees, StabilizationIsIdempotentAndStable) {
    std::mt19937 rng(4);
    auto ts = enumerate_stable_trees(labels(7));
    std::uniform_int_distribution<size_t> pick(0, ts.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        const auto& t = ts[pick(rng)];
        std::set<Label> keep;
        for (const auto& l : labels(7))
            if (rng() % 2) keep.insert(l);
        for (const auto& l : labels(7))
            if (keep.size() < 3) keep.insert(l);
        auto s = stabilize(t, keep);
        EXPECT_TRUE(is_stable(s));
        EXPECT_EQ(s.mk().size(), keep.size());
        EXPECT_TRUE(are_isomorphic(stabilize(s, keep), s));
    }
}

TEST(CoverType, PhiLegShiftsIndices) {
    EXPECT_EQ(phi_leg("*", 5), "*");
    EXPECT_EQ(phi_leg("1", 5), "2");
    EXPECT_EQ(phi_leg("5", 5), "1");
    for (int n = 4; n <= 6; ++n)
        for (const auto& l : source_labels(n)) EXPECT_EQ(phi_leg_inverse(phi_leg(l, n), n), l);
}

TEST(Enumeration, CountsAgainstBruteForce) {
    for (const auto& c : oracle::enum_counts) {
        auto recs = enumerate_types(c.d, c.n);
        int filtered = 0;
        long comps = 0;
        for (const auto& r : recs) {
            EXPECT_TRUE(is_valid_type(r.type));
            if (r.passes_diagonal) {
                ++filtered;
                comps += r.component_count;
            }
        }
        EXPECT_EQ(static_cast<int>(recs.size()), c.total) << c.d << "," << c.n;
        EXPECT_EQ(filtered, c.filtered) << c.d << "," << c.n;
        EXPECT_EQ(comps, c.component_sum) << c.d << "," << c.n;
    }
}

TEST(Enumeration, Per25FilterSet) {
    auto found = passing_names(enumerate_types(2, 5));
    EXPECT_EQ(found.size(), 20u);
    for (const auto& e : catalog_n5()) {
        bool want = e.group == CatalogGroup::MeetsCurve || e.group == CatalogGroup::FilterOnly;
        EXPECT_EQ(found.count(e.name), want ? 1u : 0u) << e.name;
    }
}

TEST(Enumeration, NegativeTypeIsValidButRejected) {
    auto g = catalog_entry(catalog_n5(), "negative").build(2);
    EXPECT_TRUE(is_valid_type(g));
    EXPECT_FALSE(diagonal_filter(g));
    auto r = catalog_entry(catalog_n5(), "ramified").build(2);
    EXPECT_TRUE(is_valid_type(r));
    EXPECT_FALSE(diagonal_filter(r));
}

TEST(Enumeration, Degree4ComponentCounts) {
    for (int d = 2; d <= 6; ++d) {
        auto recs = enumerate_types(d, 4);
        auto found = passing_names(recs);
        const std::vector<long> expect{(d - 1L) * (d - 2), 1, 1, d - 1L, d - 1L, 1, 1, 1};
        auto cat = catalog_n4();
        for (size_t i = 0; i < cat.size(); ++i) {
            if (expect[i] == 0) {
                EXPECT_EQ(found.count(cat[i].name), 0u) << "d = " << d;
                continue;
            }
            ASSERT_EQ(found.count(cat[i].name), 1u) << cat[i].name << " d = " << d;
            EXPECT_EQ(component_count(cat[i].build(d)), expect[i]) << cat[i].name << " d = " << d;
        }
    }
}

TEST(Validation, BrokenDegreeIsReported) {
    auto g = catalog_n5()[0].build(2);
    g.deg_e[0] = g.deg_e[0] == 1 ? 2 : 1;
    EXPECT_FALSE(validate_type(g).empty());
}

TEST(Validation, CatalogTypesAreValid) {
    for (const auto& e : catalog_n5()) EXPECT_TRUE(is_valid_type(e.build(2))) << e.name;
    for (int d = 3; d <= 6; ++d)
        for (const auto& e : catalog_n4()) EXPECT_TRUE(is_valid_type(e.build(d))) << e.name << " d = " << d;
}

TEST(Validation, DegreesBalance) {
    // every sigma edge over a tau edge: local degrees over that edge sum to d
    for (const auto& rec : enumerate_types(2, 5)) {
        const auto& g = rec.type;
        std::vector<int> sum(g.tau.edges().size(), 0);
        for (size_t e = 0; e < g.phi_e.size(); ++e) sum[g.phi_e[e]] += g.deg_e[e];
        for (int s : sum) EXPECT_EQ(s, g.d);
    }
}

TEST(Output, DotAndCsv) {
    auto g = catalog_entry(catalog_n5(), "gamma_4").build(2);
    auto dot = to_dot(g, "gamma_4");
    EXPECT_NE(dot.find("gamma_4"), std::string::npos);
    EXPECT_EQ(csv_header().substr(0, 5), "index");
    auto recs = enumerate_types(2, 5);
    EXPECT_EQ(csv_row(0, recs[0]).substr(0, 2), "0,");
}
