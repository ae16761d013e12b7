#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "oracle_values.hpp"
#include "perbar/percurve.hpp"
#include "perbar/rendercli.hpp"

using namespace perbar;

namespace {

const CurveData& curve() {
    static const auto cd = CurveData::fitted();
    return cd;
}

const Overlays& overlays() {
    static const auto ov = default_overlays();
    return ov;
}

Cx random_u(std::mt19937& rng, const Lattice& L) {
    std::uniform_real_distribution<double> a(-1.5, 1.5);
    return a(rng) * L.w1 + a(rng) * L.w2;
}

RenderConfig small(int size) {
    RenderConfig cfg;
    cfg.width = cfg.height = size;
    return cfg;
}

}  // namespace

TEST(Wp, MatchesOracle) {
    const Lattice& L = curve().lattice;
    for (const auto& s : oracle::wp_samples) {
        auto v = wp(s.u, L);
        ASSERT_FALSE(v.pole);
        EXPECT_LT(std::abs(v.p - s.p) / std::max(1.0, std::abs(s.p)), 1e-9) << s.u;
        EXPECT_LT(std::abs(v.dp - s.dp) / std::max(1.0, std::abs(s.dp)), 1e-9) << s.u;
    }
}

TEST(Wp, ParityPeriodicityAndOde) {
    const Lattice& L = curve().lattice;
    std::mt19937 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        Cx u = random_u(rng, L);
        auto a = wp(u, L), b = wp(-u, L), c = wp(u + L.w1, L), d = wp(u - 2.0 * L.w2, L);
        if (a.pole) continue;
        double scale = std::max(1.0, std::abs(a.dp));
        EXPECT_LT(std::abs(a.p - b.p) / scale, 1e-8);
        EXPECT_LT(std::abs(a.dp + b.dp) / scale, 1e-8);
        EXPECT_LT(std::abs(a.p - c.p) / scale, 1e-8);
        EXPECT_LT(std::abs(a.dp - d.dp) / scale, 1e-8);
        Cx ode = a.dp * a.dp - (4.0 * a.p * a.p * a.p - L.g2 * a.p - L.g3);
        EXPECT_LT(std::abs(ode) / std::max(1.0, std::norm(a.dp)), 1e-8);
    }
    EXPECT_TRUE(wp(L.w1 + L.w2, L).pole);
}

TEST(Wp, EllipticLogInvertsWp) {
    const Lattice& L = curve().lattice;
    std::mt19937 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        Cx u = random_u(rng, L);
        auto v = wp(u, L);
        auto w = elliptic_log(v.p, v.dp, L);
        ASSERT_TRUE(w.has_value());
        auto back = wp(*w, L);
        EXPECT_LT(std::abs(back.p - v.p) / std::max(1.0, std::abs(v.p)), 1e-8);
        EXPECT_LT(std::abs(back.dp - v.dp) / std::max(1.0, std::abs(v.dp)), 1e-8);
    }
}

TEST(Param, ChartRoundTripAtSamplePoints) {
    const auto& cd = curve();
    for (const auto& s : oracle::points_x3_2) {
        EXPECT_LT(std::abs(cd.cubic.eval(s.X, s.Y, Cx(1))), 1e-10);
        auto r = chart_point(s.X, s.Y);
        ASSERT_FALSE(r.degenerate()) << s.X;
        EXPECT_LT(std::abs(r.point->x[0] - Cx(2)), 1e-6);
        EXPECT_LT(std::abs(r.point->x[1] - s.x4), 1e-6);
        EXPECT_LT(std::abs(r.point->x[2] - s.x5), 1e-6);
    }
}

TEST(Param, ForwardParametrizationFollowsTheCurve) {
    const auto& cd = curve();
    for (const auto& s : oracle::points_x3_2) {
        auto u = u_of_chart(s.X, s.Y, cd);
        ASSERT_TRUE(u.has_value());
        auto r = param_point(*u, cd);
        ASSERT_FALSE(r.degenerate());
        EXPECT_LT(std::abs(r.point->x[1] - s.x4), 1e-6);
        EXPECT_LT(std::abs(r.point->x[2] - s.x5), 1e-6);
        auto f = DynMap::from_hpoint(*r.point);
        EXPECT_LT(f.cycle_residual(), 1e-8);
        EXPECT_EQ(f.period_of_zero(5), 5);
    }
}

TEST(Param, DegenerateNearTheOrigin) {
    EXPECT_TRUE(param_point(Cx(1e-13, 0), curve()).degenerate());
    EXPECT_TRUE(param_point(curve().lattice.w1, curve()).degenerate());
}

TEST(Classify, PcfPointsAreAttracted) {
    RenderConfig cfg;
    auto pts = pcf_points_n5();
    ASSERT_EQ(pts.size(), 20u);
    for (const auto& p : pts) {
        auto c = classify(pcf_map(p), cfg);
        EXPECT_TRUE(c.attracted) << p.stratum;
        EXPECT_LT(c.distance, 1e-8) << p.stratum;
    }
}

TEST(Classify, PerturbedPcfPointsStayAttracted) {
    RenderConfig cfg;
    const auto& cd = curve();
    for (const auto& p : pcf_points_n5()) {
        auto m = chart_mark(p);
        ASSERT_TRUE(m && m->finite);
        auto u = u_of_chart(m->X, m->Y, cd);
        ASSERT_TRUE(u.has_value());
        auto r = param_point(*u + 1e-4, cd);
        ASSERT_FALSE(r.degenerate()) << p.stratum;
        EXPECT_TRUE(classify(DynMap::from_hpoint(*r.point), cfg).attracted) << p.stratum;
    }
}

TEST(Classify, OneIterationIsNotEnough) {
    RenderConfig cfg;
    cfg.maxiter = 1;
    for (const auto& h : sample_curve(2, 5, 6, 5)) EXPECT_FALSE(classify(DynMap::from_hpoint(h), cfg).attracted);
}

TEST(Config, ParsesKeysSectionsAndComments) {
    std::istringstream in(R"(# parameter picture
[image]
width = 96
height = 80   # trailing comment
maxiter = 300
eps_attract = 5e-4
palette = "gray"
output = "out #1.ppm"
[domain]
domain = chart
x_min = -2
x_max = 2.5
sheet = 1
overlay_pcf = false
)");
    auto c = parse_render_config(in);
    EXPECT_EQ(c.width, 96);
    EXPECT_EQ(c.height, 80);
    EXPECT_EQ(c.maxiter, 300);
    EXPECT_DOUBLE_EQ(c.eps_attract, 5e-4);
    EXPECT_EQ(c.palette, "gray");
    EXPECT_EQ(c.output, "out #1.ppm");
    EXPECT_EQ(c.domain, DomainKind::Chart);
    EXPECT_DOUBLE_EQ(c.x_max, 2.5);
    EXPECT_EQ(c.sheet, 1);
    EXPECT_FALSE(c.overlay_pcf);
    EXPECT_TRUE(c.overlay_punctures);
}

TEST(Config, RejectsBadInput) {
    for (const char* text : {"width = 0\n", "colour = red\n", "maxiter = 2.5\n", "width\n", "palette = neon\n",
                             "overlay_pcf = yes\n", "eps_attract = -1\n", "sheet = 2\n", "width = 12px\n"}) {
        std::istringstream in(text);
        EXPECT_THROW(parse_render_config(in), ConfigError) << text;
    }
    EXPECT_THROW(load_render_config("/nonexistent/render.toml"), std::runtime_error);
}

TEST(Render, SmokeRenderIsMixed) {
    auto res = render(small(64), curve(), overlays());
    EXPECT_EQ(res.cls.size(), 64u * 64u);
    EXPECT_GT(res.attracted(), 0);
    EXPECT_GT(res.count(0), 0);
    EXPECT_LT(res.count(-1), 64 * 64 / 20);
    EXPECT_EQ(res.pcf_pixels.size(), 20u);
    for (const auto& p : res.pcf_pixels) EXPECT_GT(res.at(p[0], p[1]), 0);
}

TEST(Render, ChartDomain) {
    auto cfg = small(32);
    cfg.domain = DomainKind::Chart;
    auto res = render(cfg, curve(), overlays());
    EXPECT_GT(res.attracted() + res.count(0), 0);
}

TEST(Render, DeterministicAcrossRunsAndThreads) {
    auto cfg = small(40);
    cfg.threads = 1;
    auto a = render(cfg, curve(), overlays());
    cfg.threads = 3;
    auto b = render(cfg, curve(), overlays());
    auto c = render(cfg, curve(), overlays());
    EXPECT_EQ(a.image.ppm(), b.image.ppm());
    EXPECT_EQ(b.image.ppm(), c.image.ppm());
    EXPECT_EQ(a.cls, b.cls);
}

TEST(Render, PpmFormat) {
    auto res = render(small(16), curve());
    std::string ppm = res.image.ppm();
    const std::string header = "P6\n16 16\n255\n";
    ASSERT_EQ(ppm.substr(0, header.size()), header);
    EXPECT_EQ(ppm.size(), header.size() + 3u * 16 * 16);
    std::string path = ::testing::TempDir() + "perbar_test.ppm";
    res.image.write_ppm(path);
    std::ifstream in(path, std::ios::binary);
    std::string back((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(back, ppm);
    std::remove(path.c_str());
    EXPECT_THROW(res.image.write_ppm("/nonexistent/dir/x.ppm"), std::runtime_error);
}
