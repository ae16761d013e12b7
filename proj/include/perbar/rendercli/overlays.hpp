#pragma once

#include <optional>
#include <vector>

#include "../percurve/engine.hpp"
#include "../treecover/catalog.hpp"
#include "render.hpp"

namespace perbar {

inline std::optional<ChartMark> chart_mark(const Puncture& p) {
    if (!p.plane_image) return std::nullopt;
    const auto& v = *p.plane_image;
    if (v[2].zero()) return ChartMark{false, {}, {}};
    return ChartMark{true, (v[0] / v[2]).to_cx(), (v[1] / v[2]).to_cx()};
}

// Chart coordinates of a PCF limit: the same cross-ratios with the collider at infinity.
inline std::optional<ChartMark> chart_mark(const PcfPoint& p) {
    const auto& c = p.cycle;
    if (c.size() != 5) return std::nullopt;
    try {
        auto X = cross_ratio(c[2], c[3], c[4], c[0]), Y = cross_ratio(c[4], c[1], c[2], c[3]);
        if (X.inf || Y.inf) return ChartMark{false, {}, {}};
        return ChartMark{true, X.value, Y.value};
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

inline DynMap pcf_map(const PcfPoint& p) { return DynMap::from_cycle(2, p.cycle); }

// All PCF points of Per_{2,5} on the four PCF strata.
inline std::vector<PcfPoint> pcf_points_n5() {
    std::vector<PcfPoint> out;
    for (const auto& e : catalog_n5())
        if (e.pcf)
            for (auto& p : pcf_solve(e.build(2), e.name)) out.push_back(std::move(p));
    return out;
}

inline Overlays default_overlays(unsigned threads = 0) {
    Overlays ov;
    for (const auto& r : puncture_report(5, threads))
        for (const auto& p : r.punctures)
            if (auto m = chart_mark(p)) ov.punctures.push_back(*m);
    for (const auto& p : pcf_points_n5())
        if (auto m = chart_mark(p)) ov.pcf.push_back(*m);
    return ov;
}

}  // namespace perbar
