#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "../percurve/engine.hpp"
#include "group.hpp"
#include "weierstrass.hpp"

namespace perbar {

// A puncture of Per_{2,5} as a point of the Weierstrass model.
struct NamedPoint {
    std::string name;     // p1 .. p4, p5, p5', p6, p6', p7, p7'
    std::string stratum;
    std::array<NFElem, 3> plane;
    ECPoint<NFElem> point;
};

// Names follow the plane images: p5 -> [-i:0:1]; for p6, p7 the unprimed point has the smaller X.
inline std::vector<NamedPoint> named_punctures(const std::vector<StratumResult>& report, const WeierstrassModel& m) {
    std::vector<NamedPoint> out;
    for (const auto& r : report) {
        std::vector<NamedPoint> here;
        for (const auto& p : r.punctures) {
            if (!p.plane_image) throw std::domain_error("puncture without plane image: " + r.stratum);
            NamedPoint q;
            q.stratum = r.stratum;
            q.plane = *p.plane_image;
            q.point = ECPoint<NFElem>::from_triple(m.map_point(q.plane));
            here.push_back(std::move(q));
        }
        const std::string idx = r.stratum.substr(r.stratum.find('_') + 1);
        if (here.size() == 2) {
            auto key = [&](const NamedPoint& q) {
                Cx X = q.plane[2].zero() ? Cx(0) : (q.plane[0] / q.plane[2]).to_cx();
                return idx == "5" ? X.imag() : X.real();
            };
            if (key(here[1]) < key(here[0])) std::swap(here[0], here[1]);
            here[0].name = "p" + idx;
            here[1].name = "p" + idx + "'";
        } else {
            for (auto& q : here) q.name = "p" + idx;
        }
        for (auto& q : here) out.push_back(std::move(q));
    }
    return out;
}

inline const NamedPoint& point_named(const std::vector<NamedPoint>& pts, const std::string& name) {
    for (const auto& p : pts)
        if (p.name == name) return p;
    throw std::out_of_range("no puncture named " + name);
}

}  // namespace perbar
