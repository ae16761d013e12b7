#pragma once

#include <sstream>

#include "../exactnum/json_io.hpp"
#include "engine.hpp"

namespace perbar {

inline json nf_json(const NFElem& a) { return json{{"text", a.str()}, {"exact", to_json(a)}}; }

inline json point_to_json(const PointP1<NFElem>& p) {
    if (p.inf) return "inf";
    return nf_json(p.value);
}

inline json to_json(const Puncture& p) {
    json j;
    j["stratum"] = p.stratum;
    j["field"] = field_name(p.field);
    j["field_minpoly"] = p.field ? p.field->minpoly().str("x") : std::string("x");
    json u = json::object(), s = json::object(), c = json::object();
    for (const auto& [k, v] : p.unknowns) u[k] = nf_json(v);
    for (const auto& [k, v] : p.stratum_coords) s[k] = nf_json(v);
    for (const auto& [k, v] : p.certificates) c[k] = point_to_json(v);
    j["chart"] = u;
    j["coords"] = s;
    j["certificates"] = c;
    if (p.plane_image) {
        json img = json::array();
        for (const auto& a : *p.plane_image) img.push_back(nf_json(a));
        j["plane_image"] = img;
        j["plane_image_text"] = "[" + p.plane_image->at(0).str() + " : " + p.plane_image->at(1).str() + " : " +
                                p.plane_image->at(2).str() + "]";
    }
    j["weights"] = p.weights;
    j["reduced"] = p.reduced;
    return j;
}

inline json to_json(const StratumResult& r) {
    json j{{"stratum", r.stratum}, {"count", r.punctures.size()}};
    json ps = json::array();
    for (const auto& p : r.punctures) ps.push_back(to_json(p));
    j["punctures"] = ps;
    if (!r.unresolved.empty()) j["unresolved"] = r.unresolved;
    if (r.positive_dimensional) j["positive_dimensional"] = true;
    return j;
}

inline json cx_to_json(const Cx& z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const PcfPoint& p) {
    json c = json::array();
    for (const auto& z : p.coords) c.push_back(cx_to_json(z));
    return json{{"stratum", p.stratum}, {"coords", c}, {"residual", p.residual}, {"cond", p.cond}, {"orbit_ok", p.orbit_ok}};
}

}  // namespace perbar
