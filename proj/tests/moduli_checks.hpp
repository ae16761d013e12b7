#pragma once
// Checks shared by the moduli tests and the acceptance binary.

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "perbar/moduli.hpp"
#include "perbar/treecover.hpp"

namespace checks {

using namespace perbar;
using RF = RFunc<Rational>;

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    return rat(num(rng), den(rng));
}

// distinct rationals away from 0 and 1
inline std::vector<Rational> generic_values(size_t k, std::mt19937& rng) {
    std::vector<Rational> out;
    while (out.size() < k) {
        Rational q = random_rational(rng);
        if (q == 0 || q == 1 || std::find(out.begin(), out.end(), q) != out.end()) continue;
        out.push_back(q);
    }
    return out;
}

inline int min_exp(const MPoly<Rational>& p, int v) {
    int m = 1 << 20;
    for (const auto& [mono, c] : p.terms()) m = std::min(m, mono_exp(mono, v));
    return m;
}

inline int valuation(const RF& f, int v) { return min_exp(f.num(), v) - min_exp(f.den(), v); }

inline bool unit_at_zero(const MPoly<Rational>& p) {
    return p.divide_monomial(p.monomial_content()).constant_term() != 0;
}

inline int var_of(const MPoly<Rational>& t) {
    const auto& m = t.terms().begin()->first;
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i]) return static_cast<int>(i);
    return -1;
}

inline PointP1<RF> as_rf(const PointP1<MPoly<Rational>>& p) {
    return p.inf ? PointP1<RF>::infinity() : PointP1<RF>::finite(RF(p.value));
}

struct Plumbed {
    PlumbingFamily<Rational> f;
    std::map<Label, PointP1<MPoly<Rational>>> pos;
    std::map<int, std::set<Label>> beyond;  // child vertex -> legs behind the edge to its parent
    std::map<int, int> var;                 // child vertex -> smoothing variable
};

inline Plumbed plumbed(const MarkedTree& t, std::mt19937& rng) {
    Plumbed p;
    p.f = default_plumbing<Rational>(t, "*", generic_values(24, rng));
    p.pos = plumb(p.f);
    for (const auto& [l, v] : t.mk())
        for (int x = v; p.f.parent[x] >= 0; x = p.f.parent[x]) p.beyond[x].insert(l);
    for (int v = 0; v < t.num_vertices(); ++v)
        if (p.f.parent[v] >= 0) p.var[v] = var_of(p.f.edge_scale[v]);
    return p;
}

// +1 when the edge splits {i2,i4} from {i1,i3}, -1 for {i1,i4}|{i2,i3}, 0 otherwise
inline int expected_order(const std::set<Label>& side, const std::array<Label, 4>& q) {
    auto in = [&](int k) { return side.count(q[k]) > 0; };
    int c = 0;
    for (int k = 0; k < 4; ++k) c += in(k);
    auto split = [&](int a, int b) { return c == 2 && in(a) == in(b); };
    if (split(1, 3)) return 1;
    if (split(0, 3)) return -1;
    return 0;
}

inline std::vector<std::array<Label, 4>> ordered_quadruples(const std::vector<Label>& ls) {
    std::vector<std::array<Label, 4>> out;
    for (const auto& a : ls)
        for (const auto& b : ls)
            for (const auto& c : ls)
                for (const auto& d : ls) {
                    std::set<Label> s{a, b, c, d};
                    if (s.size() == 4) out.push_back({a, b, c, d});
                }
    return out;
}

inline std::vector<CatalogEntry> curve_strata() {
    std::vector<CatalogEntry> out;
    for (const auto& e : catalog_n5())
        if (e.group == CatalogGroup::MeetsCurve) out.push_back(e);
    return out;
}

inline std::string quad(const std::array<Label, 4>& q) { return "CR(" + q[0] + "," + q[1] + "," + q[2] + "," + q[3] + ")"; }

struct PlumbingStats {
    int tuples = 0, orders = 0, skipped = 0;
    std::vector<std::string> failures;
};

// Every cross-ratio of the plumbed sigma is a monomial in the smoothing parameters times a unit;
// its order along t_e is +1 / -1 / 0 by the split of the tuple at e, and t -> 0 gives the boundary value.
inline PlumbingStats plumbing_orders(const CombinatorialType& g, std::mt19937& rng) {
    PlumbingStats st;
    auto p = plumbed(g.sigma, rng);
    std::vector<Label> ls;
    for (const auto& [l, v] : g.sigma.mk()) ls.push_back(l);
    for (const auto& q : ordered_quadruples(ls)) {
        ++st.tuples;
        auto cr = cross_ratio(as_rf(p.pos.at(q[0])), as_rf(p.pos.at(q[1])), as_rf(p.pos.at(q[2])), as_rf(p.pos.at(q[3])));
        if (cr.inf) {
            st.failures.push_back(quad(q) + " identically infinite");
            continue;
        }
        RF c = cr.value, c1 = cr.value - RF(1);
        if (!unit_at_zero(c.num()) || !unit_at_zero(c.den())) st.failures.push_back(quad(q) + " is not monomial times unit");
        int zero = 0, pole = 0, one = 0;
        for (const auto& [child, v] : p.var) {
            int want = expected_order(p.beyond[child], q);
            std::array<Label, 4> r{q[0], q[2], q[1], q[3]};  // CR - 1 vanishes where i3, i4 collide
            int want1 = expected_order(p.beyond[child], r) > 0 ? 1 : (want < 0 ? -1 : 0);
            ++st.orders;
            if (valuation(c, v) != want || valuation(c1, v) != want1) {
                std::ostringstream os;
                os << quad(q) << " order " << valuation(c, v) << " along edge to vertex " << child << ", expected " << want;
                st.failures.push_back(os.str());
            }
            zero += want > 0;
            pole += want < 0;
            one += want1 > 0;
        }
        auto b = boundary_cross_ratio(g.sigma, q[0], q[1], q[2], q[3]).kind;
        auto expect = zero ? BoundaryValue::Zero : pole ? BoundaryValue::Infinity : one ? BoundaryValue::One : BoundaryValue::Interior;
        if (b != expect) st.failures.push_back(quad(q) + " boundary value " + BoundaryValue{b}.str() + ", plumbing gives " + BoundaryValue{expect}.str());
    }
    return st;
}

// Target cross-ratios of the node-smoothing tuples of tau vanish to order deg(e) along t_e.
inline PlumbingStats target_orders(const CombinatorialType& g, std::mt19937& rng) {
    PlumbingStats st;
    auto p = plumbed(g.sigma, rng);
    auto x1 = p.pos.at("1").value;
    auto target = [&](const Label& b) {
        if (b == "*") return PointP1<RF>::infinity();
        auto x = p.pos.at(phi_leg_inverse(b, g.n)).value - x1;
        return PointP1<RF>::finite(RF(x.pow(g.d)));
    };
    auto tuples = separation_tuples(g.tau);
    for (size_t eta = 0; eta < g.tau.edges().size(); ++eta) {
        const auto& q = tuples[eta];
        std::array<PointP1<RF>, 4> t{target(q[0]), target(q[1]), target(q[2]), target(q[3])};
        bool clash = false;  // the generic plumbing can glue two targets when * is not extremal in tau
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) clash = clash || (t[a].inf == t[b].inf && (t[a].inf || t[a].value == t[b].value));
        if (clash) {
            ++st.skipped;
            continue;
        }
        auto cr = cross_ratio(t[0], t[1], t[2], t[3]);
        if (cr.inf) {
            st.failures.push_back(quad(q) + " identically infinite");
            continue;
        }
        ++st.tuples;
        std::array<Label, 4> src;
        for (int k = 0; k < 4; ++k) src[k] = q[k] == "*" ? "*" : phi_leg_inverse(q[k], g.n);
        for (const auto& [child, v] : p.var) {
            int se = g.sigma.edge_index(p.f.parent[child], child);
            if (g.phi_e[se] != static_cast<int>(eta)) continue;
            const auto& side = p.beyond[child];
            auto in = [&](int k) { return side.count(src[k]) > 0; };
            bool split = (in(1) && in(3) && !in(0) && !in(2)) || (in(0) && in(2) && !in(1) && !in(3));
            bool none = !in(0) && !in(1) && !in(2) && !in(3);
            if (!split && !none) continue;
            int want = split ? g.deg_e[se] : 0;
            ++st.orders;
            if (valuation(cr.value, v) != want) {
                std::ostringstream os;
                os << "target " << quad(q) << " order " << valuation(cr.value, v) << " along a sigma edge over tau edge " << eta
                   << ", expected " << want;
                st.failures.push_back(os.str());
            }
        }
    }
    return st;
}

}  // namespace checks
