#pragma once

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "../exactnum.hpp"
#include "../treecover/marked_tree.hpp"

namespace perbar {

// A point of P^1 over K: finite value or infinity.
template <class K>
struct PointP1 {
    bool inf = false;
    K value{};

    static PointP1 finite(const K& v) { return {false, v}; }
    static PointP1 infinity() { return {true, K{}}; }
    bool is_infinity() const { return inf; }

    friend bool operator==(const PointP1& a, const PointP1& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.value == b.value;
    }
    friend bool operator!=(const PointP1& a, const PointP1& b) { return !(a == b); }
};

template <class K>
std::string to_string(const PointP1<K>& p) {
    if (p.inf) return "inf";
    return coeff_str(p.value);
}

// Chordal distance on the Riemann sphere, in [0, 1].
inline double chordal(const PointP1<Cx>& a, const PointP1<Cx>& b) {
    if (a.inf && b.inf) return 0.0;
    if (a.inf) return 1.0 / std::sqrt(1.0 + std::norm(b.value));
    if (b.inf) return 1.0 / std::sqrt(1.0 + std::norm(a.value));
    return std::abs(a.value - b.value) / (std::sqrt(1.0 + std::norm(a.value)) * std::sqrt(1.0 + std::norm(b.value)));
}

// The lambda with (p1, p2, p3, p4) ~ (inf, 0, 1, lambda):
// (p4 - p2)(p3 - p1) / ((p3 - p2)(p4 - p1)), factors through infinity dropped.
template <class K>
PointP1<K> cross_ratio(const PointP1<K>& p1, const PointP1<K>& p2, const PointP1<K>& p3, const PointP1<K>& p4) {
    const std::array<const PointP1<K>*, 4> p{&p1, &p2, &p3, &p4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*p[i] == *p[j]) throw std::domain_error("cross-ratio of coincident points");
    auto diff = [](const PointP1<K>& a, const PointP1<K>& b) {
        if (a.inf || b.inf) return K(1);
        return K(a.value - b.value);
    };
    K n = diff(p4, p2) * diff(p3, p1);
    K d = diff(p3, p2) * diff(p4, p1);
    if (is_zero(d)) return PointP1<K>::infinity();
    return PointP1<K>::finite(n / d);
}

template <class K>
K cross_ratio_value(const K& p1, const K& p2, const K& p3, const K& p4) {
    auto r = cross_ratio(PointP1<K>::finite(p1), PointP1<K>::finite(p2), PointP1<K>::finite(p3), PointP1<K>::finite(p4));
    if (r.inf) throw std::domain_error("cross-ratio at infinity");
    return r.value;
}

// Marked points on P^1. Strict configurations reject coincidences when queried.
template <class K>
struct Configuration {
    std::map<Label, PointP1<K>> pos;

    PointP1<K> cross_ratio(const Label& i1, const Label& i2, const Label& i3, const Label& i4) const {
        return perbar::cross_ratio(pos.at(i1), pos.at(i2), pos.at(i3), pos.at(i4));
    }
};

// CR(i1..i4) on marks 1..n as a rational function of the basis y_i = CR(1,2,3,i), i >= 4.
// Variable v of the result is y_{v+4}.
inline RFunc<Rational> cr_rewrite(const std::array<int, 4>& idx, int n) {
    using RF = RFunc<Rational>;
    for (int i : idx)
        if (i < 1 || i > n) throw std::out_of_range("cross-ratio index out of range");
    std::set<int> s(idx.begin(), idx.end());
    if (s.size() != 4) throw std::domain_error("cross-ratio indices must be distinct");
    auto pt = [](int i) -> PointP1<RF> {
        if (i == 1) return PointP1<RF>::infinity();
        if (i == 2) return PointP1<RF>::finite(RF(0));
        if (i == 3) return PointP1<RF>::finite(RF(1));
        return PointP1<RF>::finite(RF::var(i - 4));
    };
    auto r = perbar::cross_ratio(pt(idx[0]), pt(idx[1]), pt(idx[2]), pt(idx[3]));
    if (r.inf) throw std::domain_error("cross-ratio identically infinite");
    return r.value;
}

struct BoundaryValue {
    enum Kind { Zero, One, Infinity, Interior } kind = Interior;
    std::string str() const {
        switch (kind) {
            case Zero: return "0";
            case One: return "1";
            case Infinity: return "inf";
            default: return "interior";
        }
    }
};

// Value of CR(i1..i4) on the stratum of t: forced by the stabilized four-leg tree, or a genuine coordinate.
inline BoundaryValue boundary_cross_ratio(const MarkedTree& t, const Label& i1, const Label& i2, const Label& i3,
                                          const Label& i4) {
    auto s = stabilize(t, {i1, i2, i3, i4});
    if (s.num_vertices() == 1) return {BoundaryValue::Interior};
    auto together = [&](const Label& a, const Label& b) { return s.vertex_of(a) == s.vertex_of(b); };
    if (together(i1, i4)) return {BoundaryValue::Infinity};
    if (together(i2, i4)) return {BoundaryValue::Zero};
    return {BoundaryValue::One};
}

}  // namespace perbar
