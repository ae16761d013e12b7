#pragma once

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "cross_ratio.hpp"

namespace perbar {

// One-parameter-per-edge smoothing of a nodal tree of lines.
// Every vertex other than the root has a parent; the node to the parent sits at infinity in the
// vertex's own chart and at node_coord[v] in the parent's chart. edge_scale[v] is the smoothing
// parameter of the edge (parent, v); legs missing from leg_coord sit at infinity on the root.
template <class K>
struct PlumbingFamily {
    MarkedTree tree;
    int root = 0;
    std::vector<int> parent;                 // -1 at the root
    std::vector<MPoly<K>> node_coord;        // indexed by child vertex
    std::vector<MPoly<K>> edge_scale;        // indexed by child vertex
    std::map<Label, MPoly<K>> leg_coord;

    // Parents oriented away from root.
    static std::vector<int> orient(const MarkedTree& t, int root) {
        std::vector<int> par(t.num_vertices(), -2);
        par[root] = -1;
        std::vector<int> st{root};
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : t.neighbors(x))
                if (par[y] == -2) {
                    par[y] = x;
                    st.push_back(y);
                }
        }
        return par;
    }
};

// Position of each leg: c_1 + t_1 (c_2 + t_2 (... + t_k u)).
template <class K>
std::map<Label, PointP1<MPoly<K>>> plumb(const PlumbingFamily<K>& f) {
    const int n = f.tree.num_vertices();
    std::vector<MPoly<K>> base(n), scale(n);
    std::vector<bool> done(n, false);
    std::function<void(int)> fill = [&](int v) {
        if (done[v]) return;
        if (v == f.root) {
            base[v] = MPoly<K>(0);
            scale[v] = MPoly<K>(1);
        } else {
            int p = f.parent.at(v);
            if (p < 0) throw std::invalid_argument("plumbing: vertex without parent");
            fill(p);
            base[v] = base[p] + scale[p] * f.node_coord.at(v);
            scale[v] = scale[p] * f.edge_scale.at(v);
        }
        done[v] = true;
    };
    std::map<Label, PointP1<MPoly<K>>> out;
    for (const auto& [l, v] : f.tree.mk()) {
        auto it = f.leg_coord.find(l);
        if (it == f.leg_coord.end()) {
            if (v != f.root) throw std::domain_error("plumbing: leg " + l + " at infinity off the root");
            out[l] = PointP1<MPoly<K>>::infinity();
            continue;
        }
        fill(v);
        out[l] = PointP1<MPoly<K>>::finite(base[v] + scale[v] * it->second);
    }
    return out;
}

// Default charts: at each vertex the finite flags (legs in label order, then children) get
// 0, 1, then the supplied generic values; the root puts its first leg at infinity.
// Every edge gets its own variable t_v (index edge_var0 + k, in the order children are met).
template <class K>
PlumbingFamily<K> default_plumbing(const MarkedTree& t, const Label& root_leg, const std::vector<K>& generic,
                                   int edge_var0 = 0) {
    PlumbingFamily<K> f;
    f.tree = t;
    f.root = t.vertex_of(root_leg);
    f.parent = PlumbingFamily<K>::orient(t, f.root);
    const int n = t.num_vertices();
    f.node_coord.assign(n, MPoly<K>(0));
    f.edge_scale.assign(n, MPoly<K>(1));
    size_t g = 0;
    int ev = edge_var0;
    std::vector<int> order{f.root};
    for (size_t k = 0; k < order.size(); ++k) {
        int v = order[k];
        std::vector<std::pair<bool, std::string>> flags;  // (is_leg, label or child id)
        for (const auto& l : t.legs_at(v))
            if (!(v == f.root && l == root_leg)) flags.push_back({true, l});
        for (int c : t.neighbors(v))
            if (c != f.parent[v]) flags.push_back({false, std::to_string(c)});
        for (size_t j = 0; j < flags.size(); ++j) {
            MPoly<K> c;
            if (j == 0) c = MPoly<K>(0);
            else if (j == 1) c = MPoly<K>(1);
            else {
                if (g >= generic.size()) throw std::invalid_argument("default_plumbing: not enough generic values");
                c = MPoly<K>::constant(generic[g++]);
            }
            if (flags[j].first) {
                f.leg_coord[flags[j].second] = c;
            } else {
                int ch = std::stoi(flags[j].second);
                f.node_coord[ch] = c;
                f.edge_scale[ch] = MPoly<K>::var(ev++);
                order.push_back(ch);
            }
        }
    }
    return f;
}

// Coordinates on a stable tree: one node-smoothing 4-tuple per edge (i1, i3 on one side,
// i2, i4 on the other) and the cross-ratios (l0, l1, l2, lj) at vertices of valence >= 4.
inline std::vector<std::array<Label, 4>> separation_tuples(const MarkedTree& t) {
    auto first_leg = [&](int start, int avoid) -> Label {
        std::vector<int> st{start};
        std::set<int> seen{start, avoid};
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            auto ls = t.legs_at(x);
            if (!ls.empty()) return ls.front();
            for (int y : t.neighbors(x))
                if (seen.insert(y).second) st.push_back(y);
        }
        throw std::logic_error("direction without legs");
    };
    auto flags = [&](int v, int other) {
        std::vector<Label> ls = t.legs_at(v);
        for (int y : t.neighbors(v))
            if (y != other) ls.push_back(first_leg(y, v));
        return ls;
    };
    std::vector<std::array<Label, 4>> out;
    for (const auto& [a, b] : t.edges()) {
        auto la = flags(a, b), lb = flags(b, a);
        out.push_back({la[0], lb[0], la[1], lb[1]});
    }
    for (int v = 0; v < t.num_vertices(); ++v) {
        auto ls = flags(v, -1);
        for (size_t j = 3; j < ls.size(); ++j) out.push_back({ls[0], ls[1], ls[2], ls[j]});
    }
    return out;
}

}  // namespace perbar
