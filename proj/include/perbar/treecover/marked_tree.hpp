#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace perbar {

using Label = std::string;

// A tree with labelled legs. Vertices are 0..n-1, edges are stored in insertion order.
class MarkedTree {
public:
    using Edge = std::pair<int, int>;

    MarkedTree() = default;
    MarkedTree(int nverts, std::vector<Edge> edges, std::map<Label, int> mk)
        : n_(nverts), edges_(std::move(edges)), mk_(std::move(mk)) {
        for (auto& [a, b] : edges_) {
            if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) throw std::invalid_argument("bad edge");
            if (a > b) std::swap(a, b);
        }
        for (const auto& [l, v] : mk_)
            if (v < 0 || v >= n_) throw std::invalid_argument("leg " + l + " on missing vertex");
        if (static_cast<int>(edges_.size()) != n_ - 1 || !connected()) throw std::invalid_argument("not a tree");
    }

    // Build from per-vertex label lists and an edge list.
    static MarkedTree from_lists(const std::vector<std::vector<Label>>& legs, std::vector<Edge> edges) {
        std::map<Label, int> mk;
        for (size_t v = 0; v < legs.size(); ++v)
            for (const auto& l : legs[v]) mk[l] = static_cast<int>(v);
        return MarkedTree(static_cast<int>(legs.size()), std::move(edges), std::move(mk));
    }

    int num_vertices() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<Label, int>& mk() const { return mk_; }
    int vertex_of(const Label& l) const {
        auto it = mk_.find(l);
        if (it == mk_.end()) throw std::out_of_range("no leg " + l);
        return it->second;
    }
    bool has_leg(const Label& l) const { return mk_.count(l) > 0; }
    std::vector<Label> legs_at(int v) const {
        std::vector<Label> r;
        for (const auto& [l, w] : mk_)
            if (w == v) r.push_back(l);
        return r;
    }
    std::vector<int> neighbors(int v) const {
        std::vector<int> r;
        for (const auto& [a, b] : edges_) {
            if (a == v) r.push_back(b);
            if (b == v) r.push_back(a);
        }
        std::sort(r.begin(), r.end());
        return r;
    }
    int edge_index(int a, int b) const {
        if (a > b) std::swap(a, b);
        for (size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i] == Edge{a, b}) return static_cast<int>(i);
        return -1;
    }
    int valence(int v) const {
        int k = 0;
        for (const auto& [a, b] : edges_) k += (a == v) + (b == v);
        for (const auto& [l, w] : mk_) k += (w == v);
        return k;
    }

    // Vertex path from a to b (inclusive).
    std::vector<int> path(int a, int b) const {
        std::vector<int> prev(n_, -2);
        std::vector<int> st{a};
        prev[a] = -1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : neighbors(x))
                if (prev[y] == -2) {
                    prev[y] = x;
                    st.push_back(y);
                }
        }
        std::vector<int> p{b};
        while (p.back() != a) p.push_back(prev[p.back()]);
        std::reverse(p.begin(), p.end());
        return p;
    }

    // Vertices reachable from start without passing through block.
    std::vector<int> component(int start, int block) const {
        std::vector<bool> seen(n_, false);
        seen[start] = true;
        if (block >= 0) seen[block] = true;
        std::vector<int> st{start}, out{start};
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : neighbors(x))
                if (!seen[y]) {
                    seen[y] = true;
                    st.push_back(y);
                    out.push_back(y);
                }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Minimal rooted encoding over all roots. Optional per-vertex tags take part in the encoding.
    std::string canonical(const std::vector<std::string>& tags = {}) const {
        if (n_ == 0) return "()";
        std::vector<std::vector<int>> adj(n_);
        for (const auto& [a, b] : edges_) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<std::vector<Label>> labs(n_);
        for (const auto& [l, v] : mk_) labs[v].push_back(l);
        for (auto& l : labs) std::sort(l.begin(), l.end());
        std::function<std::string(int, int)> enc = [&](int v, int parent) {
            std::vector<std::string> ch;
            for (int c : adj[v])
                if (c != parent) ch.push_back(enc(c, v));
            std::sort(ch.begin(), ch.end());
            std::string s = "(";
            if (!tags.empty()) s += tags[v] + ":";
            for (size_t i = 0; i < labs[v].size(); ++i) s += (i ? "," : "") + labs[v][i];
            s += "|";
            for (const auto& c : ch) s += c;
            return s + ")";
        };
        std::string best;
        for (int r = 0; r < n_; ++r) {
            std::string e = enc(r, -1);
            if (r == 0 || e < best) best = e;
        }
        return best;
    }

    // Human-readable form, e.g. "{*,2}-{1}  {1}-{3,4}" listed by edges.
    std::string describe() const {
        auto vs = [&](int v) {
            auto l = legs_at(v);
            std::string s = "{";
            for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + l[i];
            return s + "}";
        };
        if (edges_.empty()) return vs(0);
        std::string out;
        for (size_t i = 0; i < edges_.size(); ++i) out += (i ? " " : "") + vs(edges_[i].first) + "-" + vs(edges_[i].second);
        return out;
    }

private:
    bool connected() const {
        if (n_ == 0) return false;
        return static_cast<int>(component(0, -1).size()) == n_;
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<Label, int> mk_;
};

inline bool is_stable(const MarkedTree& t) {
    for (int v = 0; v < t.num_vertices(); ++v)
        if (t.valence(v) < 3) return false;
    return true;
}

inline bool are_isomorphic(const MarkedTree& a, const MarkedTree& b) {
    if (a.num_vertices() != b.num_vertices() || a.mk().size() != b.mk().size()) return false;
    return a.canonical() == b.canonical();
}

struct Stabilized {
    MarkedTree tree;
    std::vector<int> origin;  // surviving original vertex for each new vertex
};

// Forget legs outside keep and contract unstable vertices. With rng, the vertex to contract
// and the neighbour it merges into are chosen at random (the result does not depend on it).
inline Stabilized stabilize_with_origin(const MarkedTree& t, const std::set<Label>& keep, std::mt19937* rng = nullptr) {
    if (keep.size() < 3) throw std::invalid_argument("stabilize needs at least 3 kept legs");
    for (const auto& l : keep)
        if (!t.has_leg(l)) throw std::invalid_argument("stabilize: missing leg " + l);
    const int n = t.num_vertices();
    std::vector<std::set<int>> adj(n);
    for (const auto& [a, b] : t.edges()) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::map<Label, int> mk;
    std::vector<int> nlegs(n, 0);
    for (const auto& [l, v] : t.mk())
        if (keep.count(l)) {
            mk[l] = v;
            ++nlegs[v];
        }
    std::vector<bool> alive(n, true);
    while (true) {
        std::vector<int> bad;
        for (int v = 0; v < n; ++v)
            if (alive[v] && !adj[v].empty() && static_cast<int>(adj[v].size()) + nlegs[v] < 3) bad.push_back(v);
        if (bad.empty()) break;
        int v = bad[0];
        if (rng) v = bad[std::uniform_int_distribution<size_t>(0, bad.size() - 1)(*rng)];
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        int u = nb[0];
        if (rng) u = nb[std::uniform_int_distribution<size_t>(0, nb.size() - 1)(*rng)];
        // merge v into u
        adj[u].erase(v);
        for (int w : adj[v])
            if (w != u) {
                adj[w].erase(v);
                adj[w].insert(u);
                adj[u].insert(w);
            }
        adj[v].clear();
        for (auto& [l, x] : mk)
            if (x == v) x = u;
        nlegs[u] += nlegs[v];
        nlegs[v] = 0;
        alive[v] = false;
    }
    std::vector<int> idx(n, -1), origin;
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            idx[v] = static_cast<int>(origin.size());
            origin.push_back(v);
        }
    std::vector<MarkedTree::Edge> edges;
    for (int v = 0; v < n; ++v)
        if (alive[v])
            for (int w : adj[v])
                if (v < w) edges.emplace_back(idx[v], idx[w]);
    std::map<Label, int> nmk;
    for (const auto& [l, x] : mk) nmk[l] = idx[x];
    return {MarkedTree(static_cast<int>(origin.size()), std::move(edges), std::move(nmk)), std::move(origin)};
}

inline MarkedTree stabilize(const MarkedTree& t, const std::set<Label>& keep, std::mt19937* rng = nullptr) {
    return stabilize_with_origin(t, keep, rng).tree;
}

// All stable trees on S up to isomorphism, sorted by edge count then canonical form.
// Built by inserting legs one at a time: on a vertex, on a subdivided edge, or by splitting off a leg.
inline std::vector<MarkedTree> enumerate_stable_trees(const std::vector<Label>& S) {
    if (S.size() < 3) throw std::invalid_argument("need at least 3 legs");
    std::vector<MarkedTree> cur{MarkedTree::from_lists({{S[0], S[1], S[2]}}, {})};
    for (size_t k = 3; k < S.size(); ++k) {
        const Label& nl = S[k];
        std::map<std::string, MarkedTree> next;
        for (const auto& t : cur) {
            const int n = t.num_vertices();
            for (int v = 0; v < n; ++v) {
                auto mk = t.mk();
                mk[nl] = v;
                MarkedTree r(n, t.edges(), mk);
                next.emplace(r.canonical(), r);
            }
            for (size_t e = 0; e < t.edges().size(); ++e) {
                auto edges = t.edges();
                auto [a, b] = edges[e];
                edges.erase(edges.begin() + static_cast<long>(e));
                edges.emplace_back(a, n);
                edges.emplace_back(n, b);
                auto mk = t.mk();
                mk[nl] = n;
                MarkedTree r(n + 1, edges, mk);
                next.emplace(r.canonical(), r);
            }
            for (const auto& [l, v] : t.mk()) {
                auto edges = t.edges();
                edges.emplace_back(v, n);
                auto mk = t.mk();
                mk[l] = n;
                mk[nl] = n;
                MarkedTree r(n + 1, edges, mk);
                next.emplace(r.canonical(), r);
            }
        }
        cur.clear();
        for (auto& [c, t] : next) cur.push_back(std::move(t));
    }
    std::stable_sort(cur.begin(), cur.end(), [](const MarkedTree& a, const MarkedTree& b) {
        if (a.edges().size() != b.edges().size()) return a.edges().size() < b.edges().size();
        return a.canonical() < b.canonical();
    });
    return cur;
}

}  // namespace perbar
