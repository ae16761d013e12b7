#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "marked_tree.hpp"

namespace perbar {

// phi on source legs: a_* -> b_*, a_1 -> b_2, a_{i,0} -> b_{i+1 mod n}.
// Source legs are named "*", "1", "2".."n" (a_{i,0} is "i"), target legs "*", "1".."n".
inline Label phi_leg(const Label& a, int n) {
    if (a == "*") return "*";
    int i = std::stoi(a);
    if (i == 1) return "2";
    int j = (i + 1) % n;
    return std::to_string(j == 0 ? n : j);
}
inline Label phi_leg_inverse(const Label& b, int n) {
    if (b == "*") return "*";
    if (b == "2") return "1";
    int j = std::stoi(b);
    int i = j - 1;
    if (i <= 0) i += n;
    return std::to_string(i);
}
inline std::vector<Label> source_labels(int n) {
    std::vector<Label> r{"*"};
    for (int i = 1; i <= n; ++i) r.push_back(std::to_string(i));
    return r;
}
inline std::vector<Label> target_labels(int n) { return source_labels(n); }

using Block = std::vector<Label>;
using Partition = std::vector<Block>;

// Off-spine direction of tau: spine vertex w, first vertex u off the spine, the subtree behind u.
struct Direction {
    int w = -1;
    int u = -1;
    std::vector<int> subtree;
    std::vector<Label> marks;  // source labels lying over the subtree
};

struct CombinatorialType {
    int d = 0, n = 0;
    MarkedTree sigma, tau;
    std::vector<int> phi_v, phi_e;  // sigma vertex -> tau vertex, sigma edge -> tau edge
    std::vector<int> deg_v, deg_e;
    std::map<Label, int> deg_leg;

    // construction data
    std::vector<int> spine;                          // tau vertices from mk(b_*) to mk(b_2)
    std::vector<int> sigma_spine;                    // sigma vertex over spine[i]
    std::vector<Direction> directions;
    std::vector<Partition> blocks;                   // per direction; blocks in order
    std::vector<std::vector<std::vector<int>>> copies;  // [direction][copy][subtree index] -> sigma vertex

    int num_blocks(size_t dir) const { return static_cast<int>(blocks[dir].size()); }

    // Identifies the type up to isomorphism.
    std::string key() const {
        std::vector<std::string> parts;
        for (const auto& p : blocks) {
            std::vector<std::string> bs;
            for (auto b : p) {
                std::sort(b.begin(), b.end());
                std::string s;
                for (const auto& l : b) s += l + ",";
                bs.push_back(s);
            }
            std::sort(bs.begin(), bs.end());
            std::string s = "[";
            for (const auto& b : bs) s += "{" + b + "}";
            parts.push_back(s + "]");
        }
        std::sort(parts.begin(), parts.end());
        std::string s = tau.canonical() + "#";
        for (const auto& p : parts) s += p;
        return s;
    }

    std::string blocks_str() const {
        std::string s;
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (i) s += " ";
            for (const auto& b : blocks[i]) {
                s += "{";
                for (size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + b[k];
                s += "}";
            }
        }
        return s;
    }
};

namespace detail {

inline std::vector<Direction> directions_of(const MarkedTree& tau, const std::vector<int>& spine, int n) {
    std::set<int> on(spine.begin(), spine.end());
    std::vector<Direction> out;
    for (int w : spine)
        for (int u : tau.neighbors(w)) {
            if (on.count(u)) continue;
            Direction dir;
            dir.w = w;
            dir.u = u;
            dir.subtree = tau.component(u, w);
            for (const auto& [b, v] : tau.mk())
                if (std::binary_search(dir.subtree.begin(), dir.subtree.end(), v)) dir.marks.push_back(phi_leg_inverse(b, n));
            std::sort(dir.marks.begin(), dir.marks.end());
            out.push_back(std::move(dir));
        }
    return out;
}

inline void set_partitions_rec(const std::vector<Label>& items, size_t k, int maxblocks, Partition& cur,
                               std::vector<Partition>& out) {
    if (k == items.size()) {
        out.push_back(cur);
        return;
    }
    for (size_t i = 0; i < cur.size(); ++i) {
        cur[i].push_back(items[k]);
        set_partitions_rec(items, k + 1, maxblocks, cur, out);
        cur[i].pop_back();
    }
    if (static_cast<int>(cur.size()) < maxblocks) {
        cur.push_back({items[k]});
        set_partitions_rec(items, k + 1, maxblocks, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// Set partitions with at most maxblocks blocks, blocks ordered by first element.
inline std::vector<Partition> set_partitions(const std::vector<Label>& items, int maxblocks) {
    std::vector<Partition> out;
    Partition cur;
    detail::set_partitions_rec(items, 0, maxblocks, cur, out);
    return out;
}

// Builds the type over tau whose off-spine copies carry the given blocks of source marks.
// Every block lies in a single direction; directions without a listed block carry a single block.
inline CombinatorialType build_type(int d, int n, const MarkedTree& tau, const std::vector<Block>& blocks) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    CombinatorialType g;
    g.d = d;
    g.n = n;
    g.tau = tau;
    g.spine = tau.path(tau.vertex_of("*"), tau.vertex_of("2"));
    g.directions = detail::directions_of(tau, g.spine, n);
    g.blocks.assign(g.directions.size(), {});
    std::set<Label> used;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block");
        int dir = -1;
        for (size_t i = 0; i < g.directions.size(); ++i) {
            const auto& m = g.directions[i].marks;
            if (std::find(m.begin(), m.end(), b[0]) != m.end()) dir = static_cast<int>(i);
        }
        if (dir < 0) throw std::invalid_argument("block mark " + b[0] + " is not off the spine");
        for (const auto& l : b) {
            const auto& m = g.directions[dir].marks;
            if (std::find(m.begin(), m.end(), l) == m.end() || !used.insert(l).second)
                throw std::invalid_argument("block does not fit a direction: " + l);
        }
        g.blocks[dir].push_back(b);
    }
    for (size_t i = 0; i < g.directions.size(); ++i) {
        std::vector<Label> rest;
        for (const auto& l : g.directions[i].marks)
            if (!used.count(l)) rest.push_back(l);
        if (!rest.empty()) {
            if (!g.blocks[i].empty()) throw std::invalid_argument("marks left outside blocks");
            g.blocks[i].push_back(rest);
        }
        if (static_cast<int>(g.blocks[i].size()) > d) throw std::invalid_argument("more blocks than sheets");
    }

    int nv = 0;
    std::vector<MarkedTree::Edge> edges;
    std::map<Label, int> mk;
    for (int w : g.spine) {
        g.sigma_spine.push_back(nv++);
        g.phi_v.push_back(w);
        g.deg_v.push_back(d);
    }
    for (size_t i = 0; i + 1 < g.spine.size(); ++i) edges.emplace_back(g.sigma_spine[i], g.sigma_spine[i + 1]);
    auto spine_index = [&](int w) {
        return static_cast<int>(std::find(g.spine.begin(), g.spine.end(), w) - g.spine.begin());
    };
    for (const auto& [b, v] : tau.mk()) {
        int k = spine_index(v);
        if (k < static_cast<int>(g.spine.size())) mk[phi_leg_inverse(b, n)] = g.sigma_spine[k];
    }
    g.copies.resize(g.directions.size());
    for (size_t di = 0; di < g.directions.size(); ++di) {
        const auto& dir = g.directions[di];
        for (int c = 0; c < d; ++c) {
            std::vector<int> cm(dir.subtree.size());
            for (size_t j = 0; j < dir.subtree.size(); ++j) {
                cm[j] = nv++;
                g.phi_v.push_back(dir.subtree[j]);
                g.deg_v.push_back(1);
            }
            auto at = [&](int x) {
                return cm[std::lower_bound(dir.subtree.begin(), dir.subtree.end(), x) - dir.subtree.begin()];
            };
            edges.emplace_back(g.sigma_spine[spine_index(dir.w)], at(dir.u));
            for (const auto& [x, y] : tau.edges())
                if (std::binary_search(dir.subtree.begin(), dir.subtree.end(), x) &&
                    std::binary_search(dir.subtree.begin(), dir.subtree.end(), y))
                    edges.emplace_back(at(x), at(y));
            if (c < static_cast<int>(g.blocks[di].size()))
                for (const auto& a : g.blocks[di][c]) mk[a] = at(tau.vertex_of(phi_leg(a, n)));
            g.copies[di].push_back(cm);
        }
    }
    g.sigma = MarkedTree(nv, edges, mk);
    for (const auto& [a, b] : g.sigma.edges()) {
        int e = tau.edge_index(g.phi_v[a], g.phi_v[b]);
        g.phi_e.push_back(e);
        g.deg_e.push_back(std::min(g.deg_v[a], g.deg_v[b]));
    }
    for (const auto& l : source_labels(n)) g.deg_leg[l] = (l == "*" || l == "1") ? d : 1;
    return g;
}

struct TypeViolation {
    int clause;
    std::string message;
};

// Checks the six structural clauses in order and returns every violation found.
inline std::vector<TypeViolation> validate_type(const CombinatorialType& g) {
    std::vector<TypeViolation> out;
    const auto& s = g.sigma;
    const auto& t = g.tau;
    const int d = g.d, n = g.n;
    auto fail = [&](int c, std::string m) { out.push_back({c, std::move(m)}); };
    if (static_cast<int>(g.phi_v.size()) != s.num_vertices() || g.phi_e.size() != s.edges().size() ||
        static_cast<int>(g.deg_v.size()) != s.num_vertices() || g.deg_e.size() != s.edges().size()) {
        fail(1, "maps have wrong size");
        return out;
    }

    // (1) surjective homomorphism
    {
        std::set<int> iv(g.phi_v.begin(), g.phi_v.end()), ie(g.phi_e.begin(), g.phi_e.end());
        if (static_cast<int>(iv.size()) != t.num_vertices()) fail(1, "phi not surjective on vertices");
        if (ie.size() != t.edges().size() || ie.count(-1)) fail(1, "phi not surjective on edges");
        for (size_t e = 0; e < s.edges().size(); ++e) {
            auto [a, b] = s.edges()[e];
            if (g.phi_e[e] < 0 || t.edge_index(g.phi_v[a], g.phi_v[b]) != g.phi_e[e])
                fail(1, "edge " + std::to_string(e) + " not mapped to the edge between images");
        }
    }
    // (2) markings
    {
        auto want = source_labels(n);
        std::set<Label> have;
        for (const auto& [a, v] : s.mk()) have.insert(a);
        if (have != std::set<Label>(want.begin(), want.end())) fail(2, "source legs are not A_{n,0}");
        for (const auto& [a, v] : s.mk()) {
            Label b = phi_leg(a, n);
            if (!t.has_leg(b) || t.vertex_of(b) != g.phi_v[v]) fail(2, "leg " + a + " not over " + b);
        }
        for (const auto& a : want) {
            auto it = g.deg_leg.find(a);
            int wd = (a == "*" || a == "1") ? d : 1;
            if (it == g.deg_leg.end() || it->second != wd) fail(2, "leg degree of " + a);
        }
    }
    // (3) fibers and local balancing
    {
        std::vector<int> ve(t.edges().size(), 0), vv(t.num_vertices(), 0);
        for (size_t e = 0; e < s.edges().size(); ++e)
            if (g.phi_e[e] >= 0) ve[g.phi_e[e]] += g.deg_e[e];
        for (int v = 0; v < s.num_vertices(); ++v) vv[g.phi_v[v]] += g.deg_v[v];
        for (size_t e = 0; e < ve.size(); ++e)
            if (ve[e] != d) fail(3, "edge fiber over " + std::to_string(e) + " has degree " + std::to_string(ve[e]));
        for (size_t w = 0; w < vv.size(); ++w)
            if (vv[w] != d) fail(3, "vertex fiber over " + std::to_string(w) + " has degree " + std::to_string(vv[w]));
        for (int v = 0; v < s.num_vertices(); ++v) {
            std::map<int, int> sum;
            for (size_t e = 0; e < s.edges().size(); ++e) {
                auto [a, b] = s.edges()[e];
                if (a == v || b == v) sum[g.phi_e[e]] += g.deg_e[e];
            }
            for (const auto& [te, k] : sum)
                if (k != g.deg_v[v]) fail(3, "edges at vertex " + std::to_string(v) + " not balanced");
        }
    }
    // (4) degree-d vertices are the path mk(a_*)..mk(a_1)
    if (s.has_leg("*") && s.has_leg("1")) {
        auto p = s.path(s.vertex_of("*"), s.vertex_of("1"));
        std::set<int> ps(p.begin(), p.end());
        for (int v = 0; v < s.num_vertices(); ++v) {
            bool big = g.deg_v[v] == d;
            if (big != static_cast<bool>(ps.count(v))) fail(4, "vertex " + std::to_string(v) + " degree off the path rule");
            if (g.deg_v[v] != d && g.deg_v[v] != 1) fail(4, "vertex degree not in {1,d}");
        }
    }
    // (5) two degree-d flags at each degree-d vertex
    for (int v = 0; v < s.num_vertices(); ++v) {
        if (g.deg_v[v] != d) continue;
        int k = 0;
        for (size_t e = 0; e < s.edges().size(); ++e) {
            auto [a, b] = s.edges()[e];
            if ((a == v || b == v) && g.deg_e[e] == d) ++k;
        }
        for (const auto& a : s.legs_at(v))
            if (g.deg_leg.count(a) && g.deg_leg.at(a) == d) ++k;
        if (k != 2) fail(5, "vertex " + std::to_string(v) + " has " + std::to_string(k) + " degree-d flags");
    }
    // (6) stability, counting the implicit marks a_{i,k}
    {
        if (!is_stable(t)) fail(6, "tau unstable");
        for (int v = 0; v < s.num_vertices(); ++v) {
            int val = static_cast<int>(s.neighbors(v).size());
            if (g.deg_v[v] == d) {
                for (const auto& a : s.legs_at(v)) val += (a == "*" || a == "1") ? 1 : d;
            } else {
                val += static_cast<int>(t.legs_at(g.phi_v[v]).size());
            }
            if (val < 3) fail(6, "sigma vertex " + std::to_string(v) + " unstable");
        }
    }
    return out;
}

inline bool is_valid_type(const CombinatorialType& g) { return validate_type(g).empty(); }

inline std::set<Label> cycle_labels(int n) {
    std::set<Label> r;
    for (int i = 1; i <= n; ++i) r.insert(std::to_string(i));
    return r;
}

// stabilize(sigma; 1..n) against stabilize(tau; 1..n), identifying a_1 with 1 and a_{i,0} with i.
inline bool diagonal_filter(const CombinatorialType& g) {
    auto keep = cycle_labels(g.n);
    return stabilize(g.sigma, keep).canonical() == stabilize(g.tau, keep).canonical();
}

// Sum over tau vertices of the local dimensions: Hurwitz factors on the spine, M_{0,val} elsewhere.
inline int stratum_dimension(const CombinatorialType& g) {
    int dim = 0;
    for (int w = 0; w < g.tau.num_vertices(); ++w) {
        int val = g.tau.valence(w);
        bool on_spine = std::find(g.spine.begin(), g.spine.end(), w) != g.spine.end();
        dim += on_spine ? (val - 1) - 2 : val - 3;
    }
    return dim;
}

// Number of root-of-unity labellings: the first block of a direction sits on copy 0,
// the others on distinct nontrivial copies.
inline long component_count(const CombinatorialType& g) {
    long c = 1;
    for (const auto& p : g.blocks)
        for (int j = 1; j < static_cast<int>(p.size()); ++j) c *= g.d - j;
    return c;
}

struct StratumRecord {
    CombinatorialType type;
    int dimension = 0;
    long component_count = 0;
    bool passes_diagonal = false;
};

inline std::vector<StratumRecord> enumerate_types(int d, int n, unsigned threads = 0) {
    if (d < 2 || d > 12 || (n != 4 && n != 5))
        throw std::invalid_argument("enumerate_types supports 2 <= d <= 12 and n in {4,5}");
    auto taus = enumerate_stable_trees(target_labels(n));
    std::vector<std::vector<StratumRecord>> per(taus.size());
    auto work = [&](size_t i) {
        const auto& tau = taus[i];
        auto spine = tau.path(tau.vertex_of("*"), tau.vertex_of("2"));
        auto dirs = detail::directions_of(tau, spine, n);
        std::vector<std::vector<Partition>> opts;
        for (const auto& dir : dirs) opts.push_back(set_partitions(dir.marks, d));
        std::vector<size_t> idx(dirs.size(), 0);
        while (true) {
            std::vector<Block> blocks;
            for (size_t k = 0; k < dirs.size(); ++k)
                for (const auto& b : opts[k][idx[k]]) blocks.push_back(b);
            auto g = build_type(d, n, tau, blocks);
            if (is_valid_type(g)) {
                StratumRecord r;
                r.dimension = stratum_dimension(g);
                r.component_count = component_count(g);
                r.passes_diagonal = diagonal_filter(g);
                r.type = std::move(g);
                per[i].push_back(std::move(r));
            }
            size_t k = 0;
            while (k < dirs.size() && ++idx[k] == opts[k].size()) idx[k++] = 0;
            if (k == dirs.size()) break;
        }
    };
    unsigned nt = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min<unsigned>(nt, static_cast<unsigned>(taus.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            for (size_t i = t; i < taus.size(); i += nt) work(i);
        });
    for (auto& th : pool) th.join();
    std::vector<StratumRecord> out;
    for (auto& v : per)
        for (auto& r : v) out.push_back(std::move(r));
    return out;
}

// Two-row DOT diagram: sigma on top, tau below, phi dashed.
inline std::string to_dot(const CombinatorialType& g, const std::string& name = "type") {
    std::ostringstream o;
    auto legs = [](const std::vector<Label>& ls, char p) {
        std::string s;
        for (size_t i = 0; i < ls.size(); ++i) s += (i ? " " : "") + std::string(1, p) + ls[i];
        return s;
    };
    o << "digraph \"" << name << "\" {\n  rankdir=TB;\n  node [shape=circle, fontsize=10];\n";
    o << "  subgraph cluster_sigma { label=\"sigma\"; rank=same;\n";
    for (int v = 0; v < g.sigma.num_vertices(); ++v)
        o << "    s" << v << " [label=\"" << legs(g.sigma.legs_at(v), 'a') << "\""
          << (g.deg_v[v] == g.d ? ", penwidth=3" : "") << "];\n";
    o << "  }\n  subgraph cluster_tau { label=\"tau\"; rank=same;\n";
    for (int v = 0; v < g.tau.num_vertices(); ++v)
        o << "    t" << v << " [label=\"" << legs(g.tau.legs_at(v), 'b') << "\"];\n";
    o << "  }\n";
    for (size_t e = 0; e < g.sigma.edges().size(); ++e) {
        auto [a, b] = g.sigma.edges()[e];
        o << "  s" << a << " -> s" << b << " [dir=none" << (g.deg_e[e] == g.d ? ", penwidth=3" : "") << "];\n";
    }
    for (const auto& [a, b] : g.tau.edges()) o << "  t" << a << " -> t" << b << " [dir=none];\n";
    for (int v = 0; v < g.sigma.num_vertices(); ++v)
        o << "  s" << v << " -> t" << g.phi_v[v] << " [style=dashed, color=gray];\n";
    o << "}\n";
    return o.str();
}

inline std::string csv_header() { return "index,tau,blocks,dimension,component_count,passes_diagonal,name"; }

inline std::string csv_row(size_t index, const StratumRecord& r, const std::string& name = "") {
    std::ostringstream o;
    o << index << ",\"" << r.type.tau.describe() << "\",\"" << r.type.blocks_str() << "\"," << r.dimension << ","
      << r.component_count << "," << (r.passes_diagonal ? "true" : "false") << "," << name;
    return o.str();
}

}  // namespace perbar
