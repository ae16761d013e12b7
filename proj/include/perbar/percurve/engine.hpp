#pragma once

#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "../exactnum.hpp"
#include "../exactnum/elimination.hpp"
#include "../treecover.hpp"
#include "dynamics.hpp"
#include "newton.hpp"

namespace perbar {

using NPoly = MPoly<NFElem>;

// Source index a -> target index of its image b.
inline int phi_index(int a, int n) {
    if (a == 1) return 2;
    int j = (a + 1) % n;
    return j == 0 ? n : j;
}
inline int pre_index(int j, int n) { return std::stoi(phi_leg_inverse(std::to_string(j), n)); }

// Plumbed source family of one combinatorial type with fixed copy labels and edge weights.
// Variable 0 is the smoothing parameter u; t_e = l_e u^{m_e} with l = 1 on the first edge.
struct StratumSetup {
    int d = 2, n = 5;
    NFElem zeta;
    std::vector<std::string> names{"u"};
    std::vector<int> params, lambdas;
    std::vector<int> weights;
    std::vector<std::vector<int>> labels;
    std::map<int, NPoly> pos;                      // a_{i,0}
    std::vector<std::vector<NPoly>> chart_groups;  // coordinates on one component, pairwise distinct
    std::vector<std::vector<NPoly>> spine_groups;  // spine representatives, distinct d-th powers
    std::vector<std::array<int, 4>> tuples;

    int num_unknowns() const { return static_cast<int>(names.size()) - 1; }
    bool is_param(int v) const { return std::find(params.begin(), params.end(), v) != params.end(); }
    NPoly target(int j) const {
        if (j == 2) return NPoly();
        return pos.at(pre_index(j, n)).pow(d);
    }
};

inline NFElem root_of_unity(int d) {
    if (d == 1) return NFElem(1);
    if (d == 2) return NFElem(-1);
    return NFElem::generator(NumberField::cyclotomic_field(d));
}

inline StratumSetup build_setup(const CombinatorialType& g, const std::vector<std::vector<int>>& labels,
                                const std::vector<int>& weights) {
    const MarkedTree& tau = g.tau;
    StratumSetup S;
    S.d = g.d;
    S.n = g.n;
    S.zeta = root_of_unity(g.d);
    S.labels = labels;
    S.weights = weights;
    if (static_cast<int>(weights.size()) != static_cast<int>(tau.edges().size()))
        throw std::invalid_argument("one weight per edge of tau expected");
    if (labels.size() != g.directions.size()) throw std::invalid_argument("one label list per direction expected");

    auto newp = [&] {
        int v = static_cast<int>(S.names.size());
        S.names.push_back("p" + std::to_string(S.params.size() + 1));
        S.params.push_back(v);
        return NPoly::var(v);
    };
    std::map<std::pair<int, int>, NPoly> tv;
    auto tvar = [&](int a, int b) {
        auto key = std::minmax(a, b);
        auto it = tv.find(key);
        if (it != tv.end()) return it->second;
        int e = static_cast<int>(tv.size());
        NPoly t = NPoly::var(0, weights.at(e));
        if (e > 0) {
            int v = static_cast<int>(S.names.size());
            S.names.push_back("l" + std::to_string(e));
            S.lambdas.push_back(v);
            t = t * NPoly::var(v);
        }
        return tv[key] = t;
    };
    auto zpow = [&](int k) { return NPoly::constant(S.zeta.pow(k)); };
    auto pre = [&](const Label& b) { return pre_index(std::stoi(b), g.n); };

    S.pos[1] = NPoly();
    NPoly T(1);
    size_t di = 0;
    for (size_t j = 0; j < g.spine.size(); ++j) {
        int w = g.spine[j];
        if (j > 0) T = T * tvar(g.spine[j - 1], w);
        std::vector<NPoly> vals;
        auto rep = [&] {
            NPoly c = vals.empty() ? NPoly(1) : newp();
            vals.push_back(c);
            return c;
        };
        for (const auto& b : tau.legs_at(w)) {
            if (b == "*" || b == "2") continue;
            NPoly c = rep();
            S.pos[pre(b)] = T * c;
        }
        for (; di < g.directions.size() && g.directions[di].w == w; ++di) {
            NPoly c = rep();
            const auto& blocks = g.blocks[di];
            if (labels[di].size() != blocks.size()) throw std::invalid_argument("one label per block expected");
            std::map<int, int> blk;
            for (size_t bi = 0; bi < blocks.size(); ++bi)
                for (const auto& a : blocks[bi]) blk[std::stoi(a)] = labels[di][bi];
            std::function<void(int, int, const NPoly&, const NPoly&)> rec = [&](int y, int parent, const NPoly& base,
                                                                                  const NPoly& scale) {
                std::vector<NPoly> cs;
                auto coord = [&] {
                    NPoly cc = cs.size() < 2 ? NPoly(static_cast<long>(cs.size())) : newp();
                    cs.push_back(cc);
                    return cc;
                };
                for (const auto& b : tau.legs_at(y)) {
                    NPoly cc = coord();
                    int a = pre(b);
                    S.pos[a] = zpow(blk.at(a)) * (base + scale * cc);
                }
                for (int z : tau.neighbors(y)) {
                    if (z == parent) continue;
                    NPoly cc = coord();
                    NPoly tz = tvar(y, z);
                    rec(z, y, base + scale * cc, scale * tz);
                }
                S.chart_groups.push_back(cs);
            };
            int u = g.directions[di].u;
            NPoly tw = tvar(w, u);
            rec(u, w, T * c, T * tw);
        }
        S.spine_groups.push_back(vals);
    }

    std::set<Label> keep;
    for (int i = 1; i <= g.n; ++i) keep.insert(std::to_string(i));
    for (const auto& q : separation_tuples(stabilize(tau, keep)))
        S.tuples.push_back({std::stoi(q[0]), std::stoi(q[1]), std::stoi(q[2]), std::stoi(q[3])});
    return S;
}

// Copy labels: per direction, block 0 on copy 0 and an injective choice of copies for the rest.
inline std::vector<std::vector<std::vector<int>>> copy_labelings(const CombinatorialType& g) {
    std::vector<std::vector<std::vector<int>>> per_dir;
    for (const auto& p : g.blocks) {
        std::vector<std::vector<int>> opts;
        std::vector<int> cur{0};
        std::vector<bool> used(g.d, false);
        std::function<void()> rec = [&] {
            if (cur.size() == p.size()) {
                opts.push_back(cur);
                return;
            }
            for (int c = 1; c < g.d; ++c) {
                if (used[c]) continue;
                used[c] = true;
                cur.push_back(c);
                rec();
                cur.pop_back();
                used[c] = false;
            }
        };
        rec();
        per_dir.push_back(opts);
    }
    std::vector<std::vector<std::vector<int>>> out{{}};
    for (const auto& opts : per_dir) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& pre : out)
            for (const auto& o : opts) {
                auto x = pre;
                x.push_back(o);
                next.push_back(x);
            }
        out = std::move(next);
    }
    return out;
}

// Edge weights m in {1..maxw}^E with m_0 = 1, lexicographic.
inline std::vector<std::vector<int>> weight_vectors(int edges, int maxw = 3) {
    std::vector<std::vector<int>> out;
    if (edges == 0) return {{}};
    std::vector<int> m(edges, 1);
    while (true) {
        out.push_back(m);
        int k = edges - 1;
        while (k >= 1 && m[k] == maxw) m[k--] = 1;
        if (k < 1) break;
        ++m[k];
    }
    return out;
}

struct LeadingSystem {
    std::vector<NPoly> equations;     // leading coefficients, monomial content removed
    std::vector<NPoly> denominators;  // leading coefficients of the cleared denominators
    int precision = 0;                // relative series precision that sufficed
};

namespace detail {

inline TruncSeries<NPoly> u_series(const NPoly& p, int N) {
    auto up = p.as_upoly(0);
    return TruncSeries<NPoly>::from_poly(up.coeffs(), N);
}

inline LeadingSystem leading_system_at(const StratumSetup& S, int N) {
    std::map<int, NPoly> A = S.pos, B;
    for (int j = 1; j <= S.n; ++j) B[j] = S.target(j);
    auto diff = [&](const std::map<int, NPoly>& P, int i, int j) {
        NPoly p = P.at(i) - P.at(j);
        if (p.zero()) throw std::domain_error("marks coincide identically on the plumbed family");
        return u_series(p, N);
    };
    LeadingSystem L;
    L.precision = N;
    for (const auto& q : S.tuples) {
        auto Na = diff(A, q[3], q[1]) * diff(A, q[2], q[0]);
        auto Da = diff(A, q[2], q[1]) * diff(A, q[3], q[0]);
        auto Nb = diff(B, q[3], q[1]) * diff(B, q[2], q[0]);
        auto Db = diff(B, q[2], q[1]) * diff(B, q[3], q[0]);
        auto h = Na * Db - Nb * Da;
        NPoly e = series_leading(h).second;
        Mono m = e.monomial_content();
        L.equations.push_back(m.empty() ? e : e.divide_monomial(m));
        L.denominators.push_back(series_leading(Da * Db).second);
    }
    return L;
}

}  // namespace detail

// Leading coefficients of CR_source - CR_target for every separating tuple; the relative
// precision starts at 3 and is raised up to 8 when cancellation exhausts it.
inline LeadingSystem leading_system(const StratumSetup& S, int start = 3, int max_precision = 8) {
    for (int N = start; N <= max_precision; ++N) {
        try {
            return detail::leading_system_at(S, N);
        } catch (const TruncationError&) {
        }
    }
    throw TruncationError();
}

// ---------------------------------------------------------------------------------------------
// walls

namespace detail {

template <class V>
V conv_coeff(const NFElem& c) {
    if constexpr (std::is_same_v<V, Cx>) return c.to_cx();
    else return c;
}

}  // namespace detail

template <class V, class Z>
bool off_walls(const StratumSetup& S, const LeadingSystem& L, const std::vector<V>& x, Z near_zero) {
    auto ev = [&](const NPoly& p) { return p.eval_with(x, [](const NFElem& c) { return detail::conv_coeff<V>(c); }); };
    for (int v : S.lambdas)
        if (near_zero(x[v])) return false;
    for (int v : S.params)
        if (near_zero(x[v]) || near_zero(x[v] - V(1))) return false;
    for (const auto& gcs : S.chart_groups) {
        std::vector<V> c;
        for (const auto& p : gcs) c.push_back(ev(p));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j)
                if (near_zero(c[i] - c[j])) return false;
    }
    for (const auto& gcs : S.spine_groups) {
        std::vector<V> c;
        for (const auto& p : gcs) {
            V a = ev(p), r(1);
            for (int k = 0; k < S.d; ++k) r = r * a;
            c.push_back(r);
        }
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j)
                if (near_zero(c[i] - c[j])) return false;
    }
    for (const auto& p : L.denominators)
        if (near_zero(ev(p))) return false;
    return true;
}

// Wall polynomials in a single unknown v (everything else is constant).
inline std::vector<UPoly<NFElem>> wall_polys(const StratumSetup& S, const LeadingSystem& L, int v) {
    std::vector<NPoly> w;
    for (int x : S.lambdas) w.push_back(NPoly::var(x));
    for (int x : S.params) {
        w.push_back(NPoly::var(x));
        w.push_back(NPoly::var(x) - NPoly(1));
    }
    for (const auto& gcs : S.chart_groups)
        for (size_t i = 0; i < gcs.size(); ++i)
            for (size_t j = i + 1; j < gcs.size(); ++j) w.push_back(gcs[i] - gcs[j]);
    for (const auto& gcs : S.spine_groups)
        for (size_t i = 0; i < gcs.size(); ++i)
            for (size_t j = i + 1; j < gcs.size(); ++j) w.push_back(gcs[i].pow(S.d) - gcs[j].pow(S.d));
    for (const auto& p : L.denominators) w.push_back(p);
    std::vector<UPoly<NFElem>> out;
    for (const auto& p : w) out.push_back(to_univariate(p, v));
    return out;
}

// Removes every factor shared with a wall polynomial.
inline UPoly<NFElem> strip_walls(UPoly<NFElem> f, const std::vector<UPoly<NFElem>>& walls) {
    for (const auto& w : walls) {
        if (w.zero()) return UPoly<NFElem>();
        if (w.degree() < 1) continue;
        while (f.degree() > 0) {
            auto g = gcd(f, w);
            if (g.degree() < 1) break;
            f = exact_div(f, g);
        }
    }
    return f;
}

// ---------------------------------------------------------------------------------------------
// exact roots

struct ExactRoots {
    std::vector<NFElem> roots;
    std::vector<QPoly> unresolved;
};

// sqrt of a rational as k * sqrt(D') in Q(sqrt(D')) with D' a squarefree integer.
inline NFElem sqrt_in_quadratic(const Rational& D) {
    Integer p = D.get_num() * D.get_den(), k;
    Integer core = squarefree_part(p, &k);
    if (core == 1) return NFElem(rat(k, D.get_den()));
    return NFElem(NumberField::quadratic(core), {Rational(0), rat(k, D.get_den())});
}

// Roots over Q and quadratic fields; higher-degree irreducible factors are reported.
inline ExactRoots exact_roots(const QPoly& f) {
    ExactRoots r;
    if (f.degree() < 1) return r;
    auto fac = factor_low_degree(f);
    for (const auto& l : fac.linear) r.roots.push_back(NFElem(-l.coeff(0) / l.coeff(1)));
    for (const auto& q : fac.quadratic) {
        Rational b = q.coeff(1) / q.coeff(2), c = q.coeff(0) / q.coeff(2);
        NFElem s = sqrt_in_quadratic(b * b - 4 * c);
        NFElem half(rat(1, 2));
        r.roots.push_back((NFElem(-b) + s) * half);
        r.roots.push_back((NFElem(-b) - s) * half);
    }
    if (fac.unresolved.degree() > 0) r.unresolved.push_back(fac.unresolved);
    return r;
}

inline FieldPtr field_of(const std::vector<NFElem>& xs) {
    FieldPtr f;
    for (const auto& x : xs)
        if (x.field() && x.field()->degree() > 1) f = x.field();
    return f;
}

inline std::string field_name(const FieldPtr& f) {
    if (!f || f->degree() == 1) return "Q";
    if (f->cyclotomic_index() == 4) return "Q(i)";
    if (f->cyclotomic_index()) return "Q(zeta_" + std::to_string(f->cyclotomic_index()) + ")";
    Rational D = -f->minpoly().coeff(0);
    if (D == -1) return "Q(i)";
    return "Q(sqrt(" + D.get_str() + "))";
}

// ---------------------------------------------------------------------------------------------
// punctures

struct Puncture {
    std::string stratum;
    FieldPtr field;
    std::vector<int> weights;
    std::vector<std::vector<int>> labels;
    std::map<std::string, NFElem> unknowns;               // chart parameters of the plumbed family
    std::map<std::string, NFElem> stratum_coords;         // s-coordinates of the limit configuration
    std::map<std::string, PointP1<NFElem>> certificates;  // further limit cross-ratios
    std::optional<std::array<NFElem, 3>> plane_image;
    bool reduced = false;                                 // exact Jacobian is nonzero
};

struct StratumResult {
    std::string stratum;
    std::vector<Puncture> punctures;
    std::vector<std::string> unresolved;  // polynomials that were not solved
    bool positive_dimensional = false;
};

// A mark of the extended source: "*", "i" (a_{i,0}) or "i^k" (a_{i,k}).
struct ExtMark {
    bool star = false;
    int index = 0, copy = 0;
};
inline ExtMark parse_ext_mark(const std::string& s) {
    if (s == "*") return {true, 0, 0};
    auto c = s.find('^');
    if (c == std::string::npos) return {false, std::stoi(s), 0};
    return {false, std::stoi(s.substr(0, c)), std::stoi(s.substr(c + 1))};
}

namespace detail {

// Substitute values for the unknowns; the result is a polynomial in u.
template <class V>
UPoly<V> in_u(const NPoly& p, const std::vector<V>& x) {
    std::vector<V> cs;
    for (const auto& [m, c] : p.terms()) {
        int e = mono_exp(m, 0);
        V a = conv_coeff<V>(c);
        for (size_t v = 1; v < m.size(); ++v)
            for (int k = 0; k < m[v]; ++k) a = a * x[v];
        if (static_cast<int>(cs.size()) <= e) cs.resize(e + 1, V(0));
        cs[e] = cs[e] + a;
    }
    return UPoly<V>(std::move(cs));
}

template <class V, class Z>
int low_order(const UPoly<V>& p, Z near_zero) {
    for (int i = 0; i <= p.degree(); ++i)
        if (!near_zero(p.coeff(i))) return i;
    return -1;
}

}  // namespace detail

// Limit u -> 0 of a cross-ratio of extended marks, a_* = inf.
template <class V, class Z>
PointP1<V> limit_cross_ratio(const StratumSetup& S, const std::vector<V>& x, const std::array<std::string, 4>& marks,
                             Z near_zero) {
    std::array<std::optional<UPoly<V>>, 4> p;
    for (int i = 0; i < 4; ++i) {
        ExtMark m = parse_ext_mark(marks[i]);
        if (m.star) continue;
        NPoly q = S.pos.at(m.index) * NPoly::constant(S.zeta.pow(m.copy));
        p[i] = detail::in_u<V>(q, x);
    }
    auto diff = [&](int i, int j) {
        if (!p[i] || !p[j]) return UPoly<V>::constant(V(1));
        return *p[i] - *p[j];
    };
    UPoly<V> N = diff(3, 1) * diff(2, 0), D = diff(2, 1) * diff(3, 0);
    int on = detail::low_order(N, near_zero), od = detail::low_order(D, near_zero);
    if (on < 0 && od < 0) throw std::domain_error("limit cross-ratio of coincident marks");
    if (od < 0 || (on >= 0 && on < od)) return PointP1<V>::infinity();
    if (on < 0 || on > od) return PointP1<V>::finite(V(0));
    return PointP1<V>::finite(N.coeff(on) / D.coeff(od));
}

// [X : Y : 1] with X = CR(3,4,5,1), Y = CR(5,2,3,4), taken at the lowest order in u.
template <class V, class Z>
std::array<V, 3> limit_plane_image(const StratumSetup& S, const std::vector<V>& x, Z near_zero) {
    auto parts = [&](std::array<int, 4> q) {
        auto P = [&](int i) { return detail::in_u<V>(S.pos.at(i), x); };
        return std::pair{(P(q[3]) - P(q[1])) * (P(q[2]) - P(q[0])), (P(q[2]) - P(q[1])) * (P(q[3]) - P(q[0]))};
    };
    auto [nx, dx] = parts({3, 4, 5, 1});
    auto [ny, dy] = parts({5, 2, 3, 4});
    std::array<UPoly<V>, 3> c{nx * dy, ny * dx, dx * dy};
    int o = -1;
    for (const auto& q : c) {
        int k = detail::low_order(q, near_zero);
        if (k >= 0 && (o < 0 || k < o)) o = k;
    }
    if (o < 0) throw std::domain_error("plane image undefined");
    std::array<V, 3> r{c[0].coeff(o), c[1].coeff(o), c[2].coeff(o)};
    for (auto& a : r)
        if (near_zero(a)) a = V(0);
    for (int i = 2; i >= 0; --i)
        if (!near_zero(r[i])) {
            V s = r[i];
            for (auto& a : r) a = a / s;
            break;
        }
    return r;
}

// Named coordinates of the limit configurations on the n = 5 strata.
struct ChartTuple {
    std::string name;
    std::array<std::string, 4> marks;
    bool coordinate;  // stratum coordinate (true) or certificate (false)
};
inline std::vector<ChartTuple> stratum_chart(const std::string& stratum, int n) {
    if (n != 5) return {};
    if (stratum == "gamma_4") return {{"s3", {"1", "2", "3", "4"}, true}};
    if (stratum == "gamma_5")
        return {{"s2", {"1", "*", "3", "4"}, true},
                {"s3", {"*", "4", "5^1", "2"}, true},
                {"CR(1,2,3,5)", {"1", "2", "3", "5"}, false},
                {"CR(1,3,4,5)", {"1", "3", "4", "5"}, false}};
    if (stratum == "gamma_6")
        return {{"s2", {"1", "*", "4", "3"}, true},
                {"s3", {"*", "2", "3^1", "5"}, true},
                {"CR(1,3,4,5)", {"1", "3", "4", "5"}, false}};
    if (stratum == "gamma_7") return {{"s2", {"1", "2", "3", "4"}, true}, {"s3", {"1", "2", "3", "5"}, true}};
    return {};
}

namespace detail {

inline bool exact_zero(const NFElem& a) { return a.zero(); }

inline MPoly<Rational> to_rational(const NPoly& p) {
    return p.map([](const NFElem& c) { return c.rational_value(); });
}

// Exact solutions of a square system in the unknowns 1..U (U = 1 or 2), rational coefficients.
inline std::vector<std::vector<NFElem>> solve_exact(const StratumSetup& S, const LeadingSystem& L,
                                                    std::vector<std::string>& unresolved, bool& posdim) {
    const int U = S.num_unknowns();
    std::vector<MPoly<Rational>> E;
    for (const auto& e : L.equations) E.push_back(to_rational(e));
    std::vector<std::vector<NFElem>> out;
    auto keep = [&](std::vector<NFElem> x) {
        if (!off_walls(S, L, x, exact_zero)) return;
        for (const auto& e : L.equations)
            if (!e.eval_with(x, [](const NFElem& c) { return c; }).zero()) return;
        for (const auto& o : out)
            if (o == x) return;
        out.push_back(std::move(x));
    };
    if (U == 1) {
        QPoly f = to_univariate(E[0], 1);
        for (size_t i = 1; i < E.size(); ++i) f = gcd(f, to_univariate(E[i], 1));
        if (f.zero()) {
            posdim = true;
            return out;
        }
        auto r = exact_roots(f);
        for (const auto& q : r.unresolved) unresolved.push_back(q.str("v"));
        for (const auto& x : r.roots) keep({NFElem(0), x});
        return out;
    }
    if (U != 2 || E.size() != 2) throw std::domain_error("exact solve needs a square system in at most 2 unknowns");
    QPoly R = to_univariate(resultant_in(E[0], E[1], 2), 1);
    if (R.zero()) {
        posdim = true;
        return out;
    }
    auto r1 = exact_roots(R);
    for (const auto& q : r1.unresolved) unresolved.push_back(q.str(S.names[1]));
    for (const auto& x : r1.roots) {
        UPoly<NFElem> g;
        for (const auto& e : E) {
            auto ex = e.map([](const Rational& c) { return NFElem(c); });
            auto u = to_univariate(substitute_values(ex, {{1, x}}), 2);
            g = g.zero() ? u : gcd(g, u);
        }
        if (g.degree() < 1) continue;
        g = monic(g);
        std::vector<NFElem> ys;
        if (g.degree() == 1) {
            ys.push_back(-g.coeff(0));
        } else if (x.is_rational() && std::all_of(g.coeffs().begin(), g.coeffs().end(),
                                                   [](const NFElem& c) { return c.is_rational(); })) {
            QPoly gq = g.map([](const NFElem& c) { return c.rational_value(); });
            auto r2 = exact_roots(gq);
            for (const auto& q : r2.unresolved) unresolved.push_back(q.str(S.names[2]));
            ys = r2.roots;
        } else {
            // drop wall roots 0 and 1 before giving up
            for (NFElem w : {NFElem(0), NFElem(1)}) {
                UPoly<NFElem> lin(std::vector<NFElem>{-w, NFElem(1)});
                while (g.degree() > 0 && g.eval(w).zero()) g = exact_div(g, lin);
            }
            if (g.degree() == 1) ys.push_back(-g.coeff(0) / g.coeff(1));
            else if (g.degree() > 1) unresolved.push_back("gcd of degree " + std::to_string(g.degree()));
        }
        for (const auto& y : ys) keep({NFElem(0), x, y});
    }
    return out;
}

inline bool jacobian_nonzero(const LeadingSystem& L, const std::vector<NFElem>& x) {
    const int U = static_cast<int>(x.size()) - 1;
    auto ev = [&](const NPoly& p) { return p.eval_with(x, [](const NFElem& c) { return c; }); };
    if (U == 1) return !ev(L.equations[0].derivative(1)).zero();
    NFElem a = ev(L.equations[0].derivative(1)), b = ev(L.equations[0].derivative(2));
    NFElem c = ev(L.equations[1].derivative(1)), d = ev(L.equations[1].derivative(2));
    return !(a * d - b * c).zero();
}

}  // namespace detail

// A type lies in a PCF stratum when forgetting a_* leaves a single component of degree d.
inline bool is_pcf_type(const CombinatorialType& g) {
    std::set<Label> keep;
    for (int i = 1; i <= g.n; ++i) keep.insert(std::to_string(i));
    auto st = stabilize_with_origin(g.sigma, keep);
    return st.tree.num_vertices() == 1 && g.deg_v.at(st.origin.at(0)) == g.d;
}

// Exact punctures on one stratum (base field Q, i.e. d = 2).
inline StratumResult puncture_solve(const CombinatorialType& g, const std::string& name = "") {
    if (g.d != 2) throw std::invalid_argument("exact puncture solving is implemented over Q (d = 2)");
    if (!diagonal_filter(g)) throw std::invalid_argument("type fails the diagonal filter");
    StratumResult res;
    res.stratum = name.empty() ? catalog_name(g) : name;
    const int E = static_cast<int>(g.tau.edges().size());
    for (const auto& labels : copy_labelings(g)) {
        for (const auto& m : weight_vectors(E)) {
            StratumSetup S = build_setup(g, labels, m);
            LeadingSystem L;
            try {
                L = leading_system(S);
            } catch (const TruncationError&) {
                continue;
            }
            std::vector<std::string> unres;
            bool posdim = false;
            auto sols = detail::solve_exact(S, L, unres, posdim);
            if (sols.empty()) {
                res.positive_dimensional = res.positive_dimensional || posdim;
                for (auto& u : unres) res.unresolved.push_back(u);
                continue;
            }
            for (auto& u : unres) res.unresolved.push_back(u);
            for (const auto& x : sols) {
                Puncture p;
                p.stratum = res.stratum;
                p.field = field_of(x);
                p.weights = m;
                p.labels = labels;
                for (int v = 1; v <= S.num_unknowns(); ++v) p.unknowns[S.names[v]] = x[v];
                p.reduced = detail::jacobian_nonzero(L, x);
                for (const auto& ct : stratum_chart(res.stratum, g.n)) {
                    auto val = limit_cross_ratio(S, x, ct.marks, detail::exact_zero);
                    if (ct.coordinate && !val.inf) p.stratum_coords[ct.name] = val.value;
                    else p.certificates[ct.name] = val;
                }
                if (g.n == 5) p.plane_image = limit_plane_image(S, x, detail::exact_zero);
                res.punctures.push_back(std::move(p));
            }
            break;  // first weight vector carrying points
        }
    }
    return res;
}

// Puncture reports for every catalog stratum that meets the curve (PCF strata excluded), in parallel.
inline std::vector<StratumResult> puncture_report(int n, unsigned threads = 0) {
    std::vector<const CatalogEntry*> todo;
    static const auto cat5 = catalog_n5();
    static const auto cat4 = catalog_n4();
    const auto& cat = n == 5 ? cat5 : cat4;
    for (const auto& e : cat)
        if ((e.group == CatalogGroup::MeetsCurve || e.group == CatalogGroup::Degree4) && !e.pcf) todo.push_back(&e);
    std::vector<StratumResult> out(todo.size());
    unsigned nt = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned t = 0; t < std::min<unsigned>(nt, todo.size()); ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next++) < todo.size();) out[i] = puncture_solve(todo[i]->build(2), todo[i]->name);
        });
    for (auto& t : pool) t.join();
    return out;
}

// Number of distinct points on one stratum of Per_{d,4}: one unknown over Q(zeta_d),
// wall factors removed, counted by the degree of the squarefree part. Summed over copy labels.
inline int count_points_one_unknown(const CombinatorialType& g) {
    const int E = static_cast<int>(g.tau.edges().size());
    int total = 0;
    for (const auto& labels : copy_labelings(g)) {
        for (const auto& m : weight_vectors(E)) {
            StratumSetup S = build_setup(g, labels, m);
            if (S.num_unknowns() != 1) throw std::domain_error("stratum family does not have exactly one unknown");
            LeadingSystem L;
            try {
                L = leading_system(S);
            } catch (const TruncationError&) {
                continue;
            }
            UPoly<NFElem> f = to_univariate(L.equations[0], 1);
            for (size_t i = 1; i < L.equations.size(); ++i) f = gcd(f, to_univariate(L.equations[i], 1));
            f = strip_walls(f, wall_polys(S, L, 1));
            int k = f.degree() > 0 ? squarefree(f).degree() : 0;
            if (k > 0) {
                total += k;
                break;
            }
        }
    }
    return total;
}

// ---------------------------------------------------------------------------------------------
// PCF points

struct PcfPoint {
    std::string stratum;
    std::vector<Cx> coords;     // CR(k,1,l0,l) for the remaining marks l, k the collider
    std::vector<Cx> unknowns;
    double residual = 0;
    double cond = 0;
    bool orbit_ok = false;      // limit map sends the free critical point onto the cycle
    std::vector<PointP1<Cx>> cycle;  // limit positions of a_1..a_n
};

namespace detail {

inline MPoly<Cx> to_cx_shifted(const NPoly& p) {
    MPoly<Cx> r;
    for (const auto& [m, c] : p.terms()) {
        Mono s;
        for (size_t v = 1; v < m.size(); ++v) s.push_back(m[v]);
        r += MPoly<Cx>::term(c.to_cx(), s);
    }
    return r;
}

// Source mark colliding with a_* in the limit.
inline int pcf_collider(const CombinatorialType& g) {
    int root = g.tau.vertex_of("*");
    for (const auto& b : g.tau.legs_at(root))
        if (b != "*") return pre_index(std::stoi(b), g.n);
    throw std::domain_error("no mark shares the component of a_*");
}

}  // namespace detail

inline std::vector<PcfPoint> pcf_solve(const CombinatorialType& g, const std::string& name = "") {
    if (!is_pcf_type(g)) throw std::invalid_argument("not a PCF type");
    const std::string sname = name.empty() ? catalog_name(g) : name;
    const int k = detail::pcf_collider(g);
    std::vector<int> rest;
    for (int i = 2; i <= g.n; ++i)
        if (i != k) rest.push_back(i);
    auto nz = [](double tol) { return [tol](const Cx& z) { return std::abs(z) < tol; }; };
    std::vector<PcfPoint> out;
    const int E = static_cast<int>(g.tau.edges().size());
    for (const auto& m : weight_vectors(E)) {
        StratumSetup S = build_setup(g, copy_labelings(g).front(), m);
        LeadingSystem L;
        try {
            L = leading_system(S);
        } catch (const TruncationError&) {
            continue;
        }
        const int U = S.num_unknowns();
        std::vector<std::vector<Cx>> cands;
        if (U == 1) {
            UPoly<NFElem> f = to_univariate(L.equations[0], 1);
            f = strip_walls(f, wall_polys(S, L, 1));
            if (f.degree() < 1) continue;
            f = squarefree(f);
            std::vector<Cx> c;
            for (const auto& a : f.coeffs()) c.push_back(a.to_cx());
            for (const Cx& r : roots_complex(c, 1e-9)) cands.push_back({r});
        } else if (U == 2 && L.equations.size() == 2) {
            auto E0 = detail::to_rational(L.equations[0]), E1 = detail::to_rational(L.equations[1]);
            QPoly R = to_univariate(resultant_in(E0, E1, 2), 1);
            if (R.degree() < 1) continue;
            R = squarefree(R);
            for (const Cx& x : roots_complex(to_cx_coeffs(R), 1e-8)) {
                auto u = E0.as_upoly(2);
                std::vector<Cx> c;
                for (int i = 0; i <= u.degree(); ++i)
                    c.push_back(u.coeff(i).eval_with(std::vector<Cx>{0, x}, [](const Rational& q) { return to_cx(q); }));
                while (!c.empty() && std::abs(c.back()) < 1e-13) c.pop_back();
                if (c.size() < 2) continue;
                Cx best = 0;
                double bres = INFINITY;
                for (const Cx& y : roots_complex(c, 1e-8)) {
                    double r = std::abs(E1.eval_with(std::vector<Cx>{0, x, y}, [](const Rational& q) { return to_cx(q); }));
                    if (r < bres) {
                        bres = r;
                        best = y;
                    }
                }
                cands.push_back({x, best});
            }
        } else {
            throw std::domain_error("PCF stratum family is not square");
        }
        std::vector<MPoly<Cx>> sys;
        for (const auto& e : L.equations) sys.push_back(detail::to_cx_shifted(e));
        for (const auto& c0 : cands) {
            auto nr = newton_polish(sys, c0);
            if (nr.residual > 1e-10 || !std::isfinite(nr.cond)) continue;
            std::vector<Cx> x{Cx(0)};
            x.insert(x.end(), nr.x.begin(), nr.x.end());
            if (!off_walls(S, L, x, nz(1e-8))) continue;
            bool dup = false;
            for (const auto& o : out) {
                double dmax = 0;
                for (size_t i = 0; i < o.unknowns.size(); ++i) dmax = std::max(dmax, std::abs(o.unknowns[i] - nr.x[i]));
                if (dmax < 1e-6) dup = true;
            }
            if (dup) continue;
            PcfPoint p;
            p.stratum = sname;
            p.unknowns = nr.x;
            p.residual = nr.residual;
            p.cond = nr.cond;
            // limit configuration with the collider at infinity
            std::vector<PointP1<Cx>> cyc(g.n);
            cyc[0] = PointP1<Cx>::finite(0);
            cyc[k - 1] = PointP1<Cx>::infinity();
            cyc[rest[0] - 1] = PointP1<Cx>::finite(1);
            for (size_t j = 1; j < rest.size(); ++j) {
                auto v = limit_cross_ratio(S, x,
                                           {std::to_string(k), "1", std::to_string(rest[0]), std::to_string(rest[j])},
                                           nz(1e-9));
                p.coords.push_back(v.inf ? Cx(INFINITY) : v.value);
                cyc[rest[j] - 1] = v;
            }
            p.cycle = cyc;
            try {
                DynMap f = DynMap::from_cycle(g.d, cyc);
                bool hits = false;
                PointP1<Cx> z = PointP1<Cx>::infinity();
                for (int it = 0; it < g.n && !hits; ++it) {
                    z = f(z);
                    hits = chordal(z, cyc[0]) < 1e-8;
                }
                p.orbit_ok = f.cycle_residual() < 1e-8 && hits;
            } catch (const std::domain_error&) {
                p.orbit_ok = false;
            }
            out.push_back(std::move(p));
        }
        if (!out.empty()) break;
    }
    return out;
}

}  // namespace perbar
