#pragma once

#include <algorithm>
#include <array>
#include <mutex>
#include <optional>
#include <vector>

#include "../elliptic/periods.hpp"
#include "../elliptic/weierstrass.hpp"
#include "../percurve/diagonal.hpp"
#include "../percurve/newton.hpp"
#include "../percurve/dynamics.hpp"
#include "../percurve/sampler.hpp"
#include "wp.hpp"

namespace perbar {

// Fitted cubic of Per_{2,5}-bar with its Weierstrass model and period lattice.
struct CurveData {
    PlaneCurve cubic;
    WeierstrassModel model;
    Invariants inv;
    Lattice lattice;

    static CurveData from_cubic(const PlaneCurve& c) {
        CurveData r;
        r.cubic = c;
        r.model = weierstrass_model(c);
        r.inv = invariants(r.model.curve);
        r.lattice = periods(r.model.curve);
        return r;
    }
    // Fit from sampled points of Per_{2,5}.
    static CurveData fitted(int samples = 25, unsigned seed = 7) {
        std::vector<std::array<Cx, 3>> pts;
        for (const auto& h : sample_curve(2, 5, samples, seed)) pts.push_back(plane_point(h));
        return from_cubic(fit_plane_curve(pts, 3));
    }

    // Affine chart point (X, Y) of the cubic -> (wp, wp') of y^2 = 4x^3 - g2 x - g3.
    std::array<Cx, 2> chart_to_wp(Cx X, Cx Y) const {
        const auto& w = model.curve;
        Cx al = to_cx(model.alpha), x = al * X, y = al * Y;
        return {x + to_cx(inv.b2) / 12.0, 2.0 * y + to_cx(w.a1) * x + to_cx(w.a3)};
    }
    std::array<Cx, 2> wp_to_chart(Cx p, Cx dp) const {
        const auto& w = model.curve;
        Cx al = to_cx(model.alpha), x = p - to_cx(inv.b2) / 12.0;
        Cx y = (dp - to_cx(w.a1) * x - to_cx(w.a3)) / 2.0;
        return {x / al, y / al};
    }
};

struct Degenerate {};

struct ParamResult {
    std::optional<HPoint<Cx>> point;  // empty: Degenerate
    Cx X, Y;
    double residual = INFINITY;
    bool degenerate() const { return !point; }
};

namespace detail {

// |p(x)| relative to the sum of the absolute values of its terms at x.
template <class K>
double rel_residual(const MPoly<K>& p, const std::vector<Cx>& x) {
    Cx v = 0;
    double scale = 0;
    for (const auto& [m, a] : p.terms()) {
        Cx t = to_cx(a);
        for (size_t i = 0; i < m.size(); ++i) t *= std::pow(x[i], m[i]);
        v += t;
        scale += std::abs(t);
    }
    return scale > 0 ? std::abs(v) / scale : 0.0;
}

// Distinct marks and targets (chordally), and a closed critical 5-cycle. Scale-free, unlike the sampler's check.
inline bool config_ok(const HPoint<Cx>& h, double sep = 1e-10) {
    std::vector<PointP1<Cx>> a, b;
    for (int i = 1; i <= h.n; ++i) {
        a.push_back(PointP1<Cx>::finite(h.source(i)));
        b.push_back(PointP1<Cx>::finite(h.target(i)));
    }
    for (int i = 0; i < h.n; ++i)
        for (int j = i + 1; j < h.n; ++j)
            if (chordal(a[i], a[j]) < sep || chordal(b[i], b[j]) < sep) return false;
    try {
        DynMap f = DynMap::from_hpoint(h);
        return f.cycle_residual() < 1e-6 && f.period_of_zero(h.n, 1e-6) == h.n;
    } catch (const std::exception&) {
        return false;
    }
}

// Elimination data in variables x4, x5, X, Y (indices 0..3), built once.
struct ChartInverse {
    MPoly<Rational> F;                  // both cross-ratio constraints agree on x3
    std::vector<MPoly<Rational>> R;     // Res_{x5}(F, G) in x4, coefficients by degree, factors x4, x4 -+ 1 removed
    MPoly<Rational> N, D;               // x3 = N / D
    std::vector<MPoly<Rational>> diag;  // diagonal equations in x3, x4, x5

    static const ChartInverse& get() {
        static const ChartInverse inst = build();
        return inst;
    }

    static ChartInverse build() {
        using P = MPoly<Rational>;
        P x4 = P::var(0), x5 = P::var(1), X = P::var(2), Y = P::var(3), one(1);
        ChartInverse c;
        // CR(3,4,5,1) = X gives x3 = x4 x5 / (X (x5 - x4) + x4);
        // CR(5,2,3,4) = Y gives x3 = (Y (x4 - x5) - (x4 - 1) x5) / (Y (x4 - x5) - (x4 - 1)).
        c.N = x4 * x5;
        c.D = X * (x5 - x4) + x4;
        P n2 = Y * (x4 - x5) - (x4 - one) * x5, d2 = Y * (x4 - x5) - (x4 - one);
        c.F = c.N * d2 - n2 * c.D;
        c.diag = diagonal_system(2, 5).equations;
        const auto& E = c.diag[0];
        const int k = E.degree_in(0);
        P G;
        for (const auto& [m, a] : E.terms()) {
            int e3 = mono_exp(m, 0);
            G += P::term(a, {mono_exp(m, 1), mono_exp(m, 2)}) * c.N.pow(e3) * c.D.pow(k - e3);
        }
        auto r = resultant_in(c.F, G, 1).as_upoly(0);
        for (int i = 0; i <= r.degree(); ++i) c.R.push_back(r.coeff(i));
        while (!c.R.empty() && c.R.front().zero()) c.R.erase(c.R.begin());
        // these roots make marks collide for every (X, Y)
        for (long root : {1L, -1L})
            for (;;) {
                P v;
                for (size_t i = c.R.size(); i-- > 0;) v = v * P(root) + c.R[i];
                if (!v.zero() || c.R.size() < 2) break;
                std::vector<P> q(c.R.size() - 1);
                P carry;
                for (size_t i = c.R.size(); i-- > 1;) {
                    carry = carry * P(root) + c.R[i];
                    q[i - 1] = carry;
                }
                c.R = std::move(q);
            }
        return c;
    }
};

}  // namespace detail

// Configuration (x3, x4, x5) of Per_{2,5} with plane image (X, Y).
inline ParamResult chart_point(Cx X, Cx Y) {
    const auto& ci = detail::ChartInverse::get();
    ParamResult out;
    out.X = X;
    out.Y = Y;
    const std::vector<Cx> at{0, 0, X, Y};
    auto cx = [](const Rational& q) { return to_cx(q); };
    std::vector<Cx> c;
    for (const auto& a : ci.R) c.push_back(a.eval_with(at, cx));
    double cmax = 0;
    for (const auto& a : c) cmax = std::max(cmax, std::abs(a));
    while (!c.empty() && std::abs(c.back()) < 1e-13 * cmax) c.pop_back();
    if (c.size() < 2) return out;
    std::vector<Cx> r4;
    try {
        r4 = roots_complex(c, 1e-10);
    } catch (const std::exception&) {
        return out;
    }
    auto Fu = ci.F.as_upoly(1);
    std::vector<std::pair<double, std::vector<Cx>>> cands;
    for (const Cx& x4 : r4) {
        std::vector<Cx> f;
        for (int i = 0; i <= Fu.degree(); ++i) f.push_back(Fu.coeff(i).eval_with(std::vector<Cx>{x4, 0, X, Y}, cx));
        while (!f.empty() && std::abs(f.back()) < 1e-12) f.pop_back();
        if (f.size() < 2) continue;
        for (const Cx& x5 : roots_complex(f, 1e-10)) {
            std::vector<Cx> v{x4, x5, X, Y};
            Cx d = ci.D.eval_with(v, cx);
            if (std::abs(d) < 1e-12) continue;
            std::vector<Cx> x{ci.N.eval_with(v, cx) / d, x4, x5};
            double res = 0;
            for (const auto& e : ci.diag) res = std::max(res, detail::rel_residual(e, x));
            if (res < 1e-7) cands.push_back({res, x});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // polish on the diagonal equations plus the first cross-ratio constraint
    using P = MPoly<Cx>;
    P a3 = P::var(0), a4 = P::var(1), a5 = P::var(2);
    std::vector<P> sys;
    for (const auto& e : ci.diag) {
        P p;
        for (const auto& [m, q] : e.terms()) p += P::term(to_cx(q), m);
        sys.push_back(p);
    }
    sys.push_back(a4 * (a5 - a3) - P::constant(X) * a3 * (a5 - a4));
    sys.push_back((a4 - P(1)) * (a3 - a5) - P::constant(Y) * (a3 - P(1)) * (a4 - a5));
    const std::vector<P> sq{sys[0], sys[1], sys[2]};
    for (auto& [res, x] : cands) {
        HPoint<Cx> h{2, 5, x};
        auto nr = newton_polish(sq, x, 1e-14, 20);
        if (nr.converged && nr.residual < 1e-9) h.x = nr.x;
        double r4 = 0;
        for (const auto& p : sys) r4 = std::max(r4, detail::rel_residual(p, h.x));
        if (std::max(res, r4) >= 1e-7 || !detail::config_ok(h)) continue;
        out.residual = std::max(res, r4);
        out.point = h;
        return out;
    }
    return out;
}

// Per-pixel parametrization: u -> (wp, wp') -> (X, Y) -> configuration.
inline ParamResult param_point(Cx u, const CurveData& cd) {
    WpValue v = wp(u, cd.lattice);
    if (v.pole) return {};
    auto [X, Y] = cd.wp_to_chart(v.p, v.dp);
    return chart_point(X, Y);
}

// Plane image (X, Y) of a configuration.
inline std::array<Cx, 2> chart_of(const HPoint<Cx>& h) {
    return {cross_ratio_value(h.source(3), h.source(4), h.source(5), h.source(1)),
            cross_ratio_value(h.source(5), h.source(2), h.source(3), h.source(4))};
}

inline std::optional<Cx> u_of_chart(Cx X, Cx Y, const CurveData& cd) {
    auto w = cd.chart_to_wp(X, Y);
    return elliptic_log(w[0], w[1], cd.lattice);
}

}  // namespace perbar
