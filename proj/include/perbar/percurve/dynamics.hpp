#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "../moduli.hpp"

namespace perbar {

// z -> (a z + b) / (c z + d)
template <class K>
struct Moebius {
    K a{1}, b{0}, c{0}, d{1};

    K det() const { return a * d - b * c; }

    PointP1<K> operator()(const PointP1<K>& z) const {
        if (z.inf) {
            if (is_zero(c)) return PointP1<K>::infinity();
            return PointP1<K>::finite(a / c);
        }
        K den = c * z.value + d;
        if (is_zero(den)) return PointP1<K>::infinity();
        return PointP1<K>::finite((a * z.value + b) / den);
    }
    Moebius operator*(const Moebius& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Moebius adjugate() const { return {d, K(0) - b, K(0) - c, a}; }
};

namespace detail {

// Sends p1, p2, p3 to 0, 1, inf.
template <class K>
Moebius<K> to_standard(const PointP1<K>& p1, const PointP1<K>& p2, const PointP1<K>& p3) {
    if (p1 == p2 || p1 == p3 || p2 == p3) throw std::domain_error("moebius_from_triple: coincident points");
    if (p1.inf) return {K(0), p2.value - p3.value, K(1), K(0) - p3.value};
    if (p2.inf) return {K(1), K(0) - p1.value, K(1), K(0) - p3.value};
    if (p3.inf) return {K(1), K(0) - p1.value, K(0), p2.value - p1.value};
    K u = p2.value - p3.value, w = p2.value - p1.value;
    return {u, K(0) - p1.value * u, w, K(0) - p3.value * w};
}

}  // namespace detail

// The unique Moebius map with M(p_i) = q_i.
template <class K>
Moebius<K> moebius_from_triple(const std::array<PointP1<K>, 3>& p, const std::array<PointP1<K>, 3>& q) {
    auto A = detail::to_standard(p[0], p[1], p[2]);
    auto B = detail::to_standard(q[0], q[1], q[2]);
    return B.adjugate() * A;
}

// f = M o (z -> z^d), critical points 0 and inf, marked critical orbit 0 -> p_2 -> ... -> p_n -> 0.
struct DynMap {
    int d = 2;
    Moebius<Cx> m;
    std::vector<PointP1<Cx>> cycle;

    static PointP1<Cx> power(const PointP1<Cx>& z, int d) {
        if (z.inf) return z;
        return PointP1<Cx>::finite(std::pow(z.value, d));
    }

    // From the cycle points; cycle[0] must be 0.
    static DynMap from_cycle(int d, std::vector<PointP1<Cx>> cyc) {
        if (cyc.size() < 3 || cyc[0].inf || cyc[0].value != Cx(0)) throw std::invalid_argument("cycle must start at 0");
        DynMap f;
        f.d = d;
        f.m = moebius_from_triple<Cx>({power(cyc.back(), d), power(cyc[0], d), power(cyc[1], d)},
                                      {cyc[0], cyc[1], cyc[2]});
        f.cycle = std::move(cyc);
        return f;
    }
    static DynMap from_hpoint(const HPoint<Cx>& h) {
        std::vector<PointP1<Cx>> cyc;
        for (int i = 1; i <= h.n; ++i) cyc.push_back(PointP1<Cx>::finite(h.source(i)));
        return from_cycle(h.d, cyc);
    }

    PointP1<Cx> operator()(const PointP1<Cx>& z) const { return m(power(z, d)); }

    PointP1<Cx> iterate(PointP1<Cx> z, int k) const {
        for (int i = 0; i < k; ++i) z = (*this)(z);
        return z;
    }
    // Largest chordal error of f(p_i) = p_{i+1} around the cycle.
    double cycle_residual() const {
        double r = 0;
        for (size_t i = 0; i < cycle.size(); ++i) r = std::max(r, chordal((*this)(cycle[i]), cycle[(i + 1) % cycle.size()]));
        return r;
    }
    // Smallest k >= 1 with f^k(0) within tol of 0, or 0 when none up to kmax.
    int period_of_zero(int kmax, double tol = 1e-6) const {
        PointP1<Cx> z = PointP1<Cx>::finite(0.0), o = z;
        for (int k = 1; k <= kmax; ++k) {
            z = (*this)(z);
            if (chordal(z, o) < tol) return k;
        }
        return 0;
    }
    // Chordal distance from a point to the marked cycle.
    double distance_to_cycle(const PointP1<Cx>& z) const {
        double r = 1e300;
        for (const auto& p : cycle) r = std::min(r, chordal(z, p));
        return r;
    }
};

}  // namespace perbar
