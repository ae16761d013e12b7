#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "weierstrass.hpp"

namespace perbar {

// Projective point on a long Weierstrass curve; identity O = [0:1:0].
template <class K>
struct ECPoint {
    K x{0}, y{1}, z{0};

    static ECPoint identity() { return {K(0), K(1), K(0)}; }
    static ECPoint affine(const K& x, const K& y) { return {x, y, K(1)}; }
    static ECPoint from_triple(const std::array<K, 3>& p) {
        if (is_zero(p[2])) {
            if (!is_zero(p[0])) throw std::domain_error("point at infinity other than [0:1:0]");
            return identity();
        }
        return {p[0] / p[2], p[1] / p[2], K(1)};
    }
    bool is_identity() const { return is_zero(z); }

    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        if (a.is_identity() || b.is_identity()) return a.is_identity() == b.is_identity();
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }
};

template <class K>
bool on_curve(const WeierstrassCurve& w, const ECPoint<K>& p) {
    if (p.is_identity()) return true;
    return is_zero(w.lhs_minus_rhs(p.x, p.y));
}

template <class K>
void require_on_curve(const WeierstrassCurve& w, const ECPoint<K>& p) {
    if (!on_curve(w, p)) throw std::domain_error("point is not on the curve");
}

template <class K>
ECPoint<K> ec_neg(const WeierstrassCurve& w, const ECPoint<K>& p) {
    require_on_curve(w, p);
    if (p.is_identity()) return p;
    return ECPoint<K>::affine(p.x, K(0) - p.y - K(w.a1) * p.x - K(w.a3));
}

// Chord-tangent law.
template <class K>
ECPoint<K> ec_add(const WeierstrassCurve& w, const ECPoint<K>& p, const ECPoint<K>& q) {
    require_on_curve(w, p);
    require_on_curve(w, q);
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    const K a1(w.a1), a2(w.a2), a3(w.a3), a4(w.a4), a6(w.a6);
    K lam, nu;
    if (p.x == q.x) {
        if (is_zero(p.y + q.y + a1 * q.x + a3)) return ECPoint<K>::identity();
        K den = K(2) * p.y + a1 * p.x + a3;
        lam = (K(3) * p.x * p.x + K(2) * a2 * p.x + a4 - a1 * p.y) / den;
        nu = (K(0) - p.x * p.x * p.x + a4 * p.x + K(2) * a6 - a3 * p.y) / den;
    } else {
        K dx = q.x - p.x;
        lam = (q.y - p.y) / dx;
        nu = (p.y * q.x - q.y * p.x) / dx;
    }
    K x3 = lam * lam + a1 * lam - a2 - p.x - q.x;
    K y3 = K(0) - (lam + a1) * x3 - nu - a3;
    return ECPoint<K>::affine(x3, y3);
}

template <class K>
ECPoint<K> ec_mul(const WeierstrassCurve& w, long k, ECPoint<K> p) {
    if (k < 0) {
        p = ec_neg(w, p);
        k = -k;
    }
    ECPoint<K> r = ECPoint<K>::identity();
    while (k > 0) {
        if (k & 1) r = ec_add(w, r, p);
        k >>= 1;
        if (k) p = ec_add(w, p, p);
    }
    return r;
}

// Smallest k <= bound with kP = O; empty means the order exceeds the bound.
template <class K>
std::optional<int> point_order(const WeierstrassCurve& w, const ECPoint<K>& p, int bound = 18) {
    require_on_curve(w, p);
    ECPoint<K> q = p;
    for (int k = 1; k <= bound; ++k) {
        if (q.is_identity()) return k;
        q = ec_add(w, q, p);
    }
    return std::nullopt;
}

inline bool is_rational_value(const Rational&) { return true; }
inline bool is_rational_value(const NFElem& a) { return a.is_rational(); }

// Whether P + Q has rational coordinates.
template <class K>
bool quotient_relation(const WeierstrassCurve& w, const ECPoint<K>& p, const ECPoint<K>& q) {
    auto s = ec_add(w, p, q);
    if (s.is_identity()) return true;
    return is_rational_value(s.x) && is_rational_value(s.y);
}

}  // namespace perbar
