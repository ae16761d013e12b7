#pragma once

#include <array>
#include <stdexcept>

#include "plane_curve.hpp"

namespace perbar {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassCurve {
    Rational a1{0}, a2{0}, a3{0}, a4{0}, a6{0};

    template <class K>
    K lhs_minus_rhs(const K& x, const K& y) const {
        return y * y + K(a1) * x * y + K(a3) * y - (x * x * x + K(a2) * x * x + K(a4) * x + K(a6));
    }
};

struct Invariants {
    Rational b2, b4, b6, b8, c4, c6, disc, j;
};

struct SingularCurveError : std::domain_error {
    SingularCurveError() : std::domain_error("singular curve: discriminant is zero") {}
};

inline Invariants invariants(const WeierstrassCurve& w) {
    Invariants r;
    const auto &a1 = w.a1, &a2 = w.a2, &a3 = w.a3, &a4 = w.a4, &a6 = w.a6;
    r.b2 = a1 * a1 + 4 * a2;
    r.b4 = 2 * a4 + a1 * a3;
    r.b6 = a3 * a3 + 4 * a6;
    r.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    r.c4 = r.b2 * r.b2 - 24 * r.b4;
    r.c6 = -r.b2 * r.b2 * r.b2 + 36 * r.b2 * r.b4 - 216 * r.b6;
    r.disc = -r.b2 * r.b2 * r.b8 - 8 * r.b4 * r.b4 * r.b4 - 27 * r.b6 * r.b6 + 9 * r.b2 * r.b4 * r.b6;
    if (is_zero(r.disc)) throw SingularCurveError();
    r.j = r.c4 * r.c4 * r.c4 / r.disc;
    return r;
}

// A plane cubic A y^2 z + B xyz + C yz^2 = P x^3 + Q x^2 z + R x z^2 + S z^3 (no y^3, xy^2, x^2y terms)
// brought to long form by x -> X/alpha, y -> Y/alpha, alpha = P/A. Plane points map by [x:y:z] -> [alpha x : alpha y : z].
struct WeierstrassModel {
    WeierstrassCurve curve;
    Rational alpha;

    template <class K>
    std::array<K, 3> map_point(const std::array<K, 3>& p) const {
        return {K(alpha) * p[0], K(alpha) * p[1], p[2]};
    }
};

inline WeierstrassModel weierstrass_model(const PlaneCurve& c) {
    if (c.degree != 3) throw std::invalid_argument("weierstrass_model needs a cubic");
    if (!is_zero(c.coeff(0, 3, 0)) || !is_zero(c.coeff(1, 2, 0)) || !is_zero(c.coeff(2, 1, 0)))
        throw std::domain_error("cubic is not in Weierstrass shape");
    Rational A = c.coeff(0, 2, 1);
    if (is_zero(A) || is_zero(c.coeff(3, 0, 0))) throw std::domain_error("cubic is not in Weierstrass shape");
    Rational b = c.coeff(1, 1, 1) / A, cc = c.coeff(0, 1, 2) / A;
    Rational alpha = -c.coeff(3, 0, 0) / A, q = -c.coeff(2, 0, 1) / A, r = -c.coeff(1, 0, 2) / A, s = -c.coeff(0, 0, 3) / A;
    WeierstrassModel m;
    m.alpha = alpha;
    m.curve.a1 = b;
    m.curve.a3 = cc * alpha;
    m.curve.a2 = q;
    m.curve.a4 = r * alpha;
    m.curve.a6 = s * alpha * alpha;
    return m;
}

}  // namespace perbar
