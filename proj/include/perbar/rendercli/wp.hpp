#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "../elliptic/periods.hpp"

namespace perbar {

struct WpValue {
    bool pole = false;
    Cx p, dp;  // wp(u), wp'(u)
};

namespace detail {

// Nearest-lattice-point reduction: u = a w1 + b w2 with a, b in [-1/2, 1/2].
inline Cx reduce_to_cell(Cx u, const Lattice& L) {
    double det = (std::conj(L.w1) * L.w2).imag();
    double a = (std::conj(u) * L.w2).imag() / det, b = (std::conj(L.w1) * u).imag() / det;
    return u - std::round(a) * L.w1 - std::round(b) * L.w2;
}

inline std::vector<Cx> laurent_coeffs(const Lattice& L, int terms) {
    // wp(u) = u^-2 + sum_{k>=2} c_k u^{2k-2}
    std::vector<Cx> c(terms + 1, Cx(0));
    c[2] = L.g2 / 20.0;
    if (terms >= 3) c[3] = L.g3 / 28.0;
    for (int k = 4; k <= terms; ++k) {
        Cx s(0);
        for (int m = 2; m <= k - 2; ++m) s += c[m] * c[k - m];
        c[k] = 3.0 * s / double((2 * k + 1) * (k - 3));
    }
    return c;
}

}  // namespace detail

// wp and wp' by the Laurent series at a small multiple of u followed by doubling on the curve.
inline WpValue wp(Cx u, const Lattice& L) {
    u = detail::reduce_to_cell(u, L);
    double wmin = std::min(std::abs(L.w1), std::abs(L.w2));
    if (std::abs(u) < 1e-12 * wmin) return {true, {}, {}};
    int halvings = 0;
    while (std::abs(u) > 0.3 * wmin) {
        u /= 2.0;
        ++halvings;
    }
    static thread_local std::vector<Cx> cache;
    static thread_local Cx cg2, cg3;
    if (cache.empty() || cg2 != L.g2 || cg3 != L.g3) {
        cache = detail::laurent_coeffs(L, 40);
        cg2 = L.g2;
        cg3 = L.g3;
    }
    Cx u2 = u * u, p = 1.0 / u2, dp = -2.0 / (u2 * u);
    Cx pw = 1.0;  // u^{2k-4}
    for (int k = 2; k < static_cast<int>(cache.size()); ++k) {
        p += cache[k] * pw * u2;
        dp += cache[k] * double(2 * k - 2) * pw * u;
        pw *= u2;
    }
    for (int i = 0; i < halvings; ++i) {
        if (std::abs(dp) == 0.0) return {true, {}, {}};
        Cx m = (12.0 * p * p - L.g2) / (2.0 * dp);
        Cx c = dp - m * p;
        Cx x3 = m * m / 4.0 - 2.0 * p;
        Cx y3 = -(m * x3 + c);
        p = x3;
        dp = y3;
        if (!std::isfinite(std::abs(p))) return {true, {}, {}};
    }
    return {false, p, dp};
}

// u with (wp(u), wp'(u)) = (x, y), by a coarse grid search in the period cell and Newton steps.
inline std::optional<Cx> elliptic_log(Cx x, Cx y, const Lattice& L, int grid = 48) {
    Cx best = 0;
    double bd = INFINITY;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            Cx u = (i + 0.5) / grid * L.w1 + (j + 0.5) / grid * L.w2;
            auto v = wp(u, L);
            if (v.pole) continue;
            double dist = std::abs(v.p - x) / (1 + std::abs(x)) + std::abs(v.dp - y) / (1 + std::abs(y));
            if (dist < bd) {
                bd = dist;
                best = u;
            }
        }
    Cx u = best;
    for (int it = 0; it < 50; ++it) {
        auto v = wp(u, L);
        if (v.pole || v.dp == Cx(0)) return std::nullopt;
        Cx step = (v.p - x) / v.dp;
        u -= step;
        if (std::abs(step) < 1e-14 * (1 + std::abs(u))) break;
    }
    auto v = wp(u, L);
    if (v.pole || std::abs(v.p - x) > 1e-7 * (1 + std::abs(x)) || std::abs(v.dp - y) > 1e-6 * (1 + std::abs(y)))
        return std::nullopt;
    return u;
}

}  // namespace perbar
