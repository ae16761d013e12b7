#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "number_field.hpp"
#include "upoly.hpp"

namespace perbar {

struct RootFindingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Cx horner(const std::vector<Cx>& c, Cx z) {
    Cx r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}
inline double horner_scale(const std::vector<Cx>& c, double az) {
    double r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * az + std::abs(*it);
    return r;
}

}  // namespace detail

// Deterministic order: by real part, then imaginary part (ties in real part up to 1e-12).
inline bool root_order(const Cx& a, const Cx& b) {
    double tol = 1e-12 * (1.0 + std::max(std::abs(a.real()), std::abs(b.real())));
    if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
    return a.imag() < b.imag();
}

// All complex roots (with multiplicity) by Aberth-Ehrlich iteration.
// coeffs are low to high. Every returned root satisfies |p(z)| <= tol * sum |c_i| |z|^i.
inline std::vector<Cx> roots_complex(std::vector<Cx> c, double tol = 1e-10, int max_iter = 500) {
    for (const auto& x : c)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw std::domain_error("non-finite coefficient");
    while (!c.empty() && c.back() == Cx(0)) c.pop_back();
    if (c.size() < 2) throw std::domain_error("roots_complex needs degree >= 1");
    const int n = static_cast<int>(c.size()) - 1;
    // exact zero roots
    int zeros = 0;
    while (c[zeros] == Cx(0)) ++zeros;
    std::vector<Cx> p(c.begin() + zeros, c.end());
    const int m = static_cast<int>(p.size()) - 1;
    std::vector<Cx> z;
    if (m > 0) {
        Cx lead = p.back();
        for (auto& x : p) x /= lead;
        std::vector<Cx> dp(m);
        for (int i = 1; i <= m; ++i) dp[i - 1] = p[i] * static_cast<double>(i);
        // initial circle: geometric mean of root moduli from |c0|^(1/m), widened by the coefficient bound
        double bound = 0;
        for (int i = 0; i < m; ++i) bound = std::max(bound, std::pow(std::abs(p[i]), 1.0 / (m - i)));
        double r = std::max(std::pow(std::abs(p[0]), 1.0 / m), 1e-3 * bound);
        r = std::min(r, 2.0 * bound);
        z.resize(m);
        for (int k = 0; k < m; ++k) z[k] = std::polar(r, 2 * std::numbers::pi * k / m + 0.4);
        std::vector<bool> done(m, false);
        const double eps = std::numeric_limits<double>::epsilon();
        int it = 0;
        for (; it < max_iter; ++it) {
            bool all = true;
            for (int k = 0; k < m; ++k) {
                if (done[k]) continue;
                Cx pv = detail::horner(p, z[k]);
                double sc = detail::horner_scale(p, std::abs(z[k]));
                if (std::abs(pv) <= 16 * eps * sc) {
                    done[k] = true;
                    continue;
                }
                all = false;
                Cx ratio = pv / detail::horner(dp, z[k]);
                Cx s = 0;
                for (int j = 0; j < m; ++j)
                    if (j != k) s += 1.0 / (z[k] - z[j]);
                Cx w = ratio / (1.0 - ratio * s);
                if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
                z[k] -= w;
                if (std::abs(w) <= 4 * eps * std::abs(z[k])) done[k] = true;
            }
            if (all) break;
        }
        for (int k = 0; k < m; ++k) {
            Cx pv = detail::horner(p, z[k]);
            double sc = detail::horner_scale(p, std::abs(z[k]));
            if (!(std::abs(pv) <= tol * sc))
                throw RootFindingError("roots_complex: no convergence within " + std::to_string(max_iter) +
                                       " iterations (degree " + std::to_string(n) + ")");
        }
    }
    for (int i = 0; i < zeros; ++i) z.push_back(Cx(0));
    std::sort(z.begin(), z.end(), root_order);
    return z;
}

template <class K>
std::vector<Cx> roots_complex(const UPoly<K>& f, double tol = 1e-10, int max_iter = 500) {
    std::vector<Cx> c;
    for (const auto& a : f.coeffs()) c.push_back(to_cx(a));
    return roots_complex(std::move(c), tol, max_iter);
}

}  // namespace perbar
