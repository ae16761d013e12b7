#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "roots.hpp"
#include "upoly.hpp"

namespace perbar {

// Best rational approximation by continued fractions, accepted when within tol.
inline std::optional<Rational> rationalize(double x, double tol = 1e-9, long max_den = 100000000L) {
    if (!std::isfinite(x)) return std::nullopt;
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        Integer ai(a);
        Integer h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        Rational q = rat(h1, k1);
        if (std::abs(q.get_d() - x) <= tol * (1.0 + std::abs(x))) return q;
        double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    return std::nullopt;
}

struct QFactorization {
    std::vector<QPoly> linear;     // monic x - r
    std::vector<QPoly> quadratic;  // monic, irreducible over Q
    QPoly unresolved{1};           // remaining cofactor (degree 0 when fully resolved)
};

// Splits a polynomial over Q into distinct linear and quadratic irreducible factors.
// Candidates come from numeric roots and are accepted only after exact division.
inline QFactorization factor_low_degree(const QPoly& f) {
    QFactorization out;
    QPoly p = squarefree(f);
    if (p.degree() <= 0) return out;
    std::vector<Cx> r = roots_complex(p, 1e-8);
    std::vector<bool> used(r.size(), false);
    for (size_t i = 0; i < r.size(); ++i) {
        if (std::abs(r[i].imag()) > 1e-7 * (1 + std::abs(r[i]))) continue;
        auto q = rationalize(r[i].real());
        if (!q) continue;
        if (!is_zero(p.eval(*q))) continue;
        QPoly lin(std::vector<Rational>{-*q, 1});
        p = divmod(p, lin).first;
        out.linear.push_back(lin);
        used[i] = true;
    }
    for (size_t i = 0; i < r.size(); ++i) {
        if (used[i]) continue;
        for (size_t j = i + 1; j < r.size(); ++j) {
            if (used[j]) continue;
            Cx s = r[i] + r[j], pr = r[i] * r[j];
            if (std::abs(s.imag()) > 1e-7 * (1 + std::abs(s)) || std::abs(pr.imag()) > 1e-7 * (1 + std::abs(pr)))
                continue;
            auto qs = rationalize(s.real()), qp = rationalize(pr.real());
            if (!qs || !qp) continue;
            QPoly quad(std::vector<Rational>{*qp, -*qs, 1});
            auto [qq, rem] = divmod(p, quad);
            if (!rem.zero()) continue;
            p = qq;
            out.quadratic.push_back(quad);
            used[i] = used[j] = true;
            break;
        }
    }
    out.unresolved = monic(p);
    return out;
}

}  // namespace perbar
