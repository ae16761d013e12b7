#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "weierstrass.hpp"

namespace perbar {

// Lattice Z w1 + Z w2 (Im(w2/w1) > 0) and the short form y^2 = 4x^3 - g2 x - g3.
struct Lattice {
    Cx w1, w2;
    Cx g2, g3;
    Cx tau() const { return w2 / w1; }
};

struct AgmError : std::runtime_error {
    AgmError() : std::runtime_error("AGM did not converge") {}
};

inline Cx agm(Cx a, Cx b, int max_iter = 100) {
    for (int i = 0; i < max_iter; ++i) {
        if (std::abs(a - b) <= 1e-15 * std::abs(a)) return a;
        Cx an = (a + b) / 2.0, bn = std::sqrt(a * b);
        if (std::abs(an - bn) > std::abs(an + bn)) bn = -bn;
        a = an;
        b = bn;
    }
    throw AgmError();
}

// g2, g3 of the lattice through the Eisenstein q-series.
inline std::pair<Cx, Cx> eisenstein_g2g3(Cx w1, Cx w2) {
    Cx tau = w2 / w1;
    if (tau.imag() <= 0) throw std::domain_error("lattice basis must have Im(w2/w1) > 0");
    const double pi = std::numbers::pi;
    Cx q = std::exp(Cx(0, 2 * pi) * tau);
    Cx e4(1), e6(1), qn(1);
    for (int n = 1; n < 200; ++n) {
        qn *= q;
        if (std::abs(qn) < 1e-18) break;
        double s3 = 0, s5 = 0;
        for (int k = 1; k <= n; ++k)
            if (n % k == 0) {
                s3 += std::pow(k, 3);
                s5 += std::pow(k, 5);
            }
        e4 += 240.0 * s3 * qn;
        e6 -= 504.0 * s5 * qn;
    }
    Cx s = 2 * pi / w1;
    return {std::pow(s, 4) * e4 / 12.0, std::pow(s, 6) * e6 / 216.0};
}

// Periods of the curve by the AGM, with g2 = c4/12 and g3 = c6/216. Candidate bases from the root
// orderings (and index-2 overlattices) are accepted when their Eisenstein g2, g3 match.
inline Lattice periods(const WeierstrassCurve& w) {
    Invariants inv = invariants(w);
    Lattice L;
    L.g2 = Cx(to_double(inv.c4) / 12.0);
    L.g3 = Cx(to_double(inv.c6) / 216.0);
    auto e = roots_complex(std::vector<Cx>{-L.g3, -L.g2, 0.0, 4.0}, 1e-14);
    if (inv.disc > 0) {
        std::sort(e.begin(), e.end(), [](const Cx& a, const Cx& b) { return a.real() > b.real(); });
        for (auto& z : e) z = Cx(z.real(), 0.0);
    }
    const double pi = std::numbers::pi;
    const double scale = std::abs(L.g2) + std::abs(L.g3) + 1.0;
    std::array<int, 3> perm{0, 1, 2};
    do {
        Cx e1 = e[perm[0]], e2 = e[perm[1]], e3 = e[perm[2]];
        Cx a = std::sqrt(e1 - e3), b = std::sqrt(e1 - e2), c = std::sqrt(e2 - e3);
        Cx w1, w2;
        try {
            w1 = pi / agm(a, b);
            w2 = Cx(0, 1) * pi / agm(a, c);
        } catch (const AgmError&) {
            continue;
        }
        const std::array<std::pair<Cx, Cx>, 3> bases{{{w1, w2}, {w1, (w1 + w2) / 2.0}, {(w1 + w2) / 2.0, w2}}};
        for (auto [u, v] : bases) {
            if ((v / u).imag() < 0) v = -v;
            if (std::abs((v / u).imag()) < 1e-9) continue;
            auto [h2, h3] = eisenstein_g2g3(u, v);
            if (std::abs(h2 - L.g2) + std::abs(h3 - L.g3) < 1e-8 * scale) {
                L.w1 = u;
                L.w2 = v;
                return L;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw AgmError();
}

}  // namespace perbar
