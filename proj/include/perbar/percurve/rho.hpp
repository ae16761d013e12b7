#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "../exactnum/elimination.hpp"
#include "diagonal.hpp"
#include "newton.hpp"
#include "sampler.hpp"

namespace perbar {

namespace detail {

// Points of Per_{2,5} where CR(b_1,b_2,b_3,b_m) = c, m = 4 or 5 (b_4 = x_3^2, b_5 = x_4^2).
inline std::vector<HPoint<Cx>> rho_fiber(const Rational& c, int m) {
    using P = MPoly<Rational>;
    DiagonalSystem sys = diagonal_system(2, 5);
    const int h = m == 4 ? 0 : 1;  // variable of b_m in C
    const int f = 2;                // x_5 (b_1 = x_5^2)
    const int e = 1 - h;            // variable eliminated first
    P w = P::var(h).pow(2), b1 = P::var(f).pow(2);
    P C = w * (P(1) - b1) - P::constant(c) * (w - b1);
    P G = resultant_in(sys.equations[0], sys.equations[1], e);
    QPoly R = to_univariate(resultant_in(G, C, f), h);
    std::vector<HPoint<Cx>> out;
    if (R.degree() < 1) return out;
    R = squarefree(R);
    auto conv = [](const Rational& q) { return to_cx(q); };
    std::vector<P> full{sys.equations[0], sys.equations[1], C};
    for (const Cx& xh : roots_complex(to_cx_coeffs(R), 1e-8)) {
        auto cu = C.as_upoly(f);
        std::vector<Cx> cf;
        std::vector<Cx> at(3, Cx(0));
        at[h] = xh;
        for (int k = 0; k <= cu.degree(); ++k) cf.push_back(cu.coeff(k).eval_with(at, conv));
        while (!cf.empty() && std::abs(cf.back()) < 1e-13) cf.pop_back();
        if (cf.size() < 2) continue;
        for (const Cx& xf : roots_complex(cf, 1e-8)) {
            at[f] = xf;
            auto eu = sys.equations[0].as_upoly(e);
            std::vector<Cx> ce;
            for (int k = 0; k <= eu.degree(); ++k) ce.push_back(eu.coeff(k).eval_with(at, conv));
            while (!ce.empty() && std::abs(ce.back()) < 1e-13) ce.pop_back();
            if (ce.size() < 2) continue;
            for (const Cx& xe : roots_complex(ce, 1e-8)) {
                std::vector<Cx> x0(3);
                x0[h] = xh;
                x0[f] = xf;
                x0[e] = xe;
                auto nr = newton_polish(full, x0);
                if (nr.residual > 1e-10) continue;
                HPoint<Cx> p{2, 5, nr.x};
                if (!is_valid_sample(p)) continue;
                bool dup = false;
                for (const auto& o : out) {
                    double dm = 0;
                    for (int i = 0; i < 3; ++i) dm = std::max(dm, std::abs(o.x[i] - p.x[i]));
                    if (dm < 1e-6) dup = true;
                }
                if (!dup) out.push_back(p);
            }
        }
    }
    return out;
}

}  // namespace detail

// Degree of CR(1,2,3,m) o pi_1 on Per_{2,5} as the size of generic fibres over three random values.
inline int rho_degree(int m = 4, unsigned seed = 5) {
    if (m != 4 && m != 5) throw std::invalid_argument("rho_degree: m is 4 or 5");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-30, 30), den(2, 13);
    int deg = -1;
    for (int trial = 0; trial < 3;) {
        Rational c = rat(num(rng), den(rng));
        if (is_zero(c) || c == 1) continue;
        int k = static_cast<int>(detail::rho_fiber(c, m).size());
        if (deg >= 0 && k != deg) throw std::runtime_error("rho_degree: fibre size is not stable");
        deg = k;
        ++trial;
    }
    return deg;
}

}  // namespace perbar
