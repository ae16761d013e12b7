#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dynamics.hpp"

namespace perbar {

// Variables are x_3..x_n at indices 0..n-3.
struct DiagonalSystem {
    int d = 2, n = 5;
    std::vector<MPoly<Rational>> equations;

    std::vector<std::string> names() const {
        std::vector<std::string> r;
        for (int i = 3; i <= n; ++i) r.push_back("x" + std::to_string(i));
        return r;
    }
    template <class T>
    std::vector<T> eval(const std::vector<T>& x) const {
        std::vector<T> r;
        for (const auto& e : equations) r.push_back(e.eval_with(x, [](const Rational& q) { return T(to_cx(q)); }));
        return r;
    }
};

// M is fixed by M(x_n^d) = 0, M(0) = 1, M(1) = x_3:
//   M(z) = x_3 (z - P) / ((1 - P + x_3 P) z - x_3 P), P = x_n^d.
// The equations M(x_i^d) = x_{i+1} for i = 3..n-1, cleared and stripped of monomial factors.
inline DiagonalSystem diagonal_system(int d, int n) {
    if (n != 4 && n != 5) throw std::invalid_argument("diagonal_system supports n in {4,5}");
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    using P = MPoly<Rational>;
    DiagonalSystem s;
    s.d = d;
    s.n = n;
    auto x = [](int i) { return P::var(i - 3); };
    P pw = x(n).pow(d), x3 = x(3);
    for (int i = 3; i < n; ++i) {
        P w = x(i).pow(d), v = x(i + 1);
        P e = x3 * (w - pw) - v * ((P(1) - pw + x3 * pw) * w - x3 * pw);
        Mono g = e.monomial_content();
        s.equations.push_back(g.empty() ? e : e.divide_monomial(g));
    }
    return s;
}

// The same conditions through the cross-ratio chart: pi_2 = pi_1.
template <class K>
std::vector<K> cross_ratio_residuals(const HPoint<K>& h) {
    auto pc = pi_maps(h);
    std::vector<K> r;
    for (size_t i = 0; i < pc.source.size(); ++i) r.push_back(pc.source[i] - pc.target[i]);
    return r;
}

}  // namespace perbar
