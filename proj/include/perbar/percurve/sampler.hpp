#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "../exactnum/elimination.hpp"
#include "diagonal.hpp"
#include "newton.hpp"

namespace perbar {

struct SamplingError : std::runtime_error {
    int achieved;
    SamplingError(int got, int want)
        : std::runtime_error("sample_curve: only " + std::to_string(got) + " of " + std::to_string(want) + " samples"),
          achieved(got) {}
};

// Numeric sanity of a candidate point: HPoint walls, exact period n of the marked critical point.
inline bool is_valid_sample(const HPoint<Cx>& h, double tol = 1e-6) {
    try {
        h.validate([&](const Cx& z) { return std::abs(z) < tol; });
    } catch (const std::domain_error&) {
        return false;
    }
    DynMap f = DynMap::from_hpoint(h);
    return f.period_of_zero(h.n, 1e-6) == h.n && f.cycle_residual() < 1e-8;
}

namespace detail {

// All curve points with the given rational x_3.
inline std::vector<HPoint<Cx>> points_over_x3(const DiagonalSystem& sys, const Rational& x3) {
    const int d = sys.d, n = sys.n;
    std::vector<MPoly<Rational>> eq;
    for (const auto& e : sys.equations) eq.push_back(substitute_values(e, {{0, x3}}));
    std::vector<HPoint<Cx>> out;
    auto accept = [&](std::vector<Cx> rest) {
        std::vector<Cx> full{to_cx(x3)};
        full.insert(full.end(), rest.begin(), rest.end());
        HPoint<Cx> h{d, n, full};
        if (!is_valid_sample(h)) return;
        for (const auto& o : out) {
            double dist = 0;
            for (size_t i = 0; i < full.size(); ++i) dist = std::max(dist, std::abs(o.x[i] - full[i]));
            if (dist < 1e-6) return;
        }
        out.push_back(h);
    };
    if (n == 4) {
        QPoly f = to_univariate(eq[0], 1);
        if (f.degree() < 1) return out;
        for (const Cx& r : roots_complex(to_cx_coeffs(f), 1e-8)) {
            Cx z = r;
            auto fp = f.derivative();
            for (int it = 0; it < 30; ++it) {
                Cx num = f.eval_with(z, [](const Rational& q) { return to_cx(q); });
                Cx den = fp.eval_with(z, [](const Rational& q) { return to_cx(q); });
                if (den == Cx(0)) break;
                Cx s = num / den;
                z -= s;
                if (std::abs(s) < 1e-15 * (1 + std::abs(z))) break;
            }
            if (std::abs(f.eval_with(z, [](const Rational& q) { return to_cx(q); })) > 1e-10 * (1 + std::pow(std::abs(z), f.degree())))
                continue;
            accept({z});
        }
        return out;
    }
    // n = 5: eliminate x5 (variable 2), roots in x4 (variable 1)
    QPoly r4 = to_univariate(resultant_in(eq[0], eq[1], 2), 1);
    if (r4.degree() < 1) return out;
    r4 = squarefree(r4);
    for (const Cx& x4 : roots_complex(to_cx_coeffs(r4), 1e-7)) {
        std::vector<Cx> c5;
        auto u = eq[0].as_upoly(2);
        for (int k = 0; k <= u.degree(); ++k)
            c5.push_back(u.coeff(k).eval_with(std::vector<Cx>{Cx(0), x4}, [](const Rational& q) { return to_cx(q); }));
        while (!c5.empty() && std::abs(c5.back()) < 1e-14) c5.pop_back();
        if (c5.size() < 2) continue;
        for (const Cx& x5 : roots_complex(c5, 1e-6)) {
            // shift variables to 0,1 for the polish
            std::vector<MPoly<Rational>> sq;
            for (const auto& e : eq) {
                MPoly<Rational> s;
                for (const auto& [m, c] : e.terms()) s += MPoly<Rational>::term(c, {mono_exp(m, 1), mono_exp(m, 2)});
                sq.push_back(s);
            }
            auto nr = newton_polish(sq, {x4, x5});
            if (!nr.converged || nr.residual > 1e-10) continue;
            accept(nr.x);
        }
    }
    return out;
}

}  // namespace detail

// Numeric points of Per_{d,n} (n in {4,5}) above pseudo-random rational x_3 values.
inline std::vector<HPoint<Cx>> sample_curve(int d, int n, int count, unsigned seed, int budget = 400,
                                            unsigned threads = 0) {
    if (n == 5 && d != 2) throw std::invalid_argument("sample_curve: n = 5 is supported for d = 2");
    DiagonalSystem sys = diagonal_system(d, n);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-60, 60), den(1, 23);
    std::vector<Rational> xs;
    for (int tries = 0; static_cast<int>(xs.size()) < budget && tries < 50 * budget; ++tries) {
        Rational q = rat(num(rng), den(rng));
        if (is_zero(q) || q == 1 || q == -1) continue;
        if (std::find(xs.begin(), xs.end(), q) != xs.end()) continue;
        xs.push_back(q);
    }
    unsigned nt = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<HPoint<Cx>> out;
    const size_t batch = std::max<size_t>(nt, 4);
    for (size_t start = 0; start < xs.size() && static_cast<int>(out.size()) < count; start += batch) {
        size_t end = std::min(xs.size(), start + batch);
        std::vector<std::vector<HPoint<Cx>>> got(end - start);
        std::vector<std::thread> pool;
        for (size_t i = start; i < end; ++i)
            pool.emplace_back([&, i] { got[i - start] = detail::points_over_x3(sys, xs[i]); });
        for (auto& t : pool) t.join();
        for (auto& g : got)
            for (auto& h : g)
                if (static_cast<int>(out.size()) < count) out.push_back(h);
    }
    if (static_cast<int>(out.size()) < count) throw SamplingError(static_cast<int>(out.size()), count);
    return out;
}

}  // namespace perbar
