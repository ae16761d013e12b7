#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "../exactnum.hpp"
#include "../moduli.hpp"

namespace perbar {

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponents (i, j, k) of x^i y^j z^k, i + j + k = degree, x-major descending.
inline std::vector<std::array<int, 3>> plane_monomials(int degree) {
    std::vector<std::array<int, 3>> r;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) r.push_back({i, j, degree - i - j});
    return r;
}

struct PlaneCurve {
    int degree = 3;
    std::vector<Rational> coeffs;  // indexed like plane_monomials(degree)

    static PlaneCurve from_poly(const MPoly<Rational>& f, int degree) {
        PlaneCurve c;
        c.degree = degree;
        auto mons = plane_monomials(degree);
        c.coeffs.assign(mons.size(), Rational(0));
        for (const auto& [m, a] : f.terms()) {
            std::array<int, 3> e{mono_exp(m, 0), mono_exp(m, 1), mono_exp(m, 2)};
            if (e[0] + e[1] + e[2] != degree) throw std::invalid_argument("polynomial is not homogeneous of the given degree");
            for (size_t i = 0; i < mons.size(); ++i)
                if (mons[i] == e) c.coeffs[i] = a;
        }
        c.normalize();
        return c;
    }
    MPoly<Rational> poly() const {
        MPoly<Rational> f;
        auto mons = plane_monomials(degree);
        for (size_t i = 0; i < mons.size(); ++i)
            f += MPoly<Rational>::term(coeffs[i], {mons[i][0], mons[i][1], mons[i][2]});
        return f;
    }
    Rational coeff(int i, int j, int k) const {
        auto mons = plane_monomials(degree);
        for (size_t t = 0; t < mons.size(); ++t)
            if (mons[t] == std::array<int, 3>{i, j, k}) return coeffs[t];
        return Rational(0);
    }

    // Integer coefficients with gcd 1 and first nonzero coefficient positive.
    void normalize() {
        Integer l = 1, g = 0;
        for (const auto& c : coeffs) l = lcm(l, Integer(c.get_den()));
        for (auto& c : coeffs) {
            c *= l;
            g = gcd(g, Integer(c.get_num()));
        }
        if (g == 0) throw std::domain_error("zero curve");
        int sign = 0;
        for (const auto& c : coeffs)
            if (!is_zero(c)) {
                sign = sgn(c);
                break;
            }
        for (auto& c : coeffs) c /= sign * g;
    }

    template <class T>
    T eval(const T& x, const T& y, const T& z) const {
        auto mons = plane_monomials(degree);
        T s(0);
        for (size_t t = 0; t < mons.size(); ++t) {
            if (is_zero(coeffs[t])) continue;
            T m(1);
            for (int k = 0; k < mons[t][0]; ++k) m = m * x;
            for (int k = 0; k < mons[t][1]; ++k) m = m * y;
            for (int k = 0; k < mons[t][2]; ++k) m = m * z;
            if constexpr (std::is_same_v<T, Cx>) s = s + to_cx(coeffs[t]) * m;
            else s = s + T(coeffs[t]) * m;
        }
        return s;
    }

    // Pullback F(T(X)) for [x:y:z] = T [X:Y:Z].
    PlaneCurve pullback(const std::array<std::array<Rational, 3>, 3>& T) const {
        using P = MPoly<Rational>;
        std::vector<P> img;
        for (const auto& row : T) img.push_back(P::constant(row[0]) * P::var(0) + P::constant(row[1]) * P::var(1) +
                                                P::constant(row[2]) * P::var(2));
        P g = poly().eval_with(img, [](const Rational& a) { return P::constant(a); });
        return from_poly(g, degree);
    }

    std::string str() const { return poly().str({"x", "y", "z"}); }

    friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) {
        return a.degree == b.degree && a.coeffs == b.coeffs;
    }
};

// The plane model chart: X = CR(3,4,5,1), Y = CR(5,2,3,4) on the source marks.
inline std::array<Cx, 3> plane_point(const HPoint<Cx>& h) {
    auto cr = [&](int a, int b, int c, int d) {
        return cross_ratio(PointP1<Cx>::finite(h.source(a)), PointP1<Cx>::finite(h.source(b)),
                           PointP1<Cx>::finite(h.source(c)), PointP1<Cx>::finite(h.source(d)));
    };
    auto X = cr(3, 4, 5, 1), Y = cr(5, 2, 3, 4);
    if (X.inf || Y.inf) throw std::domain_error("plane point at infinity of the chart");
    return {X.value, Y.value, Cx(1)};
}

// Least-squares null vector of the monomial matrix, rounded to small rationals and verified.
inline PlaneCurve fit_plane_curve(const std::vector<std::array<Cx, 3>>& samples, int degree, int margin = 5,
                                  long max_den = 50) {
    auto mons = plane_monomials(degree);
    const int M = static_cast<int>(mons.size());
    if (static_cast<int>(samples.size()) < M + margin)
        throw FitError("fit_plane_curve: " + std::to_string(samples.size()) + " samples do not determine a degree " +
                       std::to_string(degree) + " curve (need " + std::to_string(M + margin) + ")");
    Eigen::MatrixXcd A(samples.size(), M);
    for (size_t r = 0; r < samples.size(); ++r) {
        auto p = samples[r];
        double s = std::sqrt(std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2]));
        for (auto& c : p) c /= s;
        for (int t = 0; t < M; ++t) {
            Cx m(1);
            for (int k = 0; k < mons[t][0]; ++k) m *= p[0];
            for (int k = 0; k < mons[t][1]; ++k) m *= p[1];
            for (int k = 0; k < mons[t][2]; ++k) m *= p[2];
            A(r, t) = m;
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    auto sv = svd.singularValues();
    int null_dim = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) < 1e-8 * sv(0)) ++null_dim;
    null_dim += std::max(0, M - static_cast<int>(sv.size()));
    if (null_dim != 1) throw FitError("fit_plane_curve: null space has dimension " + std::to_string(null_dim));
    Eigen::VectorXcd v = svd.matrixV().col(M - 1);
    int big = 0;
    for (int i = 1; i < M; ++i)
        if (std::abs(v(i)) > std::abs(v(big))) big = i;
    v /= v(big);
    PlaneCurve c;
    c.degree = degree;
    for (int i = 0; i < M; ++i) {
        if (std::abs(v(i).imag()) > 1e-6) throw FitError("fit_plane_curve: null vector is not real");
        auto q = rationalize(v(i).real(), 1e-6, max_den);
        if (!q) throw FitError("fit_plane_curve: coefficient does not round to a small rational");
        c.coeffs.push_back(*q);
    }
    c.normalize();
    double worst = 0;
    for (const auto& p : samples) {
        double s = std::sqrt(std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2]));
        worst = std::max(worst, std::abs(c.eval(p[0] / s, p[1] / s, p[2] / s)));
    }
    if (worst > 1e-6) throw FitError("fit_plane_curve: rounded curve misses the samples");
    return c;
}

}  // namespace perbar
