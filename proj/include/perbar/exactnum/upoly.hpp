#pragma once

#include <algorithm>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace perbar {

using Cx = std::complex<double>;

// Declared ahead of the templates below: std::complex is not found by ADL in this namespace.
inline bool is_zero(const Cx& z) { return z == Cx(0.0, 0.0); }
inline Cx to_cx(const Cx& z) { return z; }

// Dense univariate polynomial, c[i] is the coefficient of x^i.
// K needs ring operations, construction from long and a free is_zero(K).
template <class K>
class UPoly {
public:
    using coeff_type = K;

    UPoly() = default;
    UPoly(long a) {
        if (a != 0) c_.push_back(K(a));
    }
    explicit UPoly(std::vector<K> cs) : c_(std::move(cs)) { trim(); }

    static UPoly constant(const K& a) { return UPoly(std::vector<K>{a}); }
    static UPoly monomial(const K& a, int k) {
        std::vector<K> cs(k + 1, K(0));
        cs[k] = a;
        return UPoly(std::move(cs));
    }
    static UPoly x() { return monomial(K(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K(0); }
    const K& lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(const UPoly& a) { return UPoly() - a; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.zero() || b.zero()) return UPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    UPoly scaled(const K& a) const {
        std::vector<K> r(c_);
        for (auto& x : r) x = x * a;
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> r(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
        return UPoly(std::move(r));
    }

    UPoly pow(int e) const {
        UPoly r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Horner evaluation in any ring T that accepts K via conv.
    template <class T, class Conv>
    T eval_with(const T& x, Conv conv) const {
        if (c_.empty()) return conv(K(0));
        T r = conv(c_.back());
        for (int i = degree() - 1; i >= 0; --i) r = r * x + conv(c_[i]);
        return r;
    }
    K eval(const K& x) const {
        return eval_with(x, [](const K& a) { return a; });
    }

    template <class F>
    auto map(F f) const {
        using R = decltype(f(std::declval<K>()));
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(f(x));
        return UPoly<R>(std::move(r));
    }

    std::string str(const std::string& var = "x") const;

private:
    std::vector<K> c_;
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
};

template <class K>
bool is_zero(const UPoly<K>& p) {
    return p.zero();
}

template <class K>
std::string coeff_str(const K& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}
inline std::string coeff_str(const Rational& a) { return a.get_str(); }

template <class K>
std::string UPoly<K>::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (is_zero(c_[i])) continue;
        std::string cs = coeff_str(c_[i]);
        bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        if (neg) cs = cs.substr(1);
        bool compound = cs.find_first_of("+-", 1) != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (i == 0) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

// Division with remainder over a field.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    std::vector<K> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly<K>(), a};
    std::vector<K> q(a.degree() - db + 1, K(0));
    K inv = K(1) / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(r[i])) continue;
        K f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    r.resize(db);
    return {UPoly<K>(std::move(q)), UPoly<K>(std::move(r))};
}

// Exact quotient in an integral domain; throws if b does not divide a.
template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    if (a.zero()) return UPoly<K>();
    std::vector<K> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) throw std::domain_error("inexact polynomial division");
    std::vector<K> q(a.degree() - db + 1, K(0));
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(r[i])) continue;
        K f = exact_div(r[i], b.lead());
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    for (int i = 0; i < db; ++i)
        if (!is_zero(r[i])) throw std::domain_error("inexact polynomial division");
    return UPoly<K>(std::move(q));
}

template <class K>
UPoly<K> monic(const UPoly<K>& p) {
    if (p.zero()) return p;
    return p.scaled(K(1) / p.lead());
}

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class K>
UPoly<K> squarefree(const UPoly<K>& p) {
    if (p.degree() <= 0) return monic(p);
    return monic(divmod(p, gcd(p, p.derivative())).first);
}

// Determinant by fraction-free Bareiss elimination; every division is exact.
template <class R>
R bareiss_det(std::vector<std::vector<R>> m) {
    const size_t n = m.size();
    if (n == 0) return R(1);
    R prev(1);
    bool neg = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            size_t p = k + 1;
            while (p < n && is_zero(m[p][k])) ++p;
            if (p == n) return R(0);
            std::swap(m[k], m[p]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = R(0);
        }
        prev = m[k][k];
    }
    R d = m[n - 1][n - 1];
    if (neg) d = R(0) - d;
    return d;
}

template <class K>
std::vector<std::vector<K>> sylvester_matrix(const UPoly<K>& f, const UPoly<K>& g) {
    const int m = f.degree(), n = g.degree();
    const int N = m + n;
    std::vector<std::vector<K>> s(N, std::vector<K>(N, K(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
    return s;
}

// res(f, g) as the Sylvester determinant. Works over any integral domain K.
template <class K>
K resultant(const UPoly<K>& f, const UPoly<K>& g) {
    if (f.zero() && g.zero()) throw std::domain_error("resultant of two zero polynomials");
    if (f.zero() || g.zero()) return K(0);
    if (f.degree() == 0 && g.degree() == 0) return K(1);
    if (f.degree() == 0) {
        K r(1);
        for (int i = 0; i < g.degree(); ++i) r = r * f.lead();
        return r;
    }
    if (g.degree() == 0) {
        K r(1);
        for (int i = 0; i < f.degree(); ++i) r = r * g.lead();
        return r;
    }
    return bareiss_det(sylvester_matrix(f, g));
}

template <class K>
K discriminant(const UPoly<K>& f) {
    const int n = f.degree();
    if (n < 1) throw std::domain_error("discriminant of a constant");
    K r = exact_div(resultant(f, f.derivative()), f.lead());
    if ((n * (n - 1) / 2) % 2) r = K(0) - r;
    return r;
}

using QPoly = UPoly<Rational>;

inline QPoly qpoly(std::initializer_list<long> low_to_high) {
    std::vector<Rational> cs;
    for (long v : low_to_high) cs.emplace_back(v);
    return QPoly(std::move(cs));
}

}  // namespace perbar
