#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "upoly.hpp"

namespace perbar {

// Exponent vector with trailing zeros trimmed, so equal monomials compare equal.
using Mono = std::vector<int>;

inline Mono mono_trim(Mono m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}
inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}
inline int mono_exp(const Mono& m, int v) { return v < static_cast<int>(m.size()) ? m[v] : 0; }

// Sparse multivariate polynomial over K in variables 0, 1, 2, ...
template <class K>
class MPoly {
public:
    using coeff_type = K;
    using Terms = std::map<Mono, K>;

    MPoly() = default;
    MPoly(long a) {
        if (a != 0) t_[Mono{}] = K(a);
    }
    static MPoly constant(const K& a) {
        MPoly p;
        if (!is_zero(a)) p.t_[Mono{}] = a;
        return p;
    }
    static MPoly var(int v, int e = 1) {
        MPoly p;
        Mono m(v + 1, 0);
        m[v] = e;
        p.t_[mono_trim(m)] = K(1);
        return p;
    }
    static MPoly term(const K& a, Mono m) {
        MPoly p;
        if (!is_zero(a)) p.t_[mono_trim(std::move(m))] = a;
        return p;
    }

    const Terms& terms() const { return t_; }
    bool zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    K constant_term() const {
        auto it = t_.find(Mono{});
        return it == t_.end() ? K(0) : it->second;
    }
    int num_vars() const {
        int n = 0;
        for (const auto& [m, c] : t_) n = std::max(n, static_cast<int>(m.size()));
        return n;
    }
    int degree_in(int v) const {
        int d = t_.empty() ? -1 : 0;
        for (const auto& [m, c] : t_) d = std::max(d, mono_exp(m, v));
        return d;
    }
    int total_degree() const {
        int d = t_.empty() ? -1 : 0;
        for (const auto& [m, c] : t_) {
            int s = 0;
            for (int e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }
    // Coefficient of the largest monomial in the map order.
    const K& lead() const {
        if (t_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return t_.rbegin()->second;
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, K(0) - c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(const MPoly& a) { return MPoly() - a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly scaled(const K& a) const {
        MPoly r;
        if (is_zero(a)) return r;
        for (const auto& [m, c] : t_) r.t_[m] = c * a;
        return r;
    }
    MPoly pow(int e) const {
        MPoly r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto i = a.t_.begin();
        auto j = b.t_.begin();
        for (; i != a.t_.end(); ++i, ++j)
            if (i->first != j->first || !(i->second == j->second)) return false;
        return true;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly derivative(int v) const {
        MPoly r;
        for (const auto& [m, c] : t_) {
            int e = mono_exp(m, v);
            if (e == 0) continue;
            Mono n = m;
            n[v] -= 1;
            r.add_term(mono_trim(n), c * K(static_cast<long>(e)));
        }
        return r;
    }

    // Full evaluation in a ring T; conv maps coefficients into T.
    template <class T, class Conv>
    T eval_with(const std::vector<T>& x, Conv conv) const {
        T r = conv(K(0));
        for (const auto& [m, c] : t_) {
            T p = conv(c);
            for (size_t v = 0; v < m.size(); ++v)
                for (int e = 0; e < m[v]; ++e) {
                    if (v >= x.size()) throw std::out_of_range("missing variable value");
                    p = p * x[v];
                }
            r = r + p;
        }
        return r;
    }
    K eval(const std::vector<K>& x) const {
        return eval_with(x, [](const K& a) { return a; });
    }

    // Substitute variable v by a polynomial.
    MPoly substitute(int v, const MPoly& value) const {
        MPoly r;
        std::vector<MPoly> powers{MPoly(1)};
        for (const auto& [m, c] : t_) {
            int e = mono_exp(m, v);
            while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
            Mono rest = m;
            if (v < static_cast<int>(rest.size())) rest[v] = 0;
            r += MPoly::term(c, rest) * powers[e];
        }
        return r;
    }

    template <class F>
    auto map(F f) const {
        using R = decltype(f(std::declval<K>()));
        MPoly<R> r;
        for (const auto& [m, c] : t_) r += MPoly<R>::term(f(c), m);
        return r;
    }

    // View as a polynomial in variable v with coefficients in the remaining variables.
    UPoly<MPoly> as_upoly(int v) const {
        std::vector<MPoly> cs(std::max(degree_in(v), 0) + 1);
        for (const auto& [m, c] : t_) {
            int e = mono_exp(m, v);
            Mono rest = m;
            if (v < static_cast<int>(rest.size())) rest[v] = 0;
            cs[e] += MPoly::term(c, rest);
        }
        return UPoly<MPoly>(std::move(cs));
    }

    // Largest monomial dividing every term.
    Mono monomial_content() const {
        if (t_.empty()) return {};
        Mono g = t_.begin()->first;
        for (const auto& [m, c] : t_) {
            g.resize(std::min(g.size(), m.size()));
            for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
        }
        return mono_trim(g);
    }
    MPoly divide_monomial(const Mono& d) const {
        MPoly r;
        for (const auto& [m, c] : t_) {
            Mono n = m;
            n.resize(std::max(n.size(), d.size()), 0);
            for (size_t i = 0; i < d.size(); ++i) {
                n[i] -= d[i];
                if (n[i] < 0) throw std::domain_error("monomial does not divide");
            }
            r.t_[mono_trim(n)] = c;
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            if (neg) cs = cs.substr(1);
            if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
            std::string mono;
            for (size_t v = 0; v < m.size(); ++v) {
                if (m[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += v < names.size() ? names[v] : "v" + std::to_string(v);
                if (m[v] > 1) mono += "^" + std::to_string(m[v]);
            }
            if (!out.empty()) out += neg ? " - " : " + ";
            else if (neg) out += "-";
            if (mono.empty()) out += cs;
            else if (cs == "1") out += mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

private:
    void add_term(const Mono& m, const K& c) {
        if (is_zero(c)) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
            return;
        }
        it->second = it->second + c;
        if (is_zero(it->second)) t_.erase(it);
    }
    Terms t_;
};

template <class K>
bool is_zero(const MPoly<K>& p) {
    return p.zero();
}

template <class K>
std::string coeff_str(const MPoly<K>& p) {
    return p.str();
}

// Exact division of multivariate polynomials (throws when not exact).
template <class K>
MPoly<K> exact_div(const MPoly<K>& a, const MPoly<K>& b) {
    if (b.zero()) throw std::domain_error("division by zero polynomial");
    if (b.is_constant()) return a.scaled(K(1) / b.constant_term());
    MPoly<K> r = a, q;
    const auto& [bm, bc] = *b.terms().rbegin();
    while (!r.zero()) {
        const auto& [rm, rc] = *r.terms().rbegin();
        Mono qm(std::max(rm.size(), bm.size()), 0);
        for (size_t i = 0; i < qm.size(); ++i) {
            qm[i] = mono_exp(rm, static_cast<int>(i)) - mono_exp(bm, static_cast<int>(i));
            if (qm[i] < 0) throw std::domain_error("inexact multivariate division");
        }
        MPoly<K> t = MPoly<K>::term(rc / bc, qm);
        q += t;
        r -= t * b;
    }
    return q;
}

}  // namespace perbar
