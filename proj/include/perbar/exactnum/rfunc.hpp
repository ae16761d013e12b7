#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mpoly.hpp"

namespace perbar {

// Quotient of multivariate polynomials over a field K.
// Normal form: common monomial factors cancelled, denominator's leading coefficient 1,
// and a gcd cancellation when both sides are univariate in the same variable.
template <class K>
class RFunc {
public:
    using Poly = MPoly<K>;

    RFunc() : num_(), den_(1) {}
    RFunc(long a) : num_(a), den_(1) {}
    RFunc(const Poly& p) : num_(p), den_(1) {}
    RFunc(const Poly& n, const Poly& d) : num_(n), den_(d) {
        if (den_.zero()) throw std::domain_error("rational function with zero denominator");
        normalize();
    }
    static RFunc constant(const K& a) { return RFunc(Poly::constant(a)); }
    static RFunc var(int v) { return RFunc(Poly::var(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool zero() const { return num_.zero(); }

    friend RFunc operator+(const RFunc& a, const RFunc& b) {
        if (a.den_ == b.den_) return RFunc(a.num_ + b.num_, a.den_);
        return RFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RFunc operator-(const RFunc& a) { return RFunc(-a.num_, a.den_, raw{}); }
    friend RFunc operator-(const RFunc& a, const RFunc& b) { return a + (-b); }
    friend RFunc operator*(const RFunc& a, const RFunc& b) { return RFunc(a.num_ * b.num_, a.den_ * b.den_); }
    friend RFunc operator/(const RFunc& a, const RFunc& b) {
        if (b.zero()) throw std::domain_error("division by zero rational function");
        return RFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RFunc& operator+=(const RFunc& o) { return *this = *this + o; }
    RFunc& operator-=(const RFunc& o) { return *this = *this - o; }
    RFunc& operator*=(const RFunc& o) { return *this = *this * o; }
    RFunc& operator/=(const RFunc& o) { return *this = *this / o; }

    // Equality by cross-multiplication.
    friend bool operator==(const RFunc& a, const RFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
    friend bool operator!=(const RFunc& a, const RFunc& b) { return !(a == b); }

    template <class T, class Conv>
    T eval_with(const std::vector<T>& x, Conv conv) const {
        T d = den_.eval_with(x, conv);
        if (is_zero(d)) throw std::domain_error("rational function evaluated on a pole");
        return num_.eval_with(x, conv) / d;
    }
    K eval(const std::vector<K>& x) const {
        return eval_with(x, [](const K& a) { return a; });
    }

    RFunc substitute(int v, const RFunc& value) const {
        return RFunc(subst_poly(num_, v, value)) / RFunc(subst_poly(den_, v, value));
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (den_.is_constant()) return num_.str(names);
        return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
    }

private:
    struct raw {};
    RFunc(Poly n, Poly d, raw) : num_(std::move(n)), den_(std::move(d)) {}

    static RFunc subst_poly(const Poly& p, int v, const RFunc& value) {
        RFunc r;
        std::vector<RFunc> powers{RFunc(1)};
        for (const auto& [m, c] : p.terms()) {
            int e = mono_exp(m, v);
            while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
            Mono rest = m;
            if (v < static_cast<int>(rest.size())) rest[v] = 0;
            r += RFunc(Poly::term(c, rest)) * powers[e];
        }
        return r;
    }

    static int single_var(const Poly& p) {
        int v = -1;
        for (const auto& [m, c] : p.terms())
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (v >= 0 && v != static_cast<int>(i)) return -2;
                v = static_cast<int>(i);
            }
        return v;
    }
    static UPoly<K> to_uni(const Poly& p, int v) {
        std::vector<K> cs(std::max(p.degree_in(v), 0) + 1, K(0));
        for (const auto& [m, c] : p.terms()) cs[mono_exp(m, v)] = c;
        return UPoly<K>(std::move(cs));
    }
    static Poly from_uni(const UPoly<K>& u, int v) {
        Poly r;
        for (int i = 0; i <= u.degree(); ++i) r += Poly::term(u.coeff(i), [&] {
            Mono m(v + 1, 0);
            m[v] = i;
            return m;
        }());
        return r;
    }

    void normalize() {
        if (num_.zero()) {
            den_ = Poly(1);
            return;
        }
        Mono gn = num_.monomial_content(), gd = den_.monomial_content();
        Mono g(std::min(gn.size(), gd.size()), 0);
        for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(gn[i], gd[i]);
        g = mono_trim(g);
        if (!g.empty()) {
            num_ = num_.divide_monomial(g);
            den_ = den_.divide_monomial(g);
        }
        int vn = single_var(num_), vd = single_var(den_);
        if (vd >= 0 && (vn == vd || vn == -1)) {
            UPoly<K> un = to_uni(num_, vd), ud = to_uni(den_, vd);
            UPoly<K> h = gcd(un, ud);
            if (h.degree() > 0) {
                num_ = from_uni(divmod(un, h).first, vd);
                den_ = from_uni(divmod(ud, h).first, vd);
            }
        }
        K l = den_.lead();
        if (!(l == K(1))) {
            K inv = K(1) / l;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_, den_;
};

template <class K>
bool is_zero(const RFunc<K>& f) {
    return f.zero();
}

template <class K>
std::string coeff_str(const RFunc<K>& f) {
    return f.str();
}

template <class K>
RFunc<K> exact_div(const RFunc<K>& a, const RFunc<K>& b) {
    return a / b;
}

}  // namespace perbar
