#pragma once

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace perbar {

struct TruncationError : std::runtime_error {
    TruncationError() : std::runtime_error("order exceeds truncation") {}
};

// Laurent-type power series in one variable t, known modulo t^abs.
// Coefficients are stored from the valuation on: c[k] multiplies t^(val + k).
// A default-constructed series is the exact zero.
template <class C>
class TruncSeries {
public:
    static constexpr int kExact = INT_MAX / 4;

    TruncSeries() = default;

    // From polynomial coefficients (index = exponent), keeping n terms past the valuation.
    static TruncSeries from_poly(const std::vector<C>& poly, int n) {
        TruncSeries s;
        size_t v = 0;
        while (v < poly.size() && is_zero(poly[v])) ++v;
        if (v == poly.size()) return s;
        s.val_ = static_cast<int>(v);
        s.abs_ = s.val_ + n;
        for (int k = 0; k < n; ++k) s.c_.push_back(v + k < poly.size() ? poly[v + k] : C(0));
        return s;
    }
    static TruncSeries constant(const C& a, int n) { return from_poly({a}, n); }
    static TruncSeries monomial(const C& a, int e, int n) {
        std::vector<C> p(e + 1, C(0));
        p[e] = a;
        return from_poly(p, n);
    }
    // Zero known only modulo t^abs.
    static TruncSeries zero_mod(int abs) {
        TruncSeries s;
        s.abs_ = abs;
        s.val_ = abs;
        return s;
    }

    bool is_exact_zero() const { return c_.empty() && abs_ >= kExact; }
    bool is_zero_to_precision() const { return c_.empty(); }
    int valuation() const { return val_; }
    int absolute_precision() const { return abs_; }
    int relative_precision() const { return abs_ - val_; }
    const std::vector<C>& coeffs() const { return c_; }
    C coeff(int e) const {
        int k = e - val_;
        if (e >= abs_) throw TruncationError();
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : C(0);
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        if (a.is_exact_zero()) return b;
        if (b.is_exact_zero()) return a;
        int abs = std::min(a.abs_, b.abs_);
        int lo = std::min(a.val_, b.val_);
        std::vector<C> r;
        for (int e = lo; e < abs; ++e) {
            C x = a.coeff_or_zero(e) + b.coeff_or_zero(e);
            r.push_back(x);
        }
        return make(lo, std::move(r), abs);
    }
    friend TruncSeries operator-(const TruncSeries& a) {
        TruncSeries r = a;
        for (auto& x : r.c_) x = C(0) - x;
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        if (a.is_exact_zero() || b.is_exact_zero()) return TruncSeries();
        if (a.c_.empty() || b.c_.empty()) {
            int abs = a.c_.empty() ? a.abs_ + b.val_ : a.val_ + b.abs_;
            if (a.c_.empty() && b.c_.empty()) abs = a.abs_ + b.abs_;
            return zero_mod(abs);
        }
        int val = a.val_ + b.val_;
        int prec = std::min(a.relative_precision(), b.relative_precision());
        std::vector<C> r(prec, C(0));
        for (int i = 0; i < prec && i < static_cast<int>(a.c_.size()); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (int j = 0; i + j < prec && j < static_cast<int>(b.c_.size()); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return make(val, std::move(r), val + prec);
    }
    TruncSeries scaled(const C& k) const {
        if (is_exact_zero()) return *this;
        std::vector<C> r = c_;
        for (auto& x : r) x = x * k;
        return make(val_, std::move(r), abs_);
    }
    TruncSeries pow(int e) const {
        if (e < 0) throw std::domain_error("negative power of a series");
        if (e == 0) return constant(C(1), std::max(relative_precision(), 1));
        TruncSeries r, b = *this;
        bool have = false;
        while (e > 0) {
            if (e & 1) {
                r = have ? r * b : b;
                have = true;
            }
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }
    // Multiplicative inverse; needs a field of coefficients.
    TruncSeries inverse() const {
        if (c_.empty()) throw TruncationError();
        const int n = relative_precision();
        std::vector<C> r(n, C(0));
        C inv0 = C(1) / c_[0];
        r[0] = inv0;
        for (int k = 1; k < n; ++k) {
            C s(0);
            for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) s += c_[j] * r[k - j];
            r[k] = C(0) - s * inv0;
        }
        return make(-val_, std::move(r), -val_ + n);
    }
    friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * b.inverse(); }

    // Apply f to every coefficient (e.g. evaluate parameters); re-normalizes the valuation.
    template <class F>
    auto map(F f) const {
        using R = decltype(f(std::declval<C>()));
        if (is_exact_zero()) return TruncSeries<R>();
        std::vector<R> r;
        for (const auto& x : c_) r.push_back(f(x));
        return TruncSeries<R>::make(val_, std::move(r), abs_);
    }

    static TruncSeries make(int val, std::vector<C> cs, int abs) {
        TruncSeries s;
        size_t k = 0;
        while (k < cs.size() && is_zero(cs[k])) ++k;
        if (k == cs.size()) return zero_mod(abs);
        s.val_ = val + static_cast<int>(k);
        s.c_.assign(cs.begin() + static_cast<long>(k), cs.end());
        s.abs_ = abs;
        return s;
    }

private:
    C coeff_or_zero(int e) const {
        int k = e - val_;
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : C(0);
    }

    int val_ = kExact;
    std::vector<C> c_;
    int abs_ = kExact;
};

// (order, coefficient) of the first nonzero term.
template <class C>
std::pair<int, C> series_leading(const TruncSeries<C>& s) {
    if (s.is_zero_to_precision()) throw TruncationError();
    return {s.valuation(), s.coeffs().front()};
}

}  // namespace perbar
