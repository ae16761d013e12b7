#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "upoly.hpp"

namespace perbar {


// Rejects NaN/Inf at construction.
inline Cx checked_cx(double re, double im = 0.0) {
    if (!std::isfinite(re) || !std::isfinite(im)) throw std::domain_error("non-finite complex value");
    return Cx(re, im);
}

inline QPoly cyclotomic(int d) {
    if (d < 1) throw std::domain_error("cyclotomic index must be positive");
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
    QPoly p = QPoly::monomial(Rational(1), d) - QPoly(1);
    for (int e = 1; e < d; ++e)
        if (d % e == 0) p = exact_div(p, cyclotomic(e));
    return p;
}

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[x]/(m) for the supported family: linear, irreducible quadratic, cyclotomic Phi_d with d <= 12.
class NumberField {
public:
    static FieldPtr make(const QPoly& minpoly) {
        if (minpoly.degree() < 1) throw std::domain_error("minimal polynomial must have degree >= 1");
        if (minpoly.lead() != 1) throw std::domain_error("minimal polynomial must be monic");
        int cyc = 0;
        for (int d = 3; d <= 12; ++d)
            if (cyclotomic(d) == minpoly) cyc = d;
        const int n = minpoly.degree();
        if (n == 2 && !cyc) {
            Rational disc = minpoly.coeff(1) * minpoly.coeff(1) - 4 * minpoly.coeff(0);
            if (is_rational_square(disc)) throw std::domain_error("reducible quadratic: " + minpoly.str());
        } else if (n > 2 && !cyc) {
            throw std::domain_error("unsupported number field: " + minpoly.str());
        }
        return FieldPtr(new NumberField(minpoly, cyc));
    }
    // Q(sqrt(D)) with minimal polynomial x^2 - D; the embedding is the principal square root.
    static FieldPtr quadratic(const Integer& D) { return make(QPoly(std::vector<Rational>{Rational(-D), 0, 1})); }
    // Q(zeta_d), zeta_d = exp(2 pi i / d). d = 1, 2 give Q via x - 1, x + 1.
    static FieldPtr cyclotomic_field(int d) {
        if (d > 12) throw std::domain_error("cyclotomic fields supported for d <= 12");
        return make(cyclotomic(d));
    }

    const QPoly& minpoly() const { return m_; }
    int degree() const { return m_.degree(); }
    std::string name() const { return m_.str("x"); }
    int cyclotomic_index() const { return cyc_; }
    Cx generator_value() const { return gen_; }

    friend bool operator==(const NumberField& a, const NumberField& b) { return a.m_ == b.m_; }

private:
    NumberField(QPoly m, int cyc) : m_(std::move(m)), cyc_(cyc) {
        const int n = m_.degree();
        if (n == 1) {
            gen_ = Cx(-to_double(m_.coeff(0)), 0.0);
        } else if (cyc_) {
            gen_ = std::polar(1.0, 2.0 * std::numbers::pi / cyc_);
        } else {
            double b = to_double(m_.coeff(1)), c = to_double(m_.coeff(0));
            gen_ = (-b + std::sqrt(Cx(b * b - 4 * c))) / 2.0;
        }
    }
    QPoly m_;
    int cyc_ = 0;
    Cx gen_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

// Element of a number field; a null field means the element lies in Q.
// Mixed arithmetic promotes rationals into the other operand's field.
class NFElem {
public:
    NFElem() : c_{Rational(0)} {}
    NFElem(long a) : c_{Rational(a)} {}
    NFElem(const Rational& a) : c_{a} {}
    NFElem(FieldPtr f, std::vector<Rational> cs) : f_(std::move(f)), c_(std::move(cs)) { normalize(); }

    static NFElem generator(const FieldPtr& f) {
        std::vector<Rational> cs(f->degree(), Rational(0));
        if (f->degree() == 1) cs[0] = -f->minpoly().coeff(0);
        else cs[1] = 1;
        return NFElem(f, cs);
    }

    const FieldPtr& field() const { return f_; }
    int degree() const { return f_ ? f_->degree() : 1; }
    // Coefficients on the power basis 1, x, ..., x^{n-1}.
    std::vector<Rational> coeffs() const {
        std::vector<Rational> r = c_;
        r.resize(degree(), Rational(0));
        return r;
    }
    Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!perbar::is_zero(c_[i])) return false;
        return true;
    }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("element is not rational");
        return c_[0];
    }
    bool zero() const {
        for (const auto& x : c_)
            if (!perbar::is_zero(x)) return false;
        return true;
    }

    Cx to_cx() const {
        if (!f_) return Cx(to_double(c_[0]), 0.0);
        Cx g = f_->generator_value(), r = 0, p = 1;
        for (const auto& x : c_) {
            r += to_double(x) * p;
            p *= g;
        }
        return r;
    }

    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        FieldPtr f = common(a, b);
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return NFElem(f, std::move(r), raw{});
    }
    friend NFElem operator-(const NFElem& a) {
        std::vector<Rational> r = a.c_;
        for (auto& x : r) x = -x;
        return NFElem(a.f_, std::move(r), raw{});
    }
    friend NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }
    friend NFElem operator*(const NFElem& a, const NFElem& b) {
        FieldPtr f = common(a, b);
        if (!f || (a.c_.size() == 1 && b.c_.size() == 1)) {
            std::vector<Rational> r{a.c_[0] * b.c_[0]};
            return NFElem(f, std::move(r), raw{});
        }
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (perbar::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return NFElem(f, std::move(r));
    }
    NFElem inverse() const {
        if (zero()) throw std::domain_error("inverse of zero in number field");
        if (!f_ || c_.size() == 1) return NFElem(f_, {Rational(1) / c_[0]}, raw{});
        // extended Euclid: s*a + t*m = 1
        QPoly a(c_), m = f_->minpoly();
        QPoly s0(1), s1(0), r0 = a, r1 = m;
        while (!r1.zero()) {
            auto [q, r] = divmod(r0, r1);
            QPoly s = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r0.degree() != 0) throw std::domain_error("element not invertible: field polynomial reducible");
        QPoly inv = s0.scaled(Rational(1) / r0.lead());
        return NFElem(f_, inv.coeffs());
    }
    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }
    NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
    NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
    NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
    NFElem& operator/=(const NFElem& o) { return *this = *this / o; }

    NFElem pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        NFElem r(f_, {Rational(1)}, raw{}), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Galois conjugate in a quadratic field (x -> -b - x for minpoly x^2 + b x + c).
    NFElem conjugate() const {
        if (!f_ || f_->degree() == 1) return *this;
        if (f_->degree() != 2) throw std::domain_error("conjugate defined for quadratic fields only");
        Rational b = f_->minpoly().coeff(1);
        Rational c0 = coeff(0), c1 = coeff(1);
        return NFElem(f_, {c0 - b * c1, -c1});
    }

    friend bool operator==(const NFElem& a, const NFElem& b) {
        if (a.f_ && b.f_ && !same_field(a.f_, b.f_)) return false;
        size_t n = std::max(a.c_.size(), b.c_.size());
        for (size_t i = 0; i < n; ++i)
            if (a.coeff(static_cast<int>(i)) != b.coeff(static_cast<int>(i))) return false;
        return true;
    }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    std::string str(const std::string& gen = "") const;
    friend std::ostream& operator<<(std::ostream& os, const NFElem& e) { return os << e.str(); }

private:
    struct raw {};
    NFElem(FieldPtr f, std::vector<Rational> cs, raw) : f_(std::move(f)), c_(std::move(cs)) { trim(); }

    static FieldPtr common(const NFElem& a, const NFElem& b) {
        if (!a.f_) return b.f_;
        if (!b.f_) return a.f_;
        if (!same_field(a.f_, b.f_)) throw std::domain_error("arithmetic across different number fields");
        return a.f_;
    }
    void normalize() {
        if (c_.empty()) c_.push_back(Rational(0));
        if (f_ && static_cast<int>(c_.size()) > f_->degree()) c_ = divmod(QPoly(c_), f_->minpoly()).second.coeffs();
        if (f_ && f_->degree() == 1) {
            // Q presented as Q[x]/(x - a): collapse to the constant.
            Rational a = -f_->minpoly().coeff(0), v = 0, p = 1;
            for (const auto& x : c_) {
                v += x * p;
                p *= a;
            }
            c_ = {v};
        }
        trim();
    }
    void trim() {
        if (c_.empty()) c_.push_back(Rational(0));
        while (c_.size() > 1 && perbar::is_zero(c_.back())) c_.pop_back();
    }

    FieldPtr f_;
    std::vector<Rational> c_;
};

inline bool is_zero(const NFElem& a) { return a.zero(); }
inline NFElem exact_div(const NFElem& a, const NFElem& b) { return a / b; }
inline Cx to_cx(const NFElem& a) { return a.to_cx(); }
inline Cx to_cx(const Rational& a) { return Cx(to_double(a), 0.0); }

inline std::string NFElem::str(const std::string& gen) const {
    std::string g = gen;
    if (g.empty()) {
        if (!f_) g = "x";
        else if (f_->cyclotomic_index() == 4) g = "i";
        else if (f_->cyclotomic_index()) g = "z" + std::to_string(f_->cyclotomic_index());
        else if (f_->degree() == 2 && perbar::is_zero(f_->minpoly().coeff(1)))
            g = "sqrt(" + Rational(-f_->minpoly().coeff(0)).get_str() + ")";
        else g = "a";
    }
    return QPoly(c_).str(g);
}

}  // namespace perbar
