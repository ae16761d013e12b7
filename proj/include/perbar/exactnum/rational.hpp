#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace perbar {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r{num, den};
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }
inline Rational exact_div(const Rational& a, const Rational& b) {
    if (is_zero(b)) throw std::domain_error("division by zero");
    return a / b;
}
inline double to_double(const Rational& r) { return r.get_d(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Square-free part of a nonzero integer (sign kept), and the cofactor with n = sf * k^2.
inline Integer squarefree_part(const Integer& n, Integer* root = nullptr) {
    if (n == 0) throw std::domain_error("squarefree part of zero");
    Integer m = abs(n), sf = 1, k = 1;
    for (Integer p = 2; p * p <= m; ++p) {
        while (m % (p * p) == 0) {
            m /= p * p;
            k *= p;
        }
        if (m % p == 0) {
            m /= p;
            sf *= p;
        }
    }
    sf *= m;
    if (n < 0) sf = -sf;
    if (root) *root = k;
    return sf;
}

inline bool is_rational_square(const Rational& q, Rational* root = nullptr) {
    if (sgn(q) < 0) return false;
    Integer n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    if (root) *root = rat(Integer(sqrt(n)), Integer(sqrt(d)));
    return true;
}

}  // namespace perbar
