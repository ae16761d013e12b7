#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "engine.hpp"

namespace perbar {

struct StratumCount {
    std::string stratum;
    int points = 0;
    int expected = 0;
    bool pcf = false;
};

struct Perd4Report {
    int d = 2;
    std::vector<StratumCount> strata;
    int punctures = 0;   // sum over the non-PCF strata
    int pcf_points = 0;
    QPoly g;             // (d+1) s^d - d s^(d-1) - 1
    Integer disc;        // exact discriminant of g
    Integer disc_stated;  // d^d ((d+1)^(d-1) + (d-1)^(d+1))
    Integer disc_closed; // (-1)^((d-1)(d-2)/2) d^d ((d+1)^(d-1) + (d-1)^(d-1))
    int distinct_roots = 0;
    bool one_is_root = false;
    bool other_roots_of_unity = false;  // some d-th root of unity other than 1 is a root
    int genus = 0;
    int gonality = 0;

    bool counts_ok() const {
        for (const auto& s : strata)
            if (s.points != s.expected) return false;
        return punctures == d * d;
    }
};

inline QPoly g_polynomial(int d) {
    std::vector<Rational> c(d + 1, Rational(0));
    c[0] = -1;
    c[d - 1] = -d;
    c[d] = d + 1;
    return QPoly(std::move(c));
}

inline Integer disc_stated_formula(int d) {
    Integer a, b, c;
    mpz_ui_pow_ui(a.get_mpz_t(), d, d);
    mpz_ui_pow_ui(b.get_mpz_t(), d + 1, d - 1);
    mpz_ui_pow_ui(c.get_mpz_t(), d - 1, d + 1);
    return a * (b + c);
}

inline Integer disc_closed_formula(int d) {
    Integer a, b, c;
    mpz_ui_pow_ui(a.get_mpz_t(), d, d);
    mpz_ui_pow_ui(b.get_mpz_t(), d + 1, d - 1);
    mpz_ui_pow_ui(c.get_mpz_t(), d - 1, d - 1);
    Integer r = a * (b + c);
    return ((d - 1) * (d - 2) / 2) % 2 ? Integer(-r) : r;
}

inline Perd4Report perd4_report(int d) {
    if (d < 2 || d > 8) throw std::invalid_argument("perd4_report: 2 <= d <= 8");
    Perd4Report r;
    r.d = d;
    const std::vector<int> expect{(d - 1) * (d - 2), 1, d - 1, d - 1, d - 1};
    int k = 0;
    for (const auto& e : catalog_n4()) {
        StratumCount s{e.name, 0, 0, e.pcf};
        if (e.pcf) {
            s.expected = d;
            s.points = static_cast<int>(pcf_solve(e.build(d), e.name).size());
            r.pcf_points += s.points;
        } else {
            s.expected = expect.at(k++);
            try {
                s.points = count_points_one_unknown(e.build(d));
            } catch (const std::invalid_argument&) {
                s.points = 0;  // the shape needs more sheets than d
            }
            r.punctures += s.points;
        }
        r.strata.push_back(s);
    }
    r.g = g_polynomial(d);
    Rational D = discriminant(r.g);
    r.disc = D.get_num();
    r.disc_stated = disc_stated_formula(d);
    r.disc_closed = disc_closed_formula(d);
    r.one_is_root = is_zero(r.g.eval(Rational(1)));
    auto roots = roots_complex(r.g, 1e-12);
    for (size_t i = 0; i < roots.size(); ++i) {
        bool fresh = true;
        for (size_t j = 0; j < i; ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-6) fresh = false;
        if (fresh) ++r.distinct_roots;
    }
    NFElem z = root_of_unity(d);
    UPoly<NFElem> gz = r.g.map([](const Rational& q) { return NFElem(q); });
    for (int j = 1; j < d; ++j)
        if (gz.eval(z.pow(j)).zero()) r.other_roots_of_unity = true;
    r.genus = (d - 1) * (d - 2) / 2;
    r.gonality = d - 1;
    return r;
}

}  // namespace perbar
