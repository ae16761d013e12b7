#pragma once

#include <stdexcept>
#include <vector>

#include "mpoly.hpp"
#include "number_field.hpp"

namespace perbar {

// Res_v(f, g) with coefficients in the remaining variables.
template <class K>
MPoly<K> resultant_in(const MPoly<K>& f, const MPoly<K>& g, int v) {
    return resultant(f.as_upoly(v), g.as_upoly(v));
}

// A polynomial involving at most variable v, as a univariate polynomial.
template <class K>
UPoly<K> to_univariate(const MPoly<K>& p, int v) {
    std::vector<K> cs(std::max(p.degree_in(v), 0) + 1, K(0));
    for (const auto& [m, c] : p.terms()) {
        for (size_t i = 0; i < m.size(); ++i)
            if (static_cast<int>(i) != v && m[i] != 0) throw std::domain_error("polynomial is not univariate");
        cs[mono_exp(m, v)] = c;
    }
    return UPoly<K>(std::move(cs));
}

template <class K>
MPoly<K> from_univariate(const UPoly<K>& u, int v) {
    MPoly<K> r;
    for (int i = 0; i <= u.degree(); ++i) r += MPoly<K>::term(u.coeff(i), [&] {
        Mono m(v + 1, 0);
        m[v] = i;
        return m;
    }());
    return r;
}

// Substitute constants for a set of variables (value index = variable index; unset entries kept).
template <class K>
MPoly<K> substitute_values(const MPoly<K>& p, const std::vector<std::pair<int, K>>& values) {
    MPoly<K> r;
    for (const auto& [m, c] : p.terms()) {
        K cc = c;
        Mono rest = m;
        for (const auto& [v, x] : values) {
            int e = mono_exp(m, v);
            for (int k = 0; k < e; ++k) cc = cc * x;
            if (v < static_cast<int>(rest.size())) rest[v] = 0;
        }
        r += MPoly<K>::term(cc, rest);
    }
    return r;
}

inline std::vector<Cx> to_cx_coeffs(const QPoly& p) {
    std::vector<Cx> r;
    for (const auto& c : p.coeffs()) r.push_back(to_cx(c));
    return r;
}

}  // namespace perbar
