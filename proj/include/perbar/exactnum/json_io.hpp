#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "number_field.hpp"

namespace perbar {

using json = nlohmann::json;

inline json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}
inline Integer integer_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long>());
}

// Parses polynomials printed by UPoly::str, e.g. "x^2 - 5" or "x^4 + x^3 + x^2 + x + 1".
inline QPoly parse_qpoly(const std::string& text, char var = 'x') {
    std::vector<Rational> cs;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto add = [&](int e, const Rational& c) {
        if (static_cast<int>(cs.size()) <= e) cs.resize(e + 1, Rational(0));
        cs[e] += c;
    };
    skip();
    if (text.substr(i) == "0") return QPoly();
    bool first = true;
    while (i < text.size()) {
        skip();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw std::invalid_argument("malformed polynomial: " + text);
        }
        first = false;
        Rational c = 1;
        size_t j = i;
        while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
        const bool digits = j > i;
        if (digits) {
            c = Rational(text.substr(i, j - i));
            c.canonicalize();
            i = j;
            if (i < text.size() && text[i] == '*') ++i;
        }
        int e = 0;
        if (i < text.size() && text[i] == var) {
            ++i;
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t k = i;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                e = std::stoi(text.substr(i, k - i));
                i = k;
            }
        } else if (!digits) {
            throw std::invalid_argument("malformed polynomial: " + text);
        }
        add(e, sign * c);
        skip();
    }
    return QPoly(std::move(cs));
}

inline json to_json(const NFElem& a) {
    json cs = json::array();
    for (const auto& q : a.coeffs()) cs.push_back(json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())}));
    return json{{"field", a.field() ? a.field()->name() : std::string("x")}, {"coeffs", cs}};
}

inline NFElem nfelem_from_json(const json& j) {
    QPoly m = parse_qpoly(j.at("field").get<std::string>());
    std::vector<Rational> cs;
    for (const auto& pr : j.at("coeffs")) cs.push_back(rat(integer_from_json(pr.at(0)), integer_from_json(pr.at(1))));
    if (m.degree() <= 1) {
        NFElem r(cs.empty() ? Rational(0) : cs[0]);
        if (m.degree() == 1 && !is_zero(m.coeff(0))) r = NFElem(NumberField::make(m), cs);
        return r;
    }
    return NFElem(NumberField::make(m), cs);
}

}  // namespace perbar
