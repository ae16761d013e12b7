#pragma once

#include <map>
#include <string>
#include <vector>

#include "cover_type.hpp"

namespace perbar {

// Parses a chain "{*,2}-{1}-{5}-{3,4}" into a marked tree.
inline MarkedTree parse_chain(const std::string& s) {
    std::vector<std::vector<Label>> legs;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '{') throw std::invalid_argument("bad chain: " + s);
        size_t j = s.find('}', i);
        if (j == std::string::npos) throw std::invalid_argument("bad chain: " + s);
        std::vector<Label> v;
        std::string body = s.substr(i + 1, j - i - 1), cur;
        for (char c : body) {
            if (c == ',') {
                v.push_back(cur);
                cur.clear();
            } else if (c != ' ') {
                cur += c;
            }
        }
        if (!cur.empty()) v.push_back(cur);
        legs.push_back(v);
        i = j + 1;
        if (i < s.size() && s[i] == '-') ++i;
    }
    std::vector<MarkedTree::Edge> edges;
    for (size_t k = 0; k + 1 < legs.size(); ++k) edges.emplace_back(static_cast<int>(k), static_cast<int>(k + 1));
    return MarkedTree::from_lists(legs, edges);
}

enum class CatalogGroup {
    MeetsCurve,     // the n = 5 strata carrying punctures or PCF points
    FilterOnly,     // n = 5 strata passing the filter without meeting the curve
    Ramified,       // shares the ramified chart of gamma_6; fails the filter
    Negative,       // valid type rejected by the filter
    Degree4,        // the n = 4 strata carrying curve points
};

struct CatalogEntry {
    std::string name;
    CatalogGroup group;
    int n;
    MarkedTree tau;
    std::vector<Block> blocks;  // source labels
    bool pcf = false;           // no puncture; the curve meets it in PCF points

    CombinatorialType build(int d) const { return build_type(d, n, tau, blocks); }
};

inline std::vector<CatalogEntry> catalog_n5() {
    auto star = MarkedTree::from_lists({{}, {"*", "2"}, {"1", "4"}, {"3", "5"}}, {{0, 1}, {0, 2}, {0, 3}});
    using G = CatalogGroup;
    return {
        {"gamma_1", G::MeetsCurve, 5, parse_chain("{*,2}-{1}-{5}-{3,4}"), {{"5", "4", "3"}, {"2"}}},
        {"gamma_2", G::MeetsCurve, 5, parse_chain("{*,2}-{3}-{1}-{4,5}"), {{"5", "4"}, {"2", "3"}}},
        {"gamma_3", G::MeetsCurve, 5, star, {{"4"}, {"3", "5", "2"}}},
        {"gamma_4", G::MeetsCurve, 5, parse_chain("{*,2}-{3,4}-{1,5}"), {{"5"}, {"2", "3", "4"}}},
        {"gamma_5", G::MeetsCurve, 5, parse_chain("{*,2,4}-{1,3,5}"), {{"5"}, {"2", "4"}}},
        {"gamma_6", G::MeetsCurve, 5, parse_chain("{*,2,5}-{1,3,4}"), {{"5", "2"}, {"3"}}},
        {"gamma_7", G::MeetsCurve, 5, parse_chain("{*,2}-{1,3,4,5}"), {{"2", "3", "4", "5"}}},
        {"gamma_I", G::MeetsCurve, 5, parse_chain("{*,1}-{2,3,4,5}"), {}, true},
        {"gamma_II", G::MeetsCurve, 5, parse_chain("{*,3}-{1,2,4,5}"), {}, true},
        {"gamma_III", G::MeetsCurve, 5, parse_chain("{*,4}-{1,2,3,5}"), {}, true},
        {"gamma_IV", G::MeetsCurve, 5, parse_chain("{*,5}-{1,2,3,4}"), {}, true},
        {"filter_1", G::FilterOnly, 5, parse_chain("{*,2}-{4}-{3}-{1,5}"), {{"5"}, {"3", "2", "4"}}},
        {"filter_2", G::FilterOnly, 5, parse_chain("{*,2}-{4}-{1}-{3,5}"), {{"3", "5"}, {"2", "4"}}},
        {"filter_3", G::FilterOnly, 5, parse_chain("{2,4}-{*}-{5}-{1,3}"), {{"5"}, {"4", "2"}}},
        {"filter_4", G::FilterOnly, 5, parse_chain("{4,*}-{2}-{1,3,5}"), {{"5"}, {"2", "4"}}},
        {"filter_5", G::FilterOnly, 5, parse_chain("{*,2}-{5}-{1}-{3,4}"), {{"5", "2"}, {"4", "3"}}},
        {"filter_6", G::FilterOnly, 5, parse_chain("{*,2}-{5}-{4}-{1,3}"), {{"4", "5", "2"}, {"3"}}},
        {"filter_7", G::FilterOnly, 5, parse_chain("{2,5}-{*}-{3}-{1,4}"), {{"2", "5"}, {"3"}}},
        {"filter_8", G::FilterOnly, 5, parse_chain("{5,*}-{2}-{1,3,4}"), {{"5", "2"}, {"3"}}},
        {"ramified", G::Ramified, 5, parse_chain("{*,1,3}-{2,4,5}"), {}},
        {"negative", G::Negative, 5, parse_chain("{*,2}-{3,4}-{1,5}"), {{"5", "4"}, {"2", "3"}}},
    };
}

inline std::vector<CatalogEntry> catalog_n4() {
    using G = CatalogGroup;
    return {
        {"gamma_1", G::Degree4, 4, parse_chain("{*,2}-{1,3,4}"), {{"2"}, {"3"}, {"4"}}},
        {"gamma_2", G::Degree4, 4, parse_chain("{*,2}-{1,3,4}"), {{"2", "3", "4"}}},
        {"gamma_3", G::Degree4, 4, parse_chain("{*,2,4}-{1,3}"), {{"2", "4"}}},
        {"gamma_4", G::Degree4, 4, parse_chain("{*,2}-{1}-{3,4}"), {{"4", "3"}, {"2"}}},
        {"gamma_5", G::Degree4, 4, parse_chain("{*,2}-{3}-{1,4}"), {{"2", "3"}, {"4"}}},
        {"gamma_I", G::Degree4, 4, parse_chain("{*,3}-{1,2,4}"), {}, true},
        {"gamma_II", G::Degree4, 4, parse_chain("{*,4}-{1,2,3}"), {}, true},
        {"gamma_III", G::Degree4, 4, parse_chain("{*,1}-{2,3,4}"), {}, true},
    };
}

inline std::vector<CatalogEntry> catalog(int n) { return n == 4 ? catalog_n4() : catalog_n5(); }

inline const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& cat, const std::string& name) {
    for (const auto& e : cat)
        if (e.name == name) return e;
    throw std::out_of_range("no catalog entry " + name);
}

// Keys do not depend on d; the largest supported degree fits every block count.
inline const std::map<std::string, std::string>& catalog_keys(int n) {
    static const std::map<std::string, std::string> k4 = [] {
        std::map<std::string, std::string> m;
        for (const auto& e : catalog_n4()) m[e.build(12).key()] = e.name;
        return m;
    }();
    static const std::map<std::string, std::string> k5 = [] {
        std::map<std::string, std::string> m;
        for (const auto& e : catalog_n5()) m[e.build(12).key()] = e.name;
        return m;
    }();
    return n == 4 ? k4 : k5;
}

// Catalog name of a type, or "" when it is not listed.
inline std::string catalog_name(const CombinatorialType& g) {
    if (g.n != 4 && g.n != 5) return "";
    const auto& m = catalog_keys(g.n);
    auto it = m.find(g.key());
    return it == m.end() ? "" : it->second;
}

}  // namespace perbar
