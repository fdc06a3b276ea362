#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "index_set.hpp"

namespace acg {
namespace detail {

inline std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline int parse_int(const std::string& s, const char* what) {
    std::string t = strip(s);
    if (t.empty()) throw ParseError(std::string("empty ") + what);
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(t, &pos);
    } catch (...) {
        throw ParseError(std::string("bad ") + what + " '" + t + "'");
    }
    if (pos != t.size()) throw ParseError(std::string("trailing junk in ") + what + " '" + t + "'");
    return v;
}

/// Split on commas that are not nested inside parentheses.
inline std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

/// "4,2" -> Z4 + Z2; the empty string is the trivial group.
inline GroupSpec parse_group(const std::string& text) {
    std::string t = detail::strip(text);
    if (t.empty()) return GroupSpec();
    std::vector<int> factors;
    for (const auto& part : detail::split_top_level(t))
        factors.push_back(detail::parse_int(part, "group factor"));
    return GroupSpec(std::move(factors));
}

/// Accepts "(3,1)", "3,1" (coordinates) or a bare index "5".
inline int parse_element(const GroupSpec& g, const std::string& text) {
    std::string t = detail::strip(text);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    auto parts = detail::split_top_level(t);
    if (parts.size() == 1 && g.num_factors() != 1) {
        int idx = detail::parse_int(parts[0], "element index");
        if (idx < 0 || idx >= g.order()) throw ParseError("element index out of range");
        return idx;
    }
    std::vector<int> coords;
    for (const auto& p : parts) coords.push_back(detail::parse_int(p, "coordinate"));
    try {
        return g.index_of(coords);
    } catch (const InvalidSpecError& e) {
        throw ParseError(e.what());
    }
}

/// "{1,3,5}" or "{(1,0),(0,1)}"; "complement:{...}" takes G minus the set.
inline IndexSet parse_subset(const GroupSpec& g, const std::string& text) {
    std::string t = detail::strip(text);
    bool complement = false;
    const std::string prefix = "complement:";
    if (t.rfind(prefix, 0) == 0) {
        complement = true;
        t = detail::strip(t.substr(prefix.size()));
    }
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        throw ParseError("subset must be brace-enclosed, e.g. {1,3}");
    t = detail::strip(t.substr(1, t.size() - 2));
    IndexSet s(g.order());
    if (!t.empty())
        for (const auto& item : detail::split_top_level(t)) s.insert(parse_element(g, item));
    return complement ? s.complement() : s;
}

inline std::string group_to_string(const GroupSpec& g) {
    std::string out;
    for (size_t i = 0; i < g.factors().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g.factors()[i]);
    }
    return out;
}

inline std::string element_to_string(const GroupSpec& g, int index) {
    if (g.num_factors() <= 1) return std::to_string(index);
    auto c = g.coords_of(index);
    std::string out = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out + ")";
}

inline std::string subset_to_string(const GroupSpec& g, const IndexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int x) {
        if (!first) out += ',';
        out += element_to_string(g, x);
        first = false;
    });
    return out + "}";
}

} // namespace acg
