// Deterministic, grammar-compatible rendering of polynomials and rational
// functions.  Terms print in (total degree desc, monomial lex asc) order, so
// equal values always render identically.
#pragma once

#include <string>

#include "poly.hpp"
#include "ratfun.hpp"

namespace aicwb {

inline std::string mono_str(const Mono& m) {
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace detail {

template <class C>
std::vector<std::pair<Mono, C>> print_order(const PolyT<C>& p) {
    std::vector<std::pair<Mono, C>> ts(p.terms().begin(), p.terms().end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = mono_total_degree(a.first), db = mono_total_degree(b.first);
        if (da != db) return da > db;
        return a.first < b.first;
    });
    return ts;
}

inline bool coeff_needs_parens(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '+' || c == '*' || c == '/' || (c == '-' && i > 0)) return true;
    }
    return false;
}

} // namespace detail

// Generic printer; CoeffStr maps a coefficient to its string form.
template <class C, class CoeffStr>
std::string poly_str_with(const PolyT<C>& p, CoeffStr coeff_str) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : detail::print_order(p)) {
        std::string cs = coeff_str(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ms = mono_str(m);
        if (ms.empty()) {
            out += detail::coeff_needs_parens(cs) ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            out += ms;
        } else {
            out += (detail::coeff_needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + ms;
        }
    }
    return out;
}

inline std::string poly_str(const Poly& p) {
    return poly_str_with(p, [](const Scalar& c) { return c.str(); });
}

inline std::string RatFun::str() const {
    if (is_polynomial()) return poly_str(num_);
    std::string n = poly_str(num_), d = poly_str(den_);
    auto wrap = [](const std::string& s) {
        return detail::coeff_needs_parens(s) || (!s.empty() && s[0] == '-') ? "(" + s + ")" : s;
    };
    return wrap(n) + "/" + wrap(d);
}

inline std::string tpoly_str(const PolyT<RatFun>& p) {
    return poly_str_with(p, [](const RatFun& c) { return c.str(); });
}

} // namespace aicwb
