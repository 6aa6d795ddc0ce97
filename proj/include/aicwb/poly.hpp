// Sparse multivariate polynomials over an exact coefficient ring C, with the
// univariate algorithms (division, gcd, squarefree part, resultant) used by the
// tower and ring layers.  Variables are single letters; monomials are sorted
// exponent vectors; no zero coefficient is ever stored.
#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace aicwb {

// Degree of the zero polynomial.
constexpr int kNegInfDeg = INT_MIN;

using Mono = std::vector<std::pair<char, int>>;  // sorted by variable, exponents >= 1

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

inline int mono_exp(const Mono& m, char v) {
    for (const auto& [var, e] : m)
        if (var == v) return e;
    return 0;
}

inline int mono_total_degree(const Mono& m) {
    int d = 0;
    for (const auto& [var, e] : m) d += e;
    return d;
}

inline Mono mono_without(const Mono& m, char v) {
    Mono r;
    for (const auto& t : m)
        if (t.first != v) r.push_back(t);
    return r;
}

template <class C>
class PolyT {
public:
    PolyT() = default;
    explicit PolyT(const C& c) {
        if (!c.is_zero()) t_[{}] = c;
    }
    explicit PolyT(long n) : PolyT(C(n)) {}

    static PolyT var(char v) {
        PolyT p;
        p.t_[Mono{{v, 1}}] = C(1);
        return p;
    }

    static PolyT monomial(Mono m, const C& c) {
        PolyT p;
        if (!c.is_zero()) p.t_[std::move(m)] = c;
        return p;
    }

    const std::map<Mono, C>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

    C constant_value() const {
        auto it = t_.find(Mono{});
        return it == t_.end() ? C(0) : it->second;
    }

    bool is_one() const { return is_constant() && constant_value().is_one(); }

    int degree(char v) const {
        if (t_.empty()) return kNegInfDeg;
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, mono_exp(m, v));
        return d;
    }

    int total_degree() const {
        if (t_.empty()) return kNegInfDeg;
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, mono_total_degree(m));
        return d;
    }

    std::vector<char> variables() const {
        std::set<char> vs;
        for (const auto& [m, c] : t_)
            for (const auto& [v, e] : m) vs.insert(v);
        return {vs.begin(), vs.end()};
    }

    C coeff_mono(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? C(0) : it->second;
    }

    // Coefficient of v^k, a polynomial in the remaining variables.
    PolyT coeff_of(char v, int k) const {
        PolyT r;
        for (const auto& [m, c] : t_)
            if (mono_exp(m, v) == k) r.add_term(mono_without(m, v), c);
        return r;
    }

    // Degree-indexed coefficients as polynomials without v; empty for the zero polynomial.
    std::vector<PolyT> coeffs_in(char v) const {
        int d = degree(v);
        if (d == kNegInfDeg) return {};
        std::vector<PolyT> cs(static_cast<std::size_t>(d) + 1);
        for (const auto& [m, c] : t_) cs[static_cast<std::size_t>(mono_exp(m, v))].add_term(mono_without(m, v), c);
        return cs;
    }

    static PolyT assemble(char v, const std::vector<PolyT>& cs) {
        PolyT r;
        PolyT x = var(v), xp(C(1));
        for (std::size_t k = 0; k < cs.size(); ++k) {
            r = r + cs[k] * xp;
            xp = xp * x;
        }
        return r;
    }

    PolyT operator+(const PolyT& o) const {
        PolyT r = *this;
        for (const auto& [m, c] : o.t_) r.add_term(m, c);
        return r;
    }

    PolyT operator-(const PolyT& o) const { return *this + (-o); }

    PolyT operator-() const {
        PolyT r;
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }

    PolyT operator*(const PolyT& o) const {
        PolyT r;
        for (const auto& [m1, c1] : t_)
            for (const auto& [m2, c2] : o.t_) r.add_term(mono_mul(m1, m2), c1 * c2);
        return r;
    }

    PolyT scaled(const C& c) const {
        PolyT r;
        if (c.is_zero()) return r;
        for (const auto& [m, cc] : t_) r.add_term(m, cc * c);
        return r;
    }

    bool operator==(const PolyT& o) const { return (*this - o).is_zero(); }
    bool operator!=(const PolyT& o) const { return !(*this == o); }

    PolyT subst(char v, const PolyT& val) const {
        PolyT r;
        std::vector<PolyT> powers{PolyT(C(1))};
        for (const auto& [m, c] : t_) {
            int k = mono_exp(m, v);
            while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * val);
            r = r + monomial(mono_without(m, v), c) * powers[static_cast<std::size_t>(k)];
        }
        return r;
    }

    C eval(const std::map<char, C>& at) const {
        C r(0);
        for (const auto& [m, c] : t_) {
            C term = c;
            for (const auto& [v, e] : m) {
                auto it = at.find(v);
                if (it == at.end()) throw error(std::string("unassigned variable ") + v);
                for (int i = 0; i < e; ++i) term = term * it->second;
            }
            r = r + term;
        }
        return r;
    }

    PolyT derivative(char v) const {
        PolyT r;
        for (const auto& [m, c] : t_) {
            int k = mono_exp(m, v);
            if (k == 0) continue;
            Mono m2 = mono_without(m, v);
            if (k > 1) {
                Mono mv{{v, k - 1}};
                m2 = mono_mul(m2, mv);
            }
            r.add_term(m2, c * C(k));
        }
        return r;
    }

    template <class D, class F>
    PolyT<D> map_coeffs(F f) const {
        PolyT<D> r;
        for (const auto& [m, c] : t_) r.add_term(m, f(c));
        return r;
    }

    void add_term(const Mono& m, const C& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_[m] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

private:
    std::map<Mono, C> t_;
};

using Poly = PolyT<Scalar>;

// ---------------------------------------------------------------------------
// Univariate algorithms.
// ---------------------------------------------------------------------------

template <class C>
struct DivModResult {
    PolyT<C> q, r;
};

// Division with remainder by a divisor whose leading coefficient in v is an
// invertible constant.  Works with polynomial coefficients in the remaining
// variables (used for triangular-set reduction).
template <class C>
DivModResult<C> poly_divmod(const PolyT<C>& f, const PolyT<C>& g, char v) {
    int dg = g.degree(v);
    if (dg == kNegInfDeg) throw error("division by zero polynomial");
    PolyT<C> lc = g.coeff_of(v, dg);
    if (!lc.is_constant())
        throw unsupported_error("divisor is not monic in its main variable over a coefficient ring");
    C lcv = lc.constant_value();
    C lcinv = lcv.inverse();
    DivModResult<C> res;
    res.r = f;
    int dr = res.r.degree(v);
    while (dr != kNegInfDeg && dr >= dg) {
        PolyT<C> c = res.r.coeff_of(v, dr).scaled(lcinv);
        Mono shift{{v, dr - dg}};
        PolyT<C> qterm = (dr == dg) ? c : c * PolyT<C>::monomial(shift, C(1));
        res.q = res.q + qterm;
        res.r = res.r - qterm * g;
        dr = res.r.degree(v);
    }
    return res;
}

// Monic gcd of two genuinely univariate polynomials over a field.
template <class C>
PolyT<C> poly_gcd(PolyT<C> f, PolyT<C> g, char v) {
    auto check_univ = [&](const PolyT<C>& p) {
        for (char w : p.variables())
            if (w != v) throw unsupported_error(std::string("gcd input involves extra variable ") + w);
    };
    check_univ(f);
    check_univ(g);
    while (!g.is_zero()) {
        PolyT<C> r = poly_divmod(f, g, v).r;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    C lc = f.coeff_of(v, std::max(f.degree(v), 0)).constant_value();
    return f.scaled(lc.inverse());
}

// Squarefree part f / gcd(f, f') of a univariate polynomial over a field of
// characteristic 0 or characteristic p with deg f < p; in characteristic p
// with deg f >= p the input is accepted only if separability is evident
// (nonzero derivative coprime to f).
template <class C>
PolyT<C> squarefree_part(PolyT<C> f, char v, long char_p) {
    if (f.is_zero()) throw degenerate_input_error("squarefree part of the zero polynomial");
    int d = f.degree(v);
    C lc = f.coeff_of(v, std::max(d, 0)).constant_value();
    f = f.scaled(lc.inverse());
    if (d <= 0) return f;
    PolyT<C> fp = f.derivative(v);
    if (char_p != 0 && d >= char_p) {
        if (fp.is_zero())
            throw unsupported_error("inseparable polynomial in characteristic " + std::to_string(char_p));
        PolyT<C> g = poly_gcd(f, fp, v);
        if (g.is_one()) return f;
        throw unsupported_error("squarefree part unsupported: characteristic " + std::to_string(char_p) +
                                " with degree >= p and repeated factors");
    }
    PolyT<C> g = poly_gcd(f, fp, v);
    return poly_divmod(f, g, v).q;
}

namespace detail {

inline Poly det_poly(std::vector<std::vector<Poly>>& m, std::size_t n) {
    // Laplace expansion along the first column; matrices here are tiny.
    if (n == 0) return Poly(Scalar(1));
    if (n == 1) return m[0][0];
    Poly det;
    std::vector<std::vector<Poly>> sub(n - 1, std::vector<Poly>(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::size_t r = 0;
        for (std::size_t ii = 0; ii < n; ++ii) {
            if (ii == i) continue;
            for (std::size_t jj = 1; jj < n; ++jj) sub[r][jj - 1] = m[ii][jj];
            ++r;
        }
        Poly minor = det_poly(sub, n - 1);
        Poly contrib = m[i][0] * minor;
        det = (i % 2 == 0) ? det + contrib : det - contrib;
    }
    return det;
}

} // namespace detail

// Sylvester resultant of f and g with respect to v; coefficients may involve
// the remaining variables.  Zero iff f and g share a factor of positive degree
// in v over the fraction field of the coefficient ring.
inline Poly resultant(const Poly& f, const Poly& g, char v) {
    int df = f.degree(v), dg = g.degree(v);
    if (df == kNegInfDeg || dg == kNegInfDeg) throw degenerate_input_error("resultant with a zero polynomial");
    if (df <= 0 && dg <= 0)
        throw degenerate_input_error(std::string("variable ") + v + " absent from both resultant inputs");
    if (df <= 0) {
        Poly r(Scalar(1));
        for (int i = 0; i < dg; ++i) r = r * f;
        return r;
    }
    if (dg <= 0) {
        Poly r(Scalar(1));
        for (int i = 0; i < df; ++i) r = r * g;
        return r;
    }
    std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    auto fc = f.coeffs_in(v);
    auto gc = g.coeffs_in(v);
    for (int row = 0; row < dg; ++row)
        for (int k = 0; k <= df; ++k) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + df - k)] = fc[static_cast<std::size_t>(k)];
    for (int row = 0; row < df; ++row)
        for (int k = 0; k <= dg; ++k) m[static_cast<std::size_t>(dg + row)][static_cast<std::size_t>(row + dg - k)] = gc[static_cast<std::size_t>(k)];
    return detail::det_poly(m, n);
}

} // namespace aicwb
