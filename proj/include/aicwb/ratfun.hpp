// Univariate rational functions over the exact scalars: the fraction field
// k(Y) of a base polynomial ring, degenerating to plain constants when no
// variable is involved.  Denominators are monic and coprime to numerators
// after every operation.
#pragma once

#include <string>

#include "errors.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace aicwb {

class RatFun {
public:
    RatFun() : num_(), den_(Scalar(1)), var_(0) {}
    RatFun(long n) : num_(Scalar(n)), den_(Scalar(1)), var_(0) {}  // NOLINT: implicit by design
    explicit RatFun(const Scalar& c) : num_(c), den_(Scalar(1)), var_(0) {}

    static RatFun from_poly(const Poly& p, char var) {
        RatFun r;
        r.num_ = p;
        r.den_ = Poly(Scalar(1));
        r.var_ = p.is_constant() ? 0 : var;
        r.check_var();
        return r;
    }

    static RatFun fraction(const Poly& num, const Poly& den, char var) {
        if (den.is_zero()) throw error("rational function with zero denominator");
        RatFun r;
        r.num_ = num;
        r.den_ = den;
        r.var_ = var;
        r.check_var();
        r.reduce();
        return r;
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    char var() const { return var_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    Scalar constant_value() const { return num_.constant_value(); }

    RatFun operator+(const RatFun& o) const {
        char v = join_var(*this, o);
        return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_, v);
    }
    RatFun operator-(const RatFun& o) const { return *this + (-o); }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFun operator*(const RatFun& o) const {
        char v = join_var(*this, o);
        return make(num_ * o.num_, den_ * o.den_, v);
    }
    RatFun operator/(const RatFun& o) const { return *this * o.inverse(); }

    RatFun inverse() const {
        if (is_zero()) throw error("division by zero rational function");
        return make(den_, num_, var_);
    }

    bool operator==(const RatFun& o) const { return (*this - o).is_zero(); }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    // Evaluate at var = at; throws on a pole.
    Scalar eval(const Scalar& at) const {
        if (var_ == 0) return num_.constant_value() / den_.constant_value();
        std::map<char, Scalar> env{{var_, at}};
        Scalar d = den_.eval(env);
        if (d.is_zero()) throw error("pole of rational function at evaluation point");
        return num_.eval(env) / d;
    }

    std::string str() const;

private:
    Poly num_, den_;
    char var_;

    void check_var() const {
        for (const Poly* p : {&num_, &den_})
            for (char w : p->variables())
                if (w != var_)
                    throw domain_mismatch_error(std::string("rational function in ") +
                                                (var_ ? std::string(1, var_) : std::string("<const>")) +
                                                " involves variable " + w);
    }

    static char join_var(const RatFun& a, const RatFun& b) {
        if (a.var_ == 0) return b.var_;
        if (b.var_ == 0 || a.var_ == b.var_) return a.var_;
        throw domain_mismatch_error(std::string("rational functions in different variables ") + a.var_ +
                                    " and " + b.var_);
    }

    static RatFun make(Poly num, Poly den, char var) {
        RatFun r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        r.var_ = var;
        r.reduce();
        if (r.num_.is_constant() && r.den_.is_one()) r.var_ = var;  // keep declared variable
        return r;
    }

    void reduce() {
        if (den_.is_zero()) throw error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Scalar(1));
            return;
        }
        if (var_ != 0 && !(num_.is_constant() && den_.is_constant())) {
            Poly g = poly_gcd(num_, den_, var_);
            if (!g.is_one()) {
                num_ = poly_divmod(num_, g, var_).q;
                den_ = poly_divmod(den_, g, var_).q;
            }
        }
        int dd = std::max(den_.degree(var_ ? var_ : 'Y'), 0);
        Scalar lc = var_ ? den_.coeff_of(var_, dd).constant_value() : den_.constant_value();
        Scalar inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
};

} // namespace aicwb
