// Exact coefficient scalars: arbitrary-precision rationals, or residues mod a prime p.
// Rationals are kept in lowest terms with positive denominator (GMP canonical form);
// prime-field residues are kept in [0, p).
#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace aicwb {

class Scalar {
public:
    Scalar() : v_(0), p_(0) {}
    Scalar(long n) : v_(n), p_(0) {}  // NOLINT: implicit by design, integers embed everywhere

    static Scalar rational(long num, long den) {
        if (den == 0) throw error("rational with zero denominator");
        Scalar s;
        s.v_ = mpq_class(num, den);
        s.v_.canonicalize();
        return s;
    }

    static Scalar rational(const mpq_class& q) {
        Scalar s;
        s.v_ = q;
        s.v_.canonicalize();
        return s;
    }

    static Scalar residue(const mpz_class& v, long p) {
        if (p < 2) throw error("prime modulus must be >= 2");
        Scalar s;
        s.p_ = p;
        s.v_ = mpq_class(v);
        s.normalize_mod();
        return s;
    }

    long char_p() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    const mpq_class& value() const { return v_; }

    Scalar operator+(const Scalar& o) const {
        Scalar a = *this, b = o;
        align(a, b);
        Scalar r;
        r.p_ = a.p_;
        r.v_ = a.v_ + b.v_;
        r.normalize_mod();
        return r;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator-() const {
        Scalar r = *this;
        r.v_ = -r.v_;
        r.normalize_mod();
        return r;
    }

    Scalar operator*(const Scalar& o) const {
        Scalar a = *this, b = o;
        align(a, b);
        Scalar r;
        r.p_ = a.p_;
        r.v_ = a.v_ * b.v_;
        r.normalize_mod();
        return r;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar inverse() const {
        if (is_zero()) throw error("division by zero scalar");
        Scalar r;
        r.p_ = p_;
        if (p_ == 0) {
            r.v_ = 1 / v_;
        } else {
            mpz_class inv;
            mpz_class p(p_);
            if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
                throw error("residue not invertible mod " + std::to_string(p_));
            r.v_ = mpq_class(inv);
            r.normalize_mod();
        }
        return r;
    }

    Scalar pow(unsigned k) const {
        Scalar acc(1), base = *this;
        if (p_ != 0) acc = Scalar::residue(1, p_);
        while (k) {
            if (k & 1u) acc = acc * base;
            base = base * base;
            k >>= 1u;
        }
        return acc;
    }

    bool operator==(const Scalar& o) const {
        Scalar a = *this, b = o;
        align(a, b);
        return a.v_ == b.v_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used only for deterministic candidate/report ordering.
    bool operator<(const Scalar& o) const {
        if (p_ != o.p_) return p_ < o.p_;
        return v_ < o.v_;
    }

    std::string str() const {
        if (p_ == 0) return v_.get_str();
        return v_.get_num().get_str();
    }

private:
    mpq_class v_;
    long p_;

    void normalize_mod() {
        if (p_ == 0) return;
        mpz_class p(p_);
        mpz_class n = v_.get_num() % p;
        if (n < 0) n += p;
        v_ = mpq_class(n);
    }

    // Coerce to a common domain.  Integers (and rationals with denominator prime
    // to p) map canonically into F_p; everything else is a domain mismatch.
    static void align(Scalar& a, Scalar& b) {
        if (a.p_ == b.p_) return;
        if (a.p_ != 0 && b.p_ != 0)
            throw domain_mismatch_error("scalars over F_" + std::to_string(a.p_) + " and F_" +
                                        std::to_string(b.p_));
        Scalar& q = (a.p_ == 0) ? a : b;
        long p = (a.p_ == 0) ? b.p_ : a.p_;
        mpz_class pz(p);
        if (q.v_.get_den() % pz == 0)
            throw domain_mismatch_error("rational with denominator divisible by " + std::to_string(p) +
                                        " cannot map into F_" + std::to_string(p));
        mpz_class den = q.v_.get_den() % pz;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
        mpz_class n = (q.v_.get_num() % pz) * inv % pz;
        if (n < 0) n += pz;
        q.p_ = p;
        q.v_ = mpq_class(n);
    }
};

} // namespace aicwb
