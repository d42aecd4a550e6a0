#ifndef CHARVAR_ZPN_HPP
#define CHARVAR_ZPN_HPP

#include <cstdint>
#include <string>

#include "charvar/errors.hpp"
#include "charvar/rational.hpp"

namespace charvar {

// Element of Z/p^N, p an odd prime, N >= 1. Residues live in [0, p^N).
// Units are the residues coprime to p; valuation counts factors of p, with
// the convention val(0) = N.
class ZpnElem {
public:
    ZpnElem() : p_(0), n_(0) {}
    ZpnElem(const Int& r, int64_t p, int n) : p_(p), n_(n) {
        if (p < 3 || p % 2 == 0) throw error("ZpnElem requires an odd prime modulus");
        if (n < 1) throw error("ZpnElem requires N >= 1");
        m_ = int_pow(Int(p), static_cast<unsigned long>(n));
        r_ = r % m_;
        if (r_ < 0) r_ += m_;
    }

    static ZpnElem from_rational(const Rational& q, int64_t p, int n) {
        ZpnElem num(q.num(), p, n);
        Int den = q.den();
        if (den % p == 0) throw bad_denominator("denominator divisible by " + std::to_string(p));
        return num * ZpnElem(den, p, n).inv();
    }

    const Int& residue() const { return r_; }
    int64_t p() const { return p_; }
    int precision() const { return n_; }
    const Int& modulus() const { return m_; }

    bool is_zero() const { return r_ == 0; }
    bool is_unit() const { return r_ % p_ != 0; }

    int valuation() const {
        if (r_ == 0) return n_;
        int k = 0;
        Int t = r_;
        while (t % p_ == 0) { t /= p_; ++k; }
        return k;
    }

    ZpnElem operator-() const { return ZpnElem(m_ - r_, p_, n_); }
    ZpnElem operator+(const ZpnElem& o) const { check(o); return ZpnElem(r_ + o.r_, p_, n_); }
    ZpnElem operator-(const ZpnElem& o) const { check(o); return ZpnElem(r_ - o.r_ + m_, p_, n_); }
    ZpnElem operator*(const ZpnElem& o) const { check(o); return ZpnElem(r_ * o.r_, p_, n_); }
    ZpnElem& operator+=(const ZpnElem& o) { *this = *this + o; return *this; }
    ZpnElem& operator-=(const ZpnElem& o) { *this = *this - o; return *this; }
    ZpnElem& operator*=(const ZpnElem& o) { *this = *this * o; return *this; }

    ZpnElem inv() const {
        if (!is_unit())
            throw not_a_unit("inverse of non-unit mod " + std::to_string(p_) + "^" + std::to_string(n_),
                             std::to_string(p_));
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r_.get_mpz_t(), m_.get_mpz_t());
        return ZpnElem(s, p_, n_);
    }
    ZpnElem operator/(const ZpnElem& o) const { return *this * o.inv(); }

    // Reduce to a coarser precision N' <= N.
    ZpnElem truncate(int np) const {
        if (np > n_) throw error("truncate cannot raise precision");
        return ZpnElem(r_, p_, np);
    }

    int64_t mod_p() const { return Int(r_ % p_).get_si(); }

    bool operator==(const ZpnElem& o) const { return p_ == o.p_ && n_ == o.n_ && r_ == o.r_; }
    bool operator!=(const ZpnElem& o) const { return !(*this == o); }

    std::string str() const { return r_.get_str(); }

private:
    void check(const ZpnElem& o) const {
        if (p_ != o.p_ || n_ != o.n_) throw mixed_rings("ZpnElem rings differ");
    }
    Int r_, m_;
    int64_t p_;
    int n_;
};

}

#endif
