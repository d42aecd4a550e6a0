#ifndef CHARVAR_FP_HPP
#define CHARVAR_FP_HPP

#include <cstdint>
#include <string>

#include "charvar/errors.hpp"
#include "charvar/rational.hpp"

namespace charvar {

// Element of F_p, p an odd prime. The modulus travels with the element;
// binary operations require matching moduli.
class FpElem {
public:
    FpElem() : r_(0), p_(0) {}
    FpElem(int64_t r, int64_t p) : p_(p) {
        if (p < 3 || p % 2 == 0) throw error("FpElem requires an odd prime modulus");
        r_ = r % p;
        if (r_ < 0) r_ += p;
    }

    static FpElem from_rational(const Rational& q, int64_t p) {
        Int num = q.num() % p;
        Int den = q.den() % p;
        if (den == 0) throw bad_denominator("denominator divisible by " + std::to_string(p));
        FpElem n(num.get_si(), p), d(den.get_si(), p);
        return n * d.inv();
    }

    int64_t residue() const { return r_; }
    int64_t modulus() const { return p_; }

    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }

    FpElem operator-() const { return FpElem(p_ - r_, p_); }
    FpElem operator+(const FpElem& o) const { check(o); return FpElem(r_ + o.r_, p_); }
    FpElem operator-(const FpElem& o) const { check(o); return FpElem(r_ - o.r_ + p_, p_); }
    FpElem operator*(const FpElem& o) const { check(o); return FpElem(r_ * o.r_ % p_, p_); }
    FpElem& operator+=(const FpElem& o) { *this = *this + o; return *this; }
    FpElem& operator-=(const FpElem& o) { *this = *this - o; return *this; }
    FpElem& operator*=(const FpElem& o) { *this = *this * o; return *this; }

    FpElem inv() const {
        if (r_ == 0) throw not_a_unit("inverse of 0 mod " + std::to_string(p_));
        // extended Euclid
        int64_t a = r_, b = p_, u0 = 1, u1 = 0;
        while (b != 0) {
            int64_t q = a / b;
            int64_t t = a - q * b; a = b; b = t;
            t = u0 - q * u1; u0 = u1; u1 = t;
        }
        return FpElem(u0 % p_ + p_, p_);
    }
    FpElem operator/(const FpElem& o) const { return *this * o.inv(); }

    FpElem pow(int64_t e) const {
        if (e < 0) return inv().pow(-e);
        FpElem acc(1, p_), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const FpElem& o) const { return p_ == o.p_ && r_ == o.r_; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }
    bool operator<(const FpElem& o) const { return r_ < o.r_; }

    std::string str() const { return std::to_string(r_); }

private:
    void check(const FpElem& o) const {
        if (p_ != o.p_) throw mixed_rings("FpElem moduli differ");
    }
    int64_t r_, p_;
};

}

#endif
