#ifndef CHARVAR_QUOT_HPP
#define CHARVAR_QUOT_HPP

#include <memory>
#include <string>
#include <utility>

#include "charvar/errors.hpp"
#include "charvar/unipoly.hpp"

namespace charvar {

// Raised when inversion in Q[v]/(g) meets a zero divisor. The witness factor
// is a proper monic divisor of g and is what dynamic splitting branches on.
struct quot_not_a_unit : not_a_unit {
    UniPoly factor_poly;
    quot_not_a_unit(const std::string& what, UniPoly f)
        : not_a_unit(what, f.str()), factor_poly(std::move(f)) {}
};

// Reduce a representative into degree < deg g.
inline UniPoly quot_reduce(const UniPoly& p, const UniPoly& g) {
    if (g.is_zero()) throw division_failure("quotient by zero modulus");
    return p.divmod(g).second;
}

// Element of Q[v]/(g), g monic of positive degree. The modulus is carried per
// element (shared, compared by value when pointers differ) so computations
// over different branch moduli cannot be mixed silently.
class QuotElem {
public:
    QuotElem() = default;
    QuotElem(UniPoly rep, std::shared_ptr<const UniPoly> mod)
        : g_(std::move(mod)) {
        if (!g_ || g_->degree() < 1) throw error("QuotElem modulus must have positive degree");
        r_ = quot_reduce(rep, *g_);
    }
    static std::shared_ptr<const UniPoly> make_modulus(const UniPoly& g) {
        if (g.is_zero()) throw error("QuotElem modulus must be nonzero");
        return std::make_shared<const UniPoly>(g.monic());
    }
    static QuotElem from_rational(const Rational& c, std::shared_ptr<const UniPoly> mod) {
        return QuotElem(UniPoly::constant(c), std::move(mod));
    }
    static QuotElem generator(std::shared_ptr<const UniPoly> mod) {
        return QuotElem(UniPoly::variable(), std::move(mod));
    }

    const UniPoly& rep() const { return r_; }
    const UniPoly& modulus() const { return *g_; }
    std::shared_ptr<const UniPoly> modulus_ptr() const { return g_; }

    bool is_zero() const { return r_.is_zero(); }
    bool is_one() const { return r_.degree() == 0 && r_.coeff(0).is_one(); }

    QuotElem operator-() const { return QuotElem(-r_, g_); }
    QuotElem operator+(const QuotElem& o) const { check(o); return QuotElem(r_ + o.r_, g_); }
    QuotElem operator-(const QuotElem& o) const { check(o); return QuotElem(r_ - o.r_, g_); }
    QuotElem operator*(const QuotElem& o) const { check(o); return QuotElem(r_ * o.r_, g_); }
    QuotElem& operator+=(const QuotElem& o) { *this = *this + o; return *this; }
    QuotElem& operator-=(const QuotElem& o) { *this = *this - o; return *this; }
    QuotElem& operator*=(const QuotElem& o) { *this = *this * o; return *this; }

    QuotElem inv() const {
        if (r_.is_zero())
            throw quot_not_a_unit("inverse of zero in quotient ring", *g_);
        auto [d, s, t] = uni_gcdext(r_, *g_);
        (void)t;
        if (d.degree() > 0)
            throw quot_not_a_unit("zero divisor in quotient ring", d);
        return QuotElem(s * d.coeff(0).inv(), g_);
    }
    QuotElem operator/(const QuotElem& o) const { return *this * o.inv(); }

    bool operator==(const QuotElem& o) const {
        return r_ == o.r_ && (g_ == o.g_ || *g_ == *o.g_);
    }
    bool operator!=(const QuotElem& o) const { return !(*this == o); }

    std::string str() const { return r_.str(); }

private:
    void check(const QuotElem& o) const {
        if (g_ != o.g_ && *g_ != *o.g_) throw mixed_rings("QuotElem moduli differ");
    }
    UniPoly r_;
    std::shared_ptr<const UniPoly> g_;
};

}

#endif
