#ifndef CHARVAR_UNIPOLY_HPP
#define CHARVAR_UNIPOLY_HPP

#include <string>
#include <vector>

#include "charvar/errors.hpp"
#include "charvar/rational.hpp"

namespace charvar {

// Dense univariate polynomial over Q. coeff(i) is the coefficient of the
// i-th power; the representation is trimmed so the last stored coefficient
// is nonzero (zero polynomial has empty storage).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }
    static UniPoly constant(const Rational& r) { return UniPoly({r}); }
    static UniPoly variable() { return UniPoly({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[i];
    }
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }

    UniPoly operator-() const {
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UniPoly(std::move(r));
    }
    UniPoly operator+(const UniPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return UniPoly(std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly operator*(const Rational& s) const {
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return UniPoly(std::move(r));
    }

    // Euclidean division, remainder degree < divisor degree.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw division_failure("univariate division by zero");
        std::vector<Rational> rem = c_;
        std::vector<Rational> quo;
        int dd = d.degree();
        Rational dl = d.lc().inv();
        while (static_cast<int>(rem.size()) - 1 >= dd) {
            if (rem.back().is_zero()) { rem.pop_back(); continue; }
            int k = static_cast<int>(rem.size()) - 1 - dd;
            Rational q = rem.back() * dl;
            if (static_cast<int>(quo.size()) < k + 1) quo.resize(k + 1, Rational(0));
            quo[k] += q;
            for (int i = 0; i <= dd; ++i)
                rem[k + i] -= q * d.coeff(i);
            rem.pop_back();
        }
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    // Exact division; throws if a nonzero remainder appears.
    UniPoly divexact(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw division_failure("inexact univariate division");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * lc().inv();
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UniPoly(std::move(r));
    }

    Rational eval(const Rational& a) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
        return acc;
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "v") const;

    // Clears denominators and the integer content; sign chosen so lc > 0.
    UniPoly primitive() const {
        if (is_zero()) return *this;
        Int l(1), g(0);
        for (const auto& c : c_) l = l / int_gcd(l, c.den()) * c.den();
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            r[i] = c_[i] * Rational(l);
            g = int_gcd(g, r[i].num());
        }
        Rational s = Rational(1, g);
        if (r.back().sign() < 0) s = -s;
        for (auto& c : r) c *= s;
        return UniPoly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Monic gcd. gcd(f, 0) = monic(f). Uses a primitive remainder sequence so
// intermediate coefficients stay integral.
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.primitive();
    b = b.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b, then strip content
        Rational m = b.lc();
        int k = a.degree() - b.degree() + 1;
        UniPoly scaled = a;
        for (int i = 0; i < k; ++i) scaled = scaled * m;
        UniPoly r = scaled.divmod(b).second;
        a = b;
        b = r.is_zero() ? r : r.primitive();
    }
    return a.monic();
}

// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
inline std::tuple<UniPoly, UniPoly, UniPoly> uni_gcdext(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(Rational(1)), s1;
    UniPoly t0, t1 = UniPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1; r1 = r;
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational u = r0.lc().inv();
    return {r0 * u, s0 * u, t0 * u};
}

inline std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) out += "-";
        Rational a = abs(c);
        bool unit = a.is_one();
        if (!unit || i == 0) out += a.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}

#endif
