#ifndef CHARVAR_MPOLY_HPP
#define CHARVAR_MPOLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charvar/errors.hpp"
#include "charvar/fp.hpp"
#include "charvar/rational.hpp"
#include "charvar/unipoly.hpp"

namespace charvar {

constexpr int kMaxVars = 6;
constexpr uint32_t kMaxExp = 1u << 30;

// Exponent vector over the polynomial's variable list. Capacity is fixed at
// kMaxVars; the total degree is cached for order comparisons.
struct Monomial {
    std::array<uint32_t, kMaxVars> e{};
    uint8_t n = 0;
    uint32_t deg = 0;

    static Monomial unit(int nvars) {
        Monomial m;
        m.n = static_cast<uint8_t>(nvars);
        return m;
    }
    static Monomial of(std::vector<uint32_t> exps) {
        if (exps.size() > kMaxVars) throw error("too many variables");
        Monomial m;
        m.n = static_cast<uint8_t>(exps.size());
        for (size_t i = 0; i < exps.size(); ++i) {
            m.e[i] = exps[i];
            m.deg += exps[i];
        }
        return m;
    }

    bool operator==(const Monomial& o) const {
        return n == o.n && e == o.e;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < n; ++i) {
            r.e[i] += o.e[i];
            if (r.e[i] > kMaxExp) throw error("monomial exponent overflow");
        }
        r.deg += o.deg;
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < n; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // this / o, requires o.divides(*this)
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < n; ++i) r.e[i] -= o.e[i];
        r.deg -= o.deg;
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r = *this;
        r.deg = 0;
        for (int i = 0; i < n; ++i) {
            r.e[i] = std::max(e[i], o.e[i]);
            r.deg += r.e[i];
        }
        return r;
    }
    bool is_unit() const { return deg == 0; }
};

// Term order. Blocks are compared left to right; a graded block compares
// total degree first, then reverse-lexicographically along the reversed
// variable list. A product of two graded blocks is an elimination order for
// the first block's variables.
struct MonomialOrder {
    enum class Kind { lex, grevlex };
    struct Block {
        Kind kind;
        std::vector<int> vars;
    };
    std::vector<Block> blocks;

    static MonomialOrder grevlex(int nvars) {
        std::vector<int> all(nvars);
        for (int i = 0; i < nvars; ++i) all[i] = i;
        return {{Block{Kind::grevlex, all}}};
    }
    static MonomialOrder lex(std::vector<int> priority) {
        return {{Block{Kind::lex, std::move(priority)}}};
    }
    static MonomialOrder elimination(const std::vector<int>& drop, int nvars) {
        std::vector<bool> in(nvars, false);
        for (int i : drop) in[i] = true;
        std::vector<int> rest;
        for (int i = 0; i < nvars; ++i)
            if (!in[i]) rest.push_back(i);
        return {{Block{Kind::grevlex, drop}, Block{Kind::grevlex, rest}}};
    }

    // <0, 0, >0 as a < b, a == b, a > b
    int cmp(const Monomial& a, const Monomial& b) const {
        for (const auto& blk : blocks) {
            if (blk.kind == Kind::lex) {
                for (int v : blk.vars) {
                    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
                }
            } else {
                uint64_t da = 0, db = 0;
                for (int v : blk.vars) { da += a.e[v]; db += b.e[v]; }
                if (da != db) return da < db ? -1 : 1;
                for (size_t i = blk.vars.size(); i-- > 0;) {
                    int v = blk.vars[i];
                    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
                }
            }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    nlohmann::ordered_json to_json(const std::vector<std::string>& vars) const {
        nlohmann::ordered_json bs = nlohmann::ordered_json::array();
        for (const auto& blk : blocks) {
            nlohmann::ordered_json names = nlohmann::ordered_json::array();
            for (int v : blk.vars) names.push_back(vars.at(v));
            bs.push_back({{"kind", blk.kind == Kind::lex ? "lex" : "grevlex"},
                          {"vars", names}});
        }
        return bs;
    }
};

// Canonical term order used for storage and serialization: graded reverse
// lexicographic over the variable list as given, leading term first.
inline int canonical_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = a.n; i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

struct CanonicalDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_cmp(a, b) > 0;
    }
};

// Sparse multivariate polynomial over an exact coefficient ring C. The
// variable list is part of the value; binary operations demand equal lists.
template <class C>
class MultiPoly {
public:
    using TermMap = std::map<Monomial, C, CanonicalDesc>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
        if (vars_.size() > kMaxVars) throw error("too many variables");
    }

    static MultiPoly zero(std::vector<std::string> vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(std::vector<std::string> vars, const C& c) {
        MultiPoly p(std::move(vars));
        p.add_term(Monomial::unit(static_cast<int>(p.vars_.size())), c);
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name, const C& one) {
        MultiPoly p(vars);
        int idx = p.var_index(name);
        Monomial m = Monomial::unit(static_cast<int>(vars.size()));
        m.e[idx] = 1;
        m.deg = 1;
        p.add_term(m, one);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        throw error("unknown variable " + name);
    }

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.deg);
        return d;
    }
    uint32_t degree_in(int var) const {
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
        return d;
    }

    void add_term(const Monomial& m, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    MultiPoly operator+(const MultiPoly& o) const {
        check(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        check(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        check(o);
        MultiPoly r(vars_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_)
                r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    MultiPoly operator*(const C& s) const {
        MultiPoly r(vars_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    MultiPoly pow(unsigned int k) const {
        if (k > 0 && is_zero()) return *this;
        MultiPoly acc = constant(vars_, unit_like());
        MultiPoly b = *this;
        while (k) {
            if (k & 1) acc = acc * b;
            if (k >>= 1) b = b * b;
        }
        return acc;
    }

    bool operator==(const MultiPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(const std::string& var) const {
        int idx = var_index(var);
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m.e[idx] == 0) continue;
            Monomial m2 = m;
            C c2 = repeat_add(c, m.e[idx]);
            m2.e[idx] -= 1;
            m2.deg -= 1;
            r.add_term(m2, c2);
        }
        return r;
    }

    // Substitute one variable by a polynomial over the same variable list.
    MultiPoly substitute(const std::string& var, const MultiPoly& q) const {
        check(q);
        int idx = var_index(var);
        MultiPoly r(vars_);
        std::vector<MultiPoly> powers;  // powers[i] holds q^(i+1)
        for (const auto& [m, c] : terms_) {
            uint32_t k = m.e[idx];
            Monomial rest = m;
            rest.deg -= rest.e[idx];
            rest.e[idx] = 0;
            MultiPoly t(vars_);
            t.add_term(rest, c);
            if (k == 0) {
                r += t;
            } else {
                while (powers.size() < k)
                    powers.push_back(powers.empty() ? q : powers.back() * q);
                r += t * powers[k - 1];
            }
        }
        return r;
    }

    // Evaluate at a full point of some ring R. embed maps coefficients into R.
    template <class R, class Embed>
    R evaluate(const std::vector<R>& point, Embed embed, const R& one) const {
        if (point.size() != vars_.size()) throw error("evaluation point arity mismatch");
        R acc = one - one;
        for (const auto& [m, c] : terms_) {
            R t = embed(c);
            for (int i = 0; i < m.n; ++i)
                for (uint32_t k = 0; k < m.e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Transport to another variable list; every variable carrying a nonzero
    // exponent must exist in the target list.
    MultiPoly on_vars(const std::vector<std::string>& newvars) const {
        MultiPoly r(newvars);
        std::vector<int> map(vars_.size(), -1);
        for (size_t i = 0; i < vars_.size(); ++i) {
            for (size_t j = 0; j < newvars.size(); ++j)
                if (vars_[i] == newvars[j]) map[i] = static_cast<int>(j);
        }
        for (const auto& [m, c] : terms_) {
            Monomial m2 = Monomial::unit(static_cast<int>(newvars.size()));
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (m.e[i] == 0) continue;
                if (map[i] < 0) throw error("variable " + vars_[i] + " not present in target ring");
                m2.e[map[i]] = m.e[i];
                m2.deg += m.e[i];
            }
            r.add_term(m2, c);
        }
        return r;
    }

    // View as univariate in `var`; all other variables must be absent.
    UniPoly to_unipoly(const std::string& var) const
        requires std::is_same_v<C, Rational>
    {
        int idx = var_index(var);
        std::vector<Rational> cs;
        for (const auto& [m, c] : terms_) {
            if (m.deg != m.e[idx]) throw error("polynomial is not univariate in " + var);
            if (cs.size() <= m.e[idx]) cs.resize(m.e[idx] + 1, Rational(0));
            cs[m.e[idx]] = c;
        }
        return UniPoly(std::move(cs));
    }

    static MultiPoly from_unipoly(const UniPoly& u, std::vector<std::string> vars, const std::string& var)
        requires std::is_same_v<C, Rational>
    {
        MultiPoly r(vars);
        int idx = r.var_index(var);
        for (int i = 0; i <= u.degree(); ++i) {
            if (u.coeff(i).is_zero()) continue;
            Monomial m = Monomial::unit(static_cast<int>(vars.size()));
            m.e[idx] = static_cast<uint32_t>(i);
            m.deg = static_cast<uint32_t>(i);
            r.add_term(m, u.coeff(i));
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (neg) cs = cs.substr(1);
            std::string ms;
            for (int i = 0; i < m.n; ++i) {
                if (m.e[i] == 0) continue;
                if (!ms.empty()) ms += "*";
                ms += vars_[i];
                if (m.e[i] > 1) ms += "^" + std::to_string(m.e[i]);
            }
            if (ms.empty()) {
                out += cs;
            } else {
                if (cs != "1") out += cs + "*";
                out += ms;
            }
        }
        return out;
    }

private:
    void check(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw mixed_rings("polynomials over different variable lists");
    }
    static C repeat_add(const C& c, uint32_t k) {
        C acc = c - c;
        for (uint32_t i = 0; i < k; ++i) acc += c;
        return acc;
    }
    // A multiplicative unit of the coefficient ring. Rings without a unary
    // constructor yield one by inverting any present coefficient.
    C unit_like() const {
        if constexpr (std::is_constructible_v<C, long>) {
            return C(1);
        } else {
            if (terms_.empty()) throw error("no coefficient to derive a ring unit from");
            const C& c = terms_.begin()->second;
            return c * c.inv();
        }
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

using QPoly = MultiPoly<Rational>;

// ---- constructors for the rational case ----

inline QPoly qvar(const std::vector<std::string>& vars, const std::string& name) {
    return QPoly::variable(vars, name, Rational(1));
}
inline QPoly qconst(const std::vector<std::string>& vars, const Rational& c) {
    return QPoly::constant(vars, c);
}
inline QPoly qconst(const std::vector<std::string>& vars, long c) {
    return QPoly::constant(vars, Rational(c));
}

// Content (positive rational) and the primitive integer part.
inline Rational content(const QPoly& p) {
    if (p.is_zero()) return Rational(0);
    Int l(1), g(0);
    for (const auto& [m, c] : p.terms()) {
        l = l / int_gcd(l, c.den()) * c.den();
    }
    for (const auto& [m, c] : p.terms()) {
        g = int_gcd(g, c.num() * (l / c.den()));
    }
    return Rational(g, l);
}

// Divides out the content; leading canonical coefficient becomes positive.
inline QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    Rational c = content(p);
    if (p.terms().begin()->second.sign() < 0) c = -c;
    return p * c.inv();
}

// Monic under the canonical term order.
inline QPoly canonical_monic(const QPoly& p) {
    if (p.is_zero()) return p;
    return p * p.terms().begin()->second.inv();
}

// ---- evaluation helpers ----

inline Rational eval_q(const QPoly& p, const std::vector<Rational>& pt) {
    return p.evaluate<Rational>(pt, [](const Rational& c) { return c; }, Rational(1));
}

inline FpElem eval_fp(const QPoly& p, const std::vector<FpElem>& pt, int64_t prime) {
    return p.evaluate<FpElem>(
        pt, [prime](const Rational& c) { return FpElem::from_rational(c, prime); },
        FpElem(1, prime));
}

// ---- JSON serialization (rational coefficients) ----

inline nlohmann::ordered_json poly_to_json(const QPoly& p) {
    nlohmann::ordered_json j;
    j["vars"] = p.vars();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["c"] = c.str();
        std::vector<uint32_t> exps(m.e.begin(), m.e.begin() + m.n);
        t["e"] = exps;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline QPoly poly_from_json(const nlohmann::json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    QPoly p(vars);
    for (const auto& t : j.at("terms")) {
        Rational c = Rational::from_string(t.at("c").get<std::string>());
        std::vector<uint32_t> exps = t.at("e").get<std::vector<uint32_t>>();
        if (exps.size() != vars.size()) throw error("exponent arity mismatch in JSON term");
        p.add_term(Monomial::of(exps), c);
    }
    return p;
}

// Univariate gcd on polynomials presented in a multivariate ring.
inline QPoly univariate_gcd(const QPoly& a, const QPoly& b, const std::string& var) {
    UniPoly g = uni_gcd(a.to_unipoly(var), b.to_unipoly(var));
    return QPoly::from_unipoly(g, a.vars(), var);
}

}

#endif
