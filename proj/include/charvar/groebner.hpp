#ifndef CHARVAR_GROEBNER_HPP
#define CHARVAR_GROEBNER_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <vector>

#include "charvar/errors.hpp"
#include "charvar/mpoly.hpp"
#include "charvar/quot.hpp"

namespace charvar {

// Zero divisor discovered during a basis computation over Q[v]/(g).
struct quot_zero_divisor : zero_divisor_hit {
    UniPoly factor_poly;
    quot_zero_divisor(const std::string& what, UniPoly f)
        : zero_divisor_hit(what, f.str()), factor_poly(std::move(f)) {}
};

template <class C>
struct IdealBasis {
    std::vector<MultiPoly<C>> gens;
    MonomialOrder order;
};

template <class C>
struct GroebnerBasis {
    std::vector<MultiPoly<C>> elems;  // reduced: monic, pairwise irreducible, sorted
    MonomialOrder order;

    bool is_trivial() const {
        return elems.size() == 1 && !elems[0].is_zero() &&
               elems[0].terms().begin()->first.is_unit();
    }
};

struct GBOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

namespace detail {

template <class C>
struct OrderedPoly {
    std::vector<std::pair<Monomial, C>> t;  // descending under the active order
    const Monomial& lm() const { return t.front().first; }
    const C& lc() const { return t.front().second; }
    bool empty() const { return t.empty(); }
};

template <class C>
OrderedPoly<C> to_ordered(const MultiPoly<C>& p, const MonomialOrder& ord) {
    OrderedPoly<C> r;
    r.t.assign(p.terms().begin(), p.terms().end());
    std::sort(r.t.begin(), r.t.end(),
              [&ord](const auto& a, const auto& b) { return ord.cmp(a.first, b.first) > 0; });
    return r;
}

template <class C>
MultiPoly<C> from_ordered(const OrderedPoly<C>& p, const std::vector<std::string>& vars) {
    MultiPoly<C> r(vars);
    for (const auto& [m, c] : p.t) r.add_term(m, c);
    return r;
}

// Coefficient normalization for basis elements. Over Q we keep integer
// primitive polynomials to limit fraction growth; over a field we go monic.
inline void normalize(OrderedPoly<Rational>& p) {
    if (p.empty()) return;
    Int l(1), g(0);
    for (const auto& [m, c] : p.t) l = l / int_gcd(l, c.den()) * c.den();
    for (const auto& [m, c] : p.t) g = int_gcd(g, c.num() * (l / c.den()));
    Rational s(l, g);
    if (p.lc().sign() < 0) s = -s;
    for (auto& [m, c] : p.t) c *= s;
}

template <class C>
void normalize(OrderedPoly<C>& p) {
    if (p.empty()) return;
    C inv = p.lc().inv();
    for (auto& [m, c] : p.t) c *= inv;
}

// Full normal form of `dividend` against `basis`. Every term of the result is
// irreducible. When `cofactors` is given it receives, per basis element, the
// multiplier polynomial used, so dividend = sum(cofactor_i * basis_i) + result.
template <class C>
OrderedPoly<C> reduce_full(const OrderedPoly<C>& dividend,
                           const std::vector<OrderedPoly<C>>& basis,
                           const MonomialOrder& ord,
                           std::vector<OrderedPoly<C>>* cofactors = nullptr) {
    auto cmp = [&ord](const Monomial& a, const Monomial& b) { return ord.cmp(a, b) > 0; };
    std::map<Monomial, C, decltype(cmp)> work(cmp);
    for (const auto& [m, c] : dividend.t) work.emplace(m, c);
    if (cofactors) cofactors->assign(basis.size(), {});

    OrderedPoly<C> rem;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        C c = it->second;
        const OrderedPoly<C>* red = nullptr;
        size_t ri = 0;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!basis[i].empty() && basis[i].lm().divides(m)) { red = &basis[i]; ri = i; break; }
        }
        if (!red) {
            rem.t.emplace_back(m, c);
            work.erase(it);
            continue;
        }
        Monomial q = m / red->lm();
        C f = c * red->lc().inv();
        work.erase(it);
        for (size_t k = 1; k < red->t.size(); ++k) {
            Monomial mm = q * red->t[k].first;
            C cc = f * red->t[k].second;
            auto jt = work.find(mm);
            if (jt == work.end()) {
                work.emplace(mm, (cc - cc) - cc);
            } else {
                jt->second -= cc;
                if (jt->second.is_zero()) work.erase(jt);
            }
        }
        if (cofactors) (*cofactors)[ri].t.emplace_back(q, f);
    }
    return rem;
}

template <class C>
OrderedPoly<C> spoly(const OrderedPoly<C>& f, const OrderedPoly<C>& g, const MonomialOrder& ord) {
    Monomial l = f.lm().lcm(g.lm());
    Monomial mf = l / f.lm(), mg = l / g.lm();
    // lc(g) * mf * f - lc(f) * mg * g
    auto cmp = [&ord](const Monomial& a, const Monomial& b) { return ord.cmp(a, b) > 0; };
    std::map<Monomial, C, decltype(cmp)> acc(cmp);
    for (const auto& [m, c] : f.t) {
        Monomial mm = mf * m;
        C cc = g.lc() * c;
        auto it = acc.find(mm);
        if (it == acc.end()) acc.emplace(mm, cc);
        else { it->second += cc; if (it->second.is_zero()) acc.erase(it); }
    }
    for (const auto& [m, c] : g.t) {
        Monomial mm = mg * m;
        C cc = f.lc() * c;
        auto it = acc.find(mm);
        if (it == acc.end()) acc.emplace(mm, (cc - cc) - cc);
        else { it->second -= cc; if (it->second.is_zero()) acc.erase(it); }
    }
    OrderedPoly<C> r;
    r.t.assign(acc.begin(), acc.end());
    return r;
}

}  // namespace detail

// Buchberger's algorithm with the normal selection strategy (minimal lcm
// degree first) and both classical skip criteria. Returns the unique reduced
// basis: monic elements, no term reducible by another element, sorted by
// leading monomial. Over Q[v]/(g) a zero divisor aborts the run with the
// discovered factor.
template <class C>
GroebnerBasis<C> buchberger(const IdealBasis<C>& input, const GBOptions& opt = {}) {
    using detail::OrderedPoly;
    const MonomialOrder& ord = input.order;
    std::vector<std::string> vars;
    for (const auto& g : input.gens)
        if (!g.is_zero()) { vars = g.vars(); break; }
    if (vars.empty()) {
        if (!input.gens.empty()) vars = input.gens.front().vars();
        return {{}, ord};
    }

    try {
        // a nonzero constant anywhere means the reduced basis is exactly {1}
        auto trivial_out = [&](OrderedPoly<C> c) {
            C inv = c.lc().inv();
            for (auto& [m, cc] : c.t) cc *= inv;
            GroebnerBasis<C> out;
            out.order = ord;
            out.elems.push_back(detail::from_ordered(c, vars));
            return out;
        };

        std::vector<OrderedPoly<C>> basis;
        for (const auto& g : input.gens) {
            if (g.is_zero()) continue;
            auto og = detail::to_ordered(g, ord);
            detail::normalize(og);
            if (og.lm().is_unit()) return trivial_out(std::move(og));
            basis.push_back(std::move(og));
        }

        struct Pair {
            uint64_t deg;
            size_t i, j;
            bool operator<(const Pair& o) const {
                if (deg != o.deg) return deg < o.deg;
                if (i != o.i) return i < o.i;
                return j < o.j;
            }
        };
        std::set<Pair> queue;
        std::set<std::pair<size_t, size_t>> pending;
        auto push_pair = [&](size_t i, size_t j) {
            Monomial l = basis[i].lm().lcm(basis[j].lm());
            queue.insert({l.deg, i, j});
            pending.insert({i, j});
        };
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

        while (!queue.empty()) {
            if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline)
                throw budget_exceeded("basis computation exceeded its budget");
            Pair pr = *queue.begin();
            queue.erase(queue.begin());
            pending.erase({pr.i, pr.j});
            const Monomial l = basis[pr.i].lm().lcm(basis[pr.j].lm());

            // product criterion: coprime leading monomials
            if (l.deg == basis[pr.i].lm().deg + basis[pr.j].lm().deg) continue;
            // chain criterion
            bool skip = false;
            for (size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (!basis[k].lm().divides(l)) continue;
                auto key = [](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
                if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) skip = true;
            }
            if (skip) continue;

            auto s = detail::spoly(basis[pr.i], basis[pr.j], ord);
            auto r = detail::reduce_full(s, basis, ord);
            if (r.empty()) continue;
            detail::normalize(r);
            if (r.lm().is_unit()) return trivial_out(std::move(r));
            basis.push_back(std::move(r));
            for (size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
        }

        // minimalize: drop elements whose leading monomial is divisible by another's
        std::vector<bool> keep(basis.size(), true);
        for (size_t i = 0; i < basis.size(); ++i) {
            for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
                if (i == j || !keep[j]) continue;
                if (basis[j].lm().divides(basis[i].lm()) &&
                    !(basis[j].lm() == basis[i].lm() && j > i))
                    keep[i] = false;
            }
        }
        std::vector<OrderedPoly<C>> minimal;
        for (size_t i = 0; i < basis.size(); ++i)
            if (keep[i]) minimal.push_back(std::move(basis[i]));

        // tail-reduce each element against the others until stable
        for (bool changed = true; changed;) {
            changed = false;
            for (size_t i = 0; i < minimal.size(); ++i) {
                std::vector<OrderedPoly<C>> others;
                for (size_t j = 0; j < minimal.size(); ++j)
                    if (j != i) others.push_back(minimal[j]);
                auto r = detail::reduce_full(minimal[i], others, ord);
                detail::normalize(r);
                if (r.t != minimal[i].t) {
                    changed = true;
                    if (r.empty()) {
                        minimal.erase(minimal.begin() + i);
                        --i;
                    } else {
                        minimal[i] = std::move(r);
                    }
                }
            }
        }

        for (auto& g : minimal) {
            C inv = g.lc().inv();
            for (auto& [m, c] : g.t) c *= inv;
        }
        std::sort(minimal.begin(), minimal.end(),
                  [&ord](const auto& a, const auto& b) { return ord.cmp(a.lm(), b.lm()) < 0; });

        GroebnerBasis<C> out;
        out.order = ord;
        for (const auto& g : minimal) out.elems.push_back(detail::from_ordered(g, vars));
        return out;
    } catch (const quot_not_a_unit& e) {
        throw quot_zero_divisor("zero divisor during basis computation", e.factor_poly);
    }
}

// Normal form of p against a (Groebner) basis. With `cofactors`, returns the
// division certificate: p = sum(cofactors[i] * G.elems[i]) + result.
template <class C>
MultiPoly<C> normal_form(const MultiPoly<C>& p, const GroebnerBasis<C>& G,
                         std::vector<MultiPoly<C>>* cofactors = nullptr) {
    if (p.is_zero() || G.elems.empty()) {
        if (cofactors) cofactors->assign(G.elems.size(), MultiPoly<C>::zero(p.vars()));
        return p;
    }
    std::vector<detail::OrderedPoly<C>> basis;
    for (const auto& g : G.elems) basis.push_back(detail::to_ordered(g, G.order));
    std::vector<detail::OrderedPoly<C>> cof;
    auto r = detail::reduce_full(detail::to_ordered(p, G.order), basis, G.order,
                                 cofactors ? &cof : nullptr);
    if (cofactors) {
        cofactors->clear();
        for (const auto& q : cof) cofactors->push_back(detail::from_ordered(q, p.vars()));
    }
    return detail::from_ordered(r, p.vars());
}

template <class C>
bool is_trivial(const IdealBasis<C>& I, const GBOptions& opt = {}) {
    return buchberger(I, opt).is_trivial();
}

template <class C>
bool ideal_equal(const IdealBasis<C>& A, const IdealBasis<C>& B, const GBOptions& opt = {}) {
    MonomialOrder common = A.order;
    auto GA = buchberger(IdealBasis<C>{A.gens, common}, opt);
    auto GB = buchberger(IdealBasis<C>{B.gens, common}, opt);
    return GA.elems == GB.elems;
}

// Direct check that every S-polynomial of every pair reduces to zero.
template <class C>
bool spoly_postcheck(const GroebnerBasis<C>& G) {
    std::vector<detail::OrderedPoly<C>> basis;
    for (const auto& g : G.elems) basis.push_back(detail::to_ordered(g, G.order));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            auto s = detail::spoly(basis[i], basis[j], G.order);
            if (!detail::reduce_full(s, basis, G.order).empty()) return false;
        }
    return true;
}

// ---- rational-coefficient ideal operations ----

inline std::vector<std::string> extended_vars(const std::vector<std::string>& vars,
                                              std::string* fresh) {
    std::string t = "t";
    while (std::find(vars.begin(), vars.end(), t) != vars.end()) t += "_";
    *fresh = t;
    auto out = vars;
    out.push_back(t);
    return out;
}

// Generators of the intersection with the subring omitting drop_vars,
// computed with a block elimination order.
inline IdealBasis<Rational> elimination_ideal(const IdealBasis<Rational>& I,
                                              const std::vector<std::string>& drop_vars,
                                              const GBOptions& opt = {}) {
    if (I.gens.empty()) return I;
    const auto& vars = I.gens.front().vars();
    std::vector<int> drop;
    for (const auto& d : drop_vars) drop.push_back(I.gens.front().var_index(d));
    MonomialOrder elim = MonomialOrder::elimination(drop, static_cast<int>(vars.size()));
    auto G = buchberger(IdealBasis<Rational>{I.gens, elim}, opt);
    IdealBasis<Rational> out;
    out.order = I.order;
    for (const auto& g : G.elems) {
        bool free = true;
        for (const auto& [m, c] : g.terms())
            for (int d : drop)
                if (m.e[d] > 0) free = false;
        if (free) out.gens.push_back(g);
    }
    return out;
}

// I : f^inf by adjoining a fresh variable t with t*f = 1 and eliminating it.
inline IdealBasis<Rational> saturate(const IdealBasis<Rational>& I, const QPoly& f,
                                     const GBOptions& opt = {}) {
    if (I.gens.empty()) return I;
    const auto vars = I.gens.front().vars();
    std::string tname;
    auto evars = extended_vars(vars, &tname);
    IdealBasis<Rational> J;
    J.order = MonomialOrder::grevlex(static_cast<int>(evars.size()));
    for (const auto& g : I.gens) J.gens.push_back(g.on_vars(evars));
    J.gens.push_back(qvar(evars, tname) * f.on_vars(evars) - qconst(evars, 1));
    auto E = elimination_ideal(J, {tname}, opt);
    IdealBasis<Rational> out;
    out.order = I.order;
    for (const auto& g : E.gens) out.gens.push_back(g.on_vars(vars));
    return out;
}

// Saturation by a product, factor by factor. Factors already known to leave
// the ideal unchanged are cheap; callers pass the factor list explicitly so
// reports can name each step.
inline IdealBasis<Rational> saturate_chain(IdealBasis<Rational> I,
                                           const std::vector<QPoly>& factors,
                                           const GBOptions& opt = {}) {
    for (const auto& f : factors) I = saturate(I, f, opt);
    return I;
}

// q in rad(I) via the Rabinowitsch trick.
inline bool radical_member(const QPoly& q, const IdealBasis<Rational>& I,
                           const GBOptions& opt = {}) {
    const auto vars = q.vars();
    std::string tname;
    auto evars = extended_vars(vars, &tname);
    IdealBasis<Rational> J;
    J.order = MonomialOrder::grevlex(static_cast<int>(evars.size()));
    for (const auto& g : I.gens) J.gens.push_back(g.on_vars(evars));
    J.gens.push_back(qvar(evars, tname) * q.on_vars(evars) - qconst(evars, 1));
    return is_trivial(J, opt);
}

// ---- dynamic evaluation over Q[v]/(g) ----

// Runs `job` over Q[v]/(g). When a zero divisor with witness factor h splits
// g, the job reruns over g/h and h separately; results are reported per
// branch modulus. `job` receives the branch modulus and must build its own
// elements over it.
template <class R, class Job>
std::vector<std::pair<UniPoly, R>> run_over_branches(const UniPoly& g, Job job) {
    std::vector<std::pair<UniPoly, R>> results;
    std::vector<UniPoly> stack = {g.monic()};
    while (!stack.empty()) {
        UniPoly m = stack.back();
        stack.pop_back();
        try {
            auto mod = QuotElem::make_modulus(m);
            results.emplace_back(m, job(mod));
        } catch (const quot_zero_divisor& e) {
            UniPoly h = e.factor_poly.monic();
            if (h.degree() < 1 || h.degree() >= m.degree())
                throw error("degenerate splitting factor for modulus " + m.str());
            stack.push_back(h);
            stack.push_back(m.divexact(h).monic());
        }
    }
    std::sort(results.begin(), results.end(),
              [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
    return results;
}

}

#endif
