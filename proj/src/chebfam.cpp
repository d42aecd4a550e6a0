#include "charvar/chebfam.hpp"

#include <mutex>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

std::mutex cache_mu;
std::vector<UniPoly> s_cache;

// grows the S cache to hold indices 0..k, caller holds the lock
void grow_s(int k) {
    if (s_cache.empty()) {
        s_cache.push_back(UniPoly::constant(Rational(1)));
        s_cache.push_back(UniPoly::variable());
    }
    UniPoly v = UniPoly::variable();
    while (static_cast<int>(s_cache.size()) <= k) {
        size_t n = s_cache.size();
        s_cache.push_back(v * s_cache[n - 1] - s_cache[n - 2]);
    }
}

}  // namespace

UniPoly cheb_s(int k) {
    if (k == -1) return UniPoly();
    if (k < -1) return -cheb_s(-k - 2);
    std::lock_guard<std::mutex> lk(cache_mu);
    grow_s(k);
    return s_cache[k];
}

UniPoly cheb_t(int k) {
    if (k < 0) k = -k;
    return cheb_s(k) - cheb_s(k - 2);
}

UniPoly cheb_p(int k) {
    if (k < -1) throw error("partial sum index below -1");
    UniPoly acc;
    for (int j = 0; j <= k; ++j) acc = acc + cheb_s(j);
    return acc;
}

namespace {

// A(a) = sum_j c_j a^(k-j) (a^2+1)^j for p = sum_j c_j v^j, deg p <= k
UniPoly cleared_exponential(const UniPoly& p, int k) {
    UniPoly a = UniPoly::variable();
    UniPoly a2p1 = a * a + UniPoly::constant(Rational(1));
    UniPoly acc;
    for (int j = 0; j <= p.degree(); ++j) {
        if (p.coeff(j).is_zero()) continue;
        UniPoly term = UniPoly::constant(p.coeff(j));
        for (int i = 0; i < k - j; ++i) term = term * a;
        for (int i = 0; i < j; ++i) term = term * a2p1;
        acc = acc + term;
    }
    return acc;
}

UniPoly power_shift(int e, const Rational& tail) {
    // a^e + tail
    std::vector<Rational> c(e + 1, Rational(0));
    c[0] = tail;
    c[e] += Rational(1);
    return UniPoly(std::move(c));
}

}  // namespace

ChebIdentityReport identity_suite(int kmax) {
    ChebIdentityReport rep;
    rep.kmax = kmax;
    UniPoly v = UniPoly::variable();
    UniPoly one = UniPoly::constant(Rational(1));

    rep.recurrence_ok = true;
    for (int k = -2; k + 2 <= kmax; ++k) {
        if (cheb_s(k + 2) != v * cheb_s(k + 1) - cheb_s(k)) rep.recurrence_ok = false;
    }

    rep.bridge_ok = true;
    for (int k = 0; k <= kmax; ++k) {
        if (cheb_t(k) != cheb_s(k) - cheb_s(k - 2)) rep.bridge_ok = false;
        if (cheb_t(-k) != cheb_t(k)) rep.bridge_ok = false;
    }

    rep.partial_sum_ok = true;
    for (int k = -1; k <= kmax; ++k) {
        if ((v - UniPoly::constant(Rational(2))) * cheb_p(k) !=
            cheb_s(k + 1) - cheb_s(k) - one)
            rep.partial_sum_ok = false;
        if (k >= 0 && cheb_p(k) - cheb_p(k - 1) != cheb_s(k)) rep.partial_sum_ok = false;
    }

    rep.boundary_ok = true;
    for (int k = 0; k <= kmax; ++k) {
        Rational expect(k + 1);
        if (cheb_s(k).eval(Rational(2)) != expect) rep.boundary_ok = false;
        Rational alt = (k % 2 == 0) ? expect : -expect;
        if (cheb_s(k).eval(Rational(-2)) != alt) rep.boundary_ok = false;
        if (cheb_t(k).eval(Rational(2)) != Rational(2)) rep.boundary_ok = false;
        if (cheb_t(k).eval(Rational(-2)) != ((k % 2 == 0) ? Rational(2) : Rational(-2)))
            rep.boundary_ok = false;
    }

    rep.laurent_ok = true;
    UniPoly a = UniPoly::variable();
    UniPoly a2m1 = a * a - one;
    for (int k = 0; k <= kmax; ++k) {
        UniPoly A = cleared_exponential(cheb_s(k), k);
        if (a2m1 * A != power_shift(2 * k + 2, Rational(-1))) rep.laurent_ok = false;
        UniPoly B = cleared_exponential(cheb_t(k), k);
        if (B != power_shift(2 * k, Rational(1))) rep.laurent_ok = false;
    }

    return rep;
}

bool separability_check(int kmax) {
    for (int k = 1; k <= kmax; ++k) {
        UniPoly g = uni_gcd(cheb_s(k), cheb_s(k).derivative());
        if (g.degree() != 0) return false;
    }
    return true;
}

ParitySplit parity_split(int n) {
    if (n < 1) throw error("parity split needs n >= 1");
    UniPoly s1 = cheb_s(n - 1);
    UniPoly s2 = cheb_s(n - 2);
    UniPoly one = UniPoly::constant(Rational(1));
    ParitySplit out;
    out.odd_factor = uni_gcd(s1, s2 - one);
    out.even_factor = uni_gcd(s1, s2 + one);
    if (out.odd_factor * out.even_factor != s1.monic())
        throw product_mismatch("parity factors do not multiply back to S(n-1) at n = " +
                               std::to_string(n));
    return out;
}

}
