#ifndef CHARVAR_REPLAB_HPP
#define CHARVAR_REPLAB_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "charvar/chebfam.hpp"
#include "charvar/errors.hpp"
#include "charvar/fp.hpp"
#include "charvar/mpoly.hpp"
#include "charvar/rational.hpp"
#include "charvar/unipoly.hpp"

namespace charvar {

// 2x2 matrix over an exact ring. Almost every matrix here is unimodular, so
// inverse() is the adjugate; callers keep the det = 1 invariant themselves.
template <class R>
struct Mat2 {
    R a11, a12, a21, a22;

    static Mat2 identity(const R& one) {
        R zero = one - one;
        return {one, zero, zero, one};
    }

    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2 operator+(const Mat2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Mat2 operator-(const Mat2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    bool operator==(const Mat2& o) const {
        return a11 == o.a11 && a12 == o.a12 && a21 == o.a21 && a22 == o.a22;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    R trace() const { return a11 + a22; }
    R det() const { return a11 * a22 - a12 * a21; }

    // adjugate; the actual inverse exactly when det = 1
    Mat2 inverse() const { return {a22, -a12, -a21, a11}; }

    Mat2 pow(long e, const R& one) const {
        if (e < 0) return inverse().pow(-e, one);
        Mat2 acc = identity(one), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            base = base * base;
        }
        return acc;
    }
};

// Freely reduced word in abstract generators: syllables (generator, exponent)
// with nonzero exponents and distinct adjacent generators.
struct Word {
    std::vector<std::pair<int, int>> syl;

    Word() = default;
    Word(std::vector<std::pair<int, int>> s) : syl(std::move(s)) { reduce(); }

    // "b a^-3 b a b^-2 a^3 b^-1 a^-1 b" with the given generator names
    static Word parse(const std::string& text, const std::vector<std::string>& gens);

    Word operator*(const Word& o) const;
    Word inverse() const;
    Word pow(int k) const;
    bool operator==(const Word& o) const { return syl == o.syl; }
    bool empty() const { return syl.empty(); }
    size_t length() const;  // sum of |exponents|
    std::string str(const std::vector<std::string>& gens) const;

  private:
    void reduce();
};

template <class R>
Mat2<R> eval_word(const Word& w, const std::vector<Mat2<R>>& assign, const R& one) {
    Mat2<R> acc = Mat2<R>::identity(one);
    for (const auto& [g, e] : w.syl) {
        if (g < 0 || g >= static_cast<int>(assign.size()))
            throw error("word uses an unassigned generator");
        acc = acc * assign[g].pow(e, one);
    }
    return acc;
}

// named presentation words; generators are m=0, mu=1
Word whitehead_w();               // mu m mu^-1 m^-1 mu^-1 m mu
Word whitehead_relator();         // m w mu^-1 w^-1, from the relation m w = w mu
Word twisted_omega(int n);        // (mu m mu^-1 m^-1)^n m (m^-1 mu^-1 m mu)^n
Word twisted_relator(int n);      // m omega m^-1 omega^-1, from m omega = omega m
// generators a=0, b=1 of the two-bridge style presentation
Word surgery_relator();           // b a^-3 b a b^-2 a^3 b^-1 a^-1 b
Word peripheral_mu();             // a^-2 b
Word peripheral_lambda();         // a^-2 b a b^-2 a b
Word peripheral_m();              // b^-1 a
Word peripheral_ell();            // b^-1 a b^-1 a b a^-3 b a

template <class R>
struct RileyParams {
    R s1, s2, u;
};

template <class R>
struct TraceTuple {
    R x, y, z, v;
};

template <class R>
Mat2<R> riley_a(const RileyParams<R>& p, const R& one) {
    R zero = one - one;
    return {p.s1, one, zero, p.s1.inv()};
}

template <class R>
Mat2<R> riley_b(const RileyParams<R>& p, const R& one) {
    R zero = one - one;
    return {p.s2, zero, p.u, p.s2.inv()};
}

template <class R>
TraceTuple<R> traces(const RileyParams<R>& p) {
    R one = p.s1 * p.s1.inv();
    TraceTuple<R> t;
    t.x = p.s1 + p.s1.inv();
    t.y = p.s2 + p.s2.inv();
    t.z = p.s1 * p.s2 + p.s1.inv() * p.s2.inv() + p.u;
    t.v = t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z - one - one;
    return t;
}

struct CensusReport {
    int n = 0;
    int64_t p = 0;
    int64_t tested = 0;
    int64_t relator_holds = 0;
    int64_t violations = 0;
    nlohmann::ordered_json to_json() const;
};

// Exhaustive scan of Riley parameters over F_p. For every triple where the
// braid generators commute with omega and u != 0, the product f_n * S_{n-1}
// must evaluate to zero at the trace coordinates; any counterexample throws.
CensusReport relator_oracle(int n, int64_t p);

inline constexpr int64_t kCensusPrimeCap = 199;
inline constexpr uint64_t kDefaultSeed = 20260822;

struct Order3Report {
    int64_t samples = 0;
    uint64_t seed = 0;
    bool symbolic_ok = false;        // trace -1, det 1 forces A^2 = -A - I and A^3 = I
    bool sampled_ok = false;         // random rational conjugates of the companion matrix
    bool counterexample_rejected = false;  // the unipotent [[1,1],[0,1]] does not have order 3
    bool pass() const { return symbolic_ok && sampled_ok && counterexample_rejected; }
    nlohmann::ordered_json to_json() const;
};

Order3Report order3_suite(int64_t samples, uint64_t seed = kDefaultSeed);

struct PeripheralReport {
    int64_t samples = 0;
    uint64_t seed = 0;
    int64_t order3_ok = 0;          // pairs with A^3 = B^3 = I
    int64_t relator_ok = 0;         // pairs satisfying the presentation relator
    int64_t meridian_cube_ok = 0;   // eval(m')^3 = eval(ell')
    int64_t mu_cube_ok = 0;         // eval(mu')^3 = eval(lambda')
    int64_t distinct_ab_traces = 0;
    bool pass = false;
    nlohmann::ordered_json to_json() const;
};

// Sampled order-3 pairs feed the surgery presentation: the relator holds and
// both peripheral cube relations come out exact.
PeripheralReport whitehead_peripheral_check(int64_t samples, uint64_t seed = kDefaultSeed);

// a conjugate of the order-3 companion matrix by a random integer matrix
Mat2<Rational> random_order3(std::mt19937_64& rng);

enum class LongBranch { geometric, nongeometric };

template <class R>
struct LongitudeResult {
    R l_a;
    R star;
    std::string caveat;
};

inline const char* kLongitudeCaveat =
    "upstream tabulations of this longitude are inverted relative to the canonical one; "
    "values here follow the corrected convention";

// Diagonal entry and corner of the longitude image in the Riley form. The
// nongeometric branch requires S_{n-1}(v) = 0 and returns (1, 0).
template <class R, class Embed>
LongitudeResult<R> longitude_eval(const RileyParams<R>& pr, int n, LongBranch br, Embed embed) {
    R one = pr.s1 * pr.s1.inv();
    R zero = one - one;
    TraceTuple<R> t = traces(pr);
    UniPoly s = cheb_s(n - 1);
    R sval = zero;
    for (int i = s.degree(); i >= 0; --i) sval = sval * t.v + embed(s.coeff(i));
    if (br == LongBranch::nongeometric) {
        if (!sval.is_zero())
            throw error("nongeometric longitude branch requires S_{n-1}(v) = 0");
        return {one, zero, kLongitudeCaveat};
    }
    R den1 = zero - pr.s1.inv() * t.y + t.z;
    if (den1.is_zero()) throw denominator_zero("longitude denominator -s1^{-1} y + z vanishes");
    R den2 = t.x * t.y * t.z - t.y * t.y - t.z * t.z;
    if (den2.is_zero()) throw denominator_zero("longitude denominator xyz - y^2 - z^2 vanishes");
    R l_a = (pr.s1 * t.y - t.z) * den1.inv();
    R star = t.y * (t.x * t.y - t.z - t.z) * den2.inv();
    return {l_a, star, kLongitudeCaveat};
}

}

#endif
