#include "charvar/replab.hpp"

#include <sstream>

#include "charvar/groebner.hpp"
#include "charvar/linkcheck.hpp"

namespace charvar {

void Word::reduce() {
    std::vector<std::pair<int, int>> out;
    for (const auto& [g, e] : syl) {
        if (e == 0) continue;
        if (!out.empty() && out.back().first == g) {
            out.back().second += e;
            if (out.back().second == 0) out.pop_back();
        } else {
            out.push_back({g, e});
        }
    }
    syl = std::move(out);
}

Word Word::parse(const std::string& text, const std::vector<std::string>& gens) {
    std::vector<std::pair<int, int>> syl;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::string name = tok;
        int e = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            e = std::stoi(tok.substr(caret + 1));
        }
        int g = -1;
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == name) g = static_cast<int>(i);
        if (g < 0) throw error("unknown generator " + name);
        syl.push_back({g, e});
    }
    return Word(std::move(syl));
}

Word Word::operator*(const Word& o) const {
    std::vector<std::pair<int, int>> s = syl;
    s.insert(s.end(), o.syl.begin(), o.syl.end());
    return Word(std::move(s));
}

Word Word::inverse() const {
    std::vector<std::pair<int, int>> s;
    for (auto it = syl.rbegin(); it != syl.rend(); ++it) s.push_back({it->first, -it->second});
    return Word(std::move(s));
}

Word Word::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Word acc;
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

size_t Word::length() const {
    size_t n = 0;
    for (const auto& [g, e] : syl) n += static_cast<size_t>(e < 0 ? -e : e);
    return n;
}

std::string Word::str(const std::vector<std::string>& gens) const {
    if (syl.empty()) return "1";
    std::string out;
    for (const auto& [g, e] : syl) {
        if (!out.empty()) out += ' ';
        out += gens.at(g);
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

static const std::vector<std::string> kMMu = {"m", "mu"};
static const std::vector<std::string> kAB = {"a", "b"};

Word whitehead_w() { return Word::parse("mu m mu^-1 m^-1 mu^-1 m mu", kMMu); }

Word whitehead_relator() {
    Word m = Word::parse("m", kMMu), mu = Word::parse("mu", kMMu), w = whitehead_w();
    return m * w * mu.inverse() * w.inverse();
}

Word twisted_omega(int n) {
    if (n < 1) throw error("omega is defined for n >= 1");
    Word left = Word::parse("mu m mu^-1 m^-1", kMMu);
    Word right = Word::parse("m^-1 mu^-1 m mu", kMMu);
    return left.pow(n) * Word::parse("m", kMMu) * right.pow(n);
}

Word twisted_relator(int n) {
    Word m = Word::parse("m", kMMu), omega = twisted_omega(n);
    return m * omega * m.inverse() * omega.inverse();
}

Word surgery_relator() { return Word::parse("b a^-3 b a b^-2 a^3 b^-1 a^-1 b", kAB); }
Word peripheral_mu() { return Word::parse("a^-2 b", kAB); }
Word peripheral_lambda() { return Word::parse("a^-2 b a b^-2 a b", kAB); }
Word peripheral_m() { return Word::parse("b^-1 a", kAB); }
Word peripheral_ell() { return Word::parse("b^-1 a b^-1 a b a^-3 b a", kAB); }

nlohmann::ordered_json CensusReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["p"] = p;
    j["tested"] = tested;
    j["relator_holds"] = relator_holds;
    j["violations"] = violations;
    return j;
}

static bool is_odd_prime(int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

CensusReport relator_oracle(int n, int64_t p) {
    if (n < 1) throw error("census needs n >= 1");
    if (!is_odd_prime(p)) throw error("census modulus must be an odd prime");
    if (p > kCensusPrimeCap) throw error("census modulus exceeds the cap");

    auto F = family_polys(n);
    UniPoly s = cheb_s(n - 1);
    Word omega = twisted_omega(n);
    FpElem one(1, p);

    CensusReport R;
    R.n = n;
    R.p = p;
    for (int64_t s1 = 1; s1 < p; ++s1) {
        for (int64_t s2 = 1; s2 < p; ++s2) {
            for (int64_t u = 0; u < p; ++u) {
                RileyParams<FpElem> pr{FpElem(s1, p), FpElem(s2, p), FpElem(u, p)};
                Mat2<FpElem> A = riley_a(pr, one), B = riley_b(pr, one);
                Mat2<FpElem> W = eval_word(omega, {A, B}, one);
                ++R.tested;
                if (A * W != W * A) continue;
                ++R.relator_holds;
                if (u == 0) continue;
                TraceTuple<FpElem> t = traces(pr);
                FpElem fval = eval_fp(F.f_n, {t.x, t.y, t.z, t.v}, p);
                FpElem sval(0, p);
                for (int i = s.degree(); i >= 0; --i)
                    sval = sval * t.v + FpElem::from_rational(s.coeff(i), p);
                if (!(fval * sval).is_zero()) {
                    ++R.violations;
                    throw violation("census violation at n=" + std::to_string(n) +
                                    ", p=" + std::to_string(p) + ", (s1,s2,u)=(" +
                                    std::to_string(s1) + "," + std::to_string(s2) + "," +
                                    std::to_string(u) + ")");
                }
            }
        }
    }
    return R;
}

nlohmann::ordered_json Order3Report::to_json() const {
    nlohmann::ordered_json j;
    j["samples"] = samples;
    j["seed"] = seed;
    j["symbolic_ok"] = symbolic_ok;
    j["sampled_ok"] = sampled_ok;
    j["counterexample_rejected"] = counterexample_rejected;
    j["pass"] = pass();
    return j;
}

Mat2<Rational> random_order3(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-9, 9);
    for (;;) {
        Rational a(coef(rng)), b(coef(rng)), c(coef(rng)), d(coef(rng));
        Rational det = a * d - b * c;
        if (det.is_zero()) continue;
        // P C P^{-1} for the companion matrix C of t^2 + t + 1
        Mat2<Rational> P{a, b, c, d};
        Mat2<Rational> C{Rational(0), Rational(1), Rational(-1), Rational(-1)};
        Mat2<Rational> Pinv{d * det.inv(), -b * det.inv(), -c * det.inv(), a * det.inv()};
        return P * C * Pinv;
    }
}

Order3Report order3_suite(int64_t samples, uint64_t seed) {
    if (samples < 1) throw error("need at least one sample");
    Order3Report R;
    R.samples = samples;
    R.seed = seed;

    // symbolic: entries are indeterminates with trace -1 built in, reduced
    // modulo the determinant relation
    {
        std::vector<std::string> vars = {"a11", "a12", "a21"};
        QPoly t = qvar(vars, "a11"), bq = qvar(vars, "a12"), cq = qvar(vars, "a21");
        QPoly one = qconst(vars, 1);
        Mat2<QPoly> A{t, bq, cq, -one - t};
        QPoly detrel = A.det() - one;
        auto G = buchberger(IdealBasis<Rational>{{detrel}, MonomialOrder::grevlex(3)});
        auto reduces_to = [&](const Mat2<QPoly>& M, const Mat2<QPoly>& want) {
            return normal_form(M.a11 - want.a11, G).is_zero() &&
                   normal_form(M.a12 - want.a12, G).is_zero() &&
                   normal_form(M.a21 - want.a21, G).is_zero() &&
                   normal_form(M.a22 - want.a22, G).is_zero();
        };
        Mat2<QPoly> I = Mat2<QPoly>::identity(one);
        Mat2<QPoly> minus_a_minus_i{-A.a11 - one, -A.a12, -A.a21, -A.a22 - one};
        R.symbolic_ok = reduces_to(A * A, minus_a_minus_i) && reduces_to(A * A * A, I);
    }

    std::mt19937_64 rng(seed);
    Rational one(1);
    Mat2<Rational> I = Mat2<Rational>::identity(one);
    R.sampled_ok = true;
    for (int64_t i = 0; i < samples; ++i) {
        Mat2<Rational> A = random_order3(rng);
        if (A.trace() != Rational(-1) || A.det() != one || A * A * A != I) {
            R.sampled_ok = false;
            throw identity_failure("sampled matrix is not of order 3");
        }
    }

    Mat2<Rational> U{Rational(1), Rational(1), Rational(0), Rational(1)};
    R.counterexample_rejected = (U * U * U != I);
    return R;
}

nlohmann::ordered_json PeripheralReport::to_json() const {
    nlohmann::ordered_json j;
    j["samples"] = samples;
    j["seed"] = seed;
    j["order3_ok"] = order3_ok;
    j["relator_ok"] = relator_ok;
    j["meridian_cube_ok"] = meridian_cube_ok;
    j["mu_cube_ok"] = mu_cube_ok;
    j["distinct_ab_traces"] = distinct_ab_traces;
    j["pass"] = pass;
    return j;
}

PeripheralReport whitehead_peripheral_check(int64_t samples, uint64_t seed) {
    if (samples < 1) throw error("need at least one sample");
    PeripheralReport R;
    R.samples = samples;
    R.seed = seed;
    std::mt19937_64 rng(seed);
    Rational one(1);
    Mat2<Rational> I = Mat2<Rational>::identity(one);
    Word rel = surgery_relator();
    Word mp = peripheral_m(), ell = peripheral_ell();
    Word mup = peripheral_mu(), lam = peripheral_lambda();
    std::vector<Rational> ab_traces;

    for (int64_t i = 0; i < samples; ++i) {
        Mat2<Rational> A = random_order3(rng);
        Mat2<Rational> B = (i == 1) ? A : random_order3(rng);  // one abelian-image pair
        std::vector<Mat2<Rational>> assign = {A, B};
        bool cube = (A * A * A == I) && (B * B * B == I);
        bool relok = eval_word(rel, assign, one) == I;
        Mat2<Rational> m3 = eval_word(mp, assign, one).pow(3, one);
        bool mok = m3 == eval_word(ell, assign, one);
        Mat2<Rational> mu3 = eval_word(mup, assign, one).pow(3, one);
        bool muok = mu3 == eval_word(lam, assign, one);
        if (!(cube && relok && mok && muok))
            throw identity_failure("peripheral identities failed for sample " + std::to_string(i));
        R.order3_ok += cube;
        R.relator_ok += relok;
        R.meridian_cube_ok += mok;
        R.mu_cube_ok += muok;
        Rational tab = (A * B).trace();
        bool seen = false;
        for (const auto& t : ab_traces) seen = seen || t == tab;
        if (!seen) ab_traces.push_back(tab);
    }
    R.distinct_ab_traces = static_cast<int64_t>(ab_traces.size());
    R.pass = R.order3_ok == samples && R.relator_ok == samples &&
             R.meridian_cube_ok == samples && R.mu_cube_ok == samples;
    return R;
}

}
