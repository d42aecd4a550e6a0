#include "charvar/lseries.hpp"

#include <algorithm>
#include <future>

#include "charvar/fp.hpp"

namespace charvar {

namespace {

bool odd_prime64(std::int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::vector<FpElem> fp_point(const FpPoint& pt) {
    return {FpElem(pt.a, pt.p), FpElem(pt.b, pt.p), FpElem(pt.c, pt.p)};
}

// Bookkeeping for one implicit lift: which coordinate is solved for, which
// two remain free (in original order), and the integer lifts of the center.
struct LiftFrame {
    int solve_for;
    int free1, free2;
    std::int64_t p;
    std::int64_t a0, b0, c0;
};

LiftFrame make_frame(std::int64_t p, const std::array<std::int64_t, 3>& coords,
                     int solve_for) {
    if (solve_for < 0 || solve_for > 2)
        throw error("solve_for must name one of the three coordinates");
    LiftFrame fr;
    fr.solve_for = solve_for;
    fr.free1 = solve_for == 0 ? 1 : 0;
    fr.free2 = solve_for == 2 ? 1 : 2;
    fr.p = p;
    fr.a0 = coords[static_cast<size_t>(fr.free1)];
    fr.b0 = coords[static_cast<size_t>(fr.free2)];
    fr.c0 = coords[static_cast<size_t>(fr.solve_for)];
    return fr;
}

// The two coordinate series a0 + u and b0 + v at the requested truncation.
PSeries2 free_series(const LiftFrame& fr, int prec, int deg, int which) {
    PSeries2 s(fr.p, prec, deg, fr.a0, fr.b0);
    ZpnElem one(1, fr.p, prec);
    if (which == 0) {
        s.set_coeff(0, 0, ZpnElem(fr.a0, fr.p, prec));
        if (deg >= 1) s.set_coeff(1, 0, one);
    } else {
        s.set_coeff(0, 0, ZpnElem(fr.b0, fr.p, prec));
        if (deg >= 1) s.set_coeff(0, 1, one);
    }
    return s;
}

std::vector<PSeries2> frame_args(const LiftFrame& fr, int prec, int deg,
                                 const PSeries2& w) {
    std::vector<PSeries2> args(3, w);
    args[fr.free1] = free_series(fr, prec, deg, 0);
    args[fr.free2] = free_series(fr, prec, deg, 1);
    args[fr.solve_for] = w;
    return args;
}

PSeries2 series_eval(const QPoly& q, const LiftFrame& fr, int prec, int deg,
                     const std::vector<PSeries2>& args) {
    PSeries2 one = PSeries2::constant(ZpnElem(1, fr.p, prec), deg, fr.a0, fr.b0);
    auto embed = [&](const Rational& c) {
        return PSeries2::constant(ZpnElem::from_rational(c, fr.p, prec), deg,
                                  fr.a0, fr.b0);
    };
    return q.evaluate<PSeries2>(args, embed, one);
}

}  // namespace

nlohmann::ordered_json FpPoint::to_json() const {
    nlohmann::ordered_json j;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["n"] = n;
    j["p"] = p;
    j["on_geometric"] = on_geometric;
    j["nonacyclic"] = nonacyclic;
    j["abs_irreducible"] = abs_irreducible;
    j["dz_nonzero"] = dz_nonzero;
    j["in_study_set"] = in_study_set();
    return j;
}

std::vector<FpPoint> find_points(int n, std::int64_t p) {
    if (n < 1) throw error("family index starts at 1");
    if (!odd_prime64(p)) throw error("census modulus must be an odd prime");
    if (p * p * p > kPointEnumCap)
        throw cap_exceeded("point enumeration over F_" + std::to_string(p) +
                           " exceeds the cap");

    FamilyPolys F = family_polys(n);
    QPoly dz = F.f_exp.derivative("z");

    std::vector<FpPoint> out;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c) {
                std::vector<FpElem> P = {FpElem(a, p), FpElem(b, p),
                                         FpElem(c, p)};
                if (!eval_fp(F.f_exp, P, p).is_zero()) continue;
                FpPoint pt;
                pt.a = a;
                pt.b = b;
                pt.c = c;
                pt.n = n;
                pt.p = p;
                pt.on_geometric = true;
                pt.nonacyclic = eval_fp(F.tau_exp, P, p).is_zero();
                pt.abs_irreducible = !eval_fp(F.reducible, P, p).is_zero();
                pt.dz_nonzero = !eval_fp(dz, P, p).is_zero();
                out.push_back(pt);
            }
    return out;
}

PSeries2::PSeries2(std::int64_t p, int prec, int deg, std::int64_t a,
                   std::int64_t b)
    : p_(p), prec_(prec), deg_(deg), a_(a), b_(b) {
    if (!odd_prime64(p)) throw error("series modulus must be an odd prime");
    if (prec < 1) throw error("series needs precision at least 1");
    if (deg < 0) throw error("series needs a nonnegative truncation degree");
}

PSeries2 PSeries2::constant(const ZpnElem& c0, int deg, std::int64_t a,
                            std::int64_t b) {
    PSeries2 s(c0.p(), c0.precision(), deg, a, b);
    if (!c0.is_zero()) s.t_[{0, 0}] = c0;
    return s;
}

ZpnElem PSeries2::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    if (it != t_.end()) return it->second;
    return ZpnElem(0, p_, prec_);
}

void PSeries2::set_coeff(int i, int j, const ZpnElem& c) {
    if (i < 0 || j < 0 || i + j > deg_)
        throw error("series coefficient index out of range");
    if (c.p() != p_ || c.precision() != prec_)
        throw mixed_rings("coefficient ring does not match the series");
    if (c.is_zero())
        t_.erase({i, j});
    else
        t_[{i, j}] = c;
}

void PSeries2::check_compatible(const PSeries2& o) const {
    if (p_ != o.p_ || prec_ != o.prec_ || deg_ != o.deg_ || a_ != o.a_ ||
        b_ != o.b_)
        throw mixed_rings("series rings differ");
}

PSeries2 PSeries2::operator+(const PSeries2& o) const {
    check_compatible(o);
    PSeries2 r = *this;
    for (const auto& [k, c] : o.t_) {
        auto it = r.t_.find(k);
        if (it == r.t_.end()) {
            r.t_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.t_.erase(it);
        }
    }
    return r;
}

PSeries2 PSeries2::operator-() const {
    PSeries2 r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

PSeries2 PSeries2::operator-(const PSeries2& o) const { return *this + (-o); }

PSeries2 PSeries2::operator*(const PSeries2& o) const {
    check_compatible(o);
    PSeries2 r(p_, prec_, deg_, a_, b_);
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            int i = ka.first + kb.first;
            int j = ka.second + kb.second;
            if (i + j > deg_) continue;
            ZpnElem prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.t_.find({i, j});
            if (it == r.t_.end()) {
                r.t_[{i, j}] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

bool PSeries2::operator==(const PSeries2& o) const {
    return p_ == o.p_ && prec_ == o.prec_ && deg_ == o.deg_ && a_ == o.a_ &&
           b_ == o.b_ && t_ == o.t_;
}

PSeries2 PSeries2::inverse() const {
    ZpnElem u0 = coeff(0, 0);
    ZpnElem u0i = u0.inv();
    PSeries2 g(p_, prec_, deg_, a_, b_);
    g.set_coeff(0, 0, u0i);
    for (int d = 1; d <= deg_; ++d)
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            ZpnElem s(0, p_, prec_);
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l) {
                    if (k == 0 && l == 0) continue;
                    ZpnElem u = coeff(k, l);
                    if (u.is_zero()) continue;
                    s += u * g.coeff(i - k, j - l);
                }
            ZpnElem gij = -(u0i * s);
            if (!gij.is_zero()) g.set_coeff(i, j, gij);
        }
    return g;
}

PSeries2 PSeries2::truncate(int prec, int deg) const {
    if (prec > prec_ || deg > deg_)
        throw error("series truncation cannot raise precision or degree");
    PSeries2 r(p_, prec, deg, a_, b_);
    for (const auto& [k, c] : t_) {
        if (k.first + k.second > deg) continue;
        ZpnElem ct = c.truncate(prec);
        if (!ct.is_zero()) r.t_[k] = ct;
    }
    return r;
}

nlohmann::ordered_json PSeries2::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p_;
    j["precision"] = prec_;
    j["degree"] = deg_;
    j["center"] = {a_, b_};
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& [k, c] : t_) {
        nlohmann::ordered_json e;
        e["i"] = k.first;
        e["j"] = k.second;
        e["c"] = c.str();
        cs.push_back(e);
    }
    j["coeffs"] = cs;
    return j;
}

PSeries2 newton_lift(const QPoly& f, std::int64_t p,
                     const std::array<std::int64_t, 3>& center, int prec,
                     int deg, int solve_for) {
    if (prec < 1) throw error("lift needs precision at least 1");
    if (deg < 0) throw error("lift needs a nonnegative truncation degree");
    if (!odd_prime64(p)) throw error("lift modulus must be an odd prime");
    LiftFrame fr = make_frame(p, center, solve_for);

    std::vector<FpElem> P = {FpElem(center[0], p), FpElem(center[1], p),
                             FpElem(center[2], p)};
    if (!eval_fp(f, P, p).is_zero())
        throw error("lift center does not lie on the curve");
    QPoly fprime = f.derivative(kXYZ[static_cast<size_t>(solve_for)]);
    if (eval_fp(fprime, P, p).is_zero())
        throw newton_stall("chosen partial derivative vanishes at the center");

    // Each correction squares the error ideal (p, u, v), so p-adic and degree
    // accuracy both double per pass; enough passes cover the whole window.
    int steps = 1;
    while ((std::int64_t{1} << steps) < prec + deg + 1) ++steps;

    PSeries2 w = PSeries2::constant(ZpnElem(fr.c0, p, prec), deg, fr.a0, fr.b0);
    for (int k = 0; k < steps; ++k) {
        auto args = frame_args(fr, prec, deg, w);
        PSeries2 fval = series_eval(f, fr, prec, deg, args);
        PSeries2 dval = series_eval(fprime, fr, prec, deg, args);
        PSeries2 dinv = [&] {
            try {
                return dval.inverse();
            } catch (const not_a_unit&) {
                throw newton_stall("derivative became a non-unit during lifting");
            }
        }();
        w = w - fval * dinv;
    }

    // the defect is recomputed from scratch, not trusted from the iteration
    auto args = frame_args(fr, prec, deg, w);
    if (!series_eval(f, fr, prec, deg, args).is_zero())
        throw identity_failure("implicit lift leaves a nonzero defect");
    return w;
}

PSeries2 hensel_implicit(const FpPoint& pt, int prec, int deg, int solve_for) {
    FamilyPolys F = family_polys(pt.n);
    return newton_lift(F.f_exp, pt.p, {pt.a, pt.b, pt.c}, prec, deg, solve_for);
}

nlohmann::ordered_json LReport::to_json() const {
    nlohmann::ordered_json j;
    j["point"] = point.to_json();
    j["solved_for"] = solved_for;
    j["L"] = L.to_json();
    nlohmann::ordered_json tab = nlohmann::ordered_json::array();
    for (int d = 0; d <= L.degree(); ++d)
        for (int i = d; i >= 0; --i) {
            nlohmann::ordered_json e;
            e["i"] = i;
            e["j"] = d - i;
            e["c"] = L.coeff(i, d - i).mod_p();
            tab.push_back(e);
        }
    j["taylor_mod_p"] = tab;
    j["const"] = const_val;
    j["lin_x"] = lin_x;
    j["lin_y"] = lin_y;
    j["quad_rank"] = quad_rank;
    j["verdict"] = verdict;
    j["monotonic"] = monotonic;
    return j;
}

LReport l_function(const FpPoint& pt, int prec, int deg) {
    if (!pt.on_geometric)
        throw error("torsion expansion requires a point on the curve");
    FamilyPolys F = family_polys(pt.n);
    std::vector<FpElem> P = fp_point(pt);

    int solve_for = -1;
    for (int k : {2, 1, 0}) {
        QPoly d = F.f_exp.derivative(kXYZ[static_cast<size_t>(k)]);
        if (!eval_fp(d, P, pt.p).is_zero()) {
            solve_for = k;
            break;
        }
    }
    if (solve_for < 0)
        throw newton_stall("every partial derivative vanishes at the point");

    PSeries2 w = hensel_implicit(pt, prec, deg, solve_for);
    PSeries2 w2 = hensel_implicit(pt, prec + 1, deg + 1, solve_for);
    if (w2.truncate(prec, deg) != w)
        throw identity_failure("lift changes under a finer truncation");

    LiftFrame fr = make_frame(pt.p, {pt.a, pt.b, pt.c}, solve_for);
    auto args = frame_args(fr, prec, deg, w);
    LReport rep;
    rep.point = pt;
    rep.L = series_eval(F.tau_exp, fr, prec, deg, args);
    rep.solved_for = kXYZ[static_cast<size_t>(solve_for)];
    rep.monotonic = true;

    const std::int64_t p = pt.p;
    rep.const_val = rep.L.coeff(0, 0).mod_p();
    rep.lin_x = rep.L.coeff(1, 0).mod_p();
    rep.lin_y = rep.L.coeff(0, 1).mod_p();

    std::int64_t g11 = 2 * rep.L.coeff(2, 0).mod_p() % p;
    std::int64_t g12 = rep.L.coeff(1, 1).mod_p();
    std::int64_t g22 = 2 * rep.L.coeff(0, 2).mod_p() % p;
    if (g11 == 0 && g12 == 0 && g22 == 0)
        rep.quad_rank = 0;
    else if ((g11 * g22 - g12 * g12) % p != 0)
        rep.quad_rank = 2;
    else
        rep.quad_rank = 1;

    if (!pt.nonacyclic)
        rep.verdict = "not-applicable";
    else if (rep.const_val == 0 && rep.lin_x == 0 && rep.lin_y == 0)
        rep.verdict = "pass";
    else
        rep.verdict = "fail";
    return rep;
}

nlohmann::ordered_json SurveyReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["p"] = p;
    j["precision"] = prec;
    j["degree"] = deg;
    j["points_on_component"] = points_on_component;
    j["study_set_size"] = study_set_size;
    j["excluded_acyclic"] = excluded_acyclic;
    j["excluded_reducible"] = excluded_reducible;
    j["excluded_dz_zero"] = excluded_dz_zero;
    j["permuted_lifts"] = permuted_lifts;
    j["singular_points"] = singular_points;
    j["all_pass"] = all_pass;
    nlohmann::ordered_json rs = nlohmann::ordered_json::array();
    for (const auto& r : reports) rs.push_back(r.to_json());
    j["reports"] = rs;
    return j;
}

SurveyReport l_survey(int n, std::int64_t p, int prec, int deg) {
    SurveyReport S;
    S.n = n;
    S.p = p;
    S.prec = prec;
    S.deg = deg;

    std::vector<FpPoint> pts = find_points(n, p);
    S.points_on_component = static_cast<std::int64_t>(pts.size());

    FamilyPolys F = family_polys(n);
    QPoly dx = F.f_exp.derivative("x");
    QPoly dy = F.f_exp.derivative("y");

    std::vector<FpPoint> work;
    for (const FpPoint& pt : pts) {
        if (!pt.nonacyclic) {
            ++S.excluded_acyclic;
            continue;
        }
        if (!pt.abs_irreducible) {
            ++S.excluded_reducible;
            continue;
        }
        if (pt.dz_nonzero) {
            ++S.study_set_size;
            work.push_back(pt);
            continue;
        }
        ++S.excluded_dz_zero;
        std::vector<FpElem> P = fp_point(pt);
        if (!eval_fp(dx, P, p).is_zero() || !eval_fp(dy, P, p).is_zero()) {
            ++S.permuted_lifts;
            work.push_back(pt);
        } else {
            ++S.singular_points;
        }
    }

    // contiguous slices keep the merge order equal to the sorted point order
    const size_t slice = 16;
    std::vector<std::future<std::vector<LReport>>> futs;
    for (size_t lo = 0; lo < work.size(); lo += slice) {
        size_t hi = std::min(lo + slice, work.size());
        futs.push_back(std::async(std::launch::async, [&work, lo, hi, prec,
                                                       deg] {
            std::vector<LReport> part;
            for (size_t i = lo; i < hi; ++i)
                part.push_back(l_function(work[i], prec, deg));
            return part;
        }));
    }
    for (auto& f : futs) {
        std::vector<LReport> part = f.get();
        for (auto& r : part) S.reports.push_back(std::move(r));
    }

    S.all_pass = !S.reports.empty();
    for (const auto& r : S.reports)
        if (r.verdict != "pass") S.all_pass = false;
    return S;
}

}  // namespace charvar
