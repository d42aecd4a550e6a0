#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "charvar/linkcheck.hpp"
#include "charvar/zpn.hpp"

namespace charvar {

// Finite-field point census for the curve f_n = 0 over F_p, with the flags
// that decide whether the torsion Taylor expansion is worth computing there.

struct FpPoint {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    int n = 1;
    std::int64_t p = 0;

    bool on_geometric = false;   // f_n(a,b,c) = 0
    bool nonacyclic = false;     // tau_n(a,b,c) = 0
    bool abs_irreducible = false;  // x^2+y^2+z^2-xyz-4 nonzero at the point
    bool dz_nonzero = false;     // d/dz f_n nonzero at the point

    bool in_study_set() const {
        return on_geometric && nonacyclic && abs_irreducible && dz_nonzero;
    }

    bool operator==(const FpPoint& o) const {
        return a == o.a && b == o.b && c == o.c && n == o.n && p == o.p;
    }
    bool operator<(const FpPoint& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }

    nlohmann::ordered_json to_json() const;
};

// Enumerating F_p^3 is only sane for small p; refuse anything bigger.
inline constexpr std::int64_t kPointEnumCap = 1500000;

// All points of f_n = 0 in F_p^3, each annotated with the flags above,
// sorted by (a, b, c).  Throws cap_exceeded when p^3 > kPointEnumCap.
std::vector<FpPoint> find_points(int n, std::int64_t p);

// Truncated bivariate power series over Z/p^N, centered at integer lifts
// (a, b) of the first two coordinates of a point.  Terms of total degree
// above D are dropped by every operation.
class PSeries2 {
  public:
    // empty shell so reports can hold a series by value; not a usable ring element
    PSeries2() : p_(0), prec_(0), deg_(0), a_(0), b_(0) {}
    PSeries2(std::int64_t p, int prec, int deg, std::int64_t a, std::int64_t b);

    static PSeries2 constant(const ZpnElem& c0, int deg, std::int64_t a,
                             std::int64_t b);

    std::int64_t prime() const { return p_; }
    int precision() const { return prec_; }
    int degree() const { return deg_; }
    std::int64_t center_a() const { return a_; }
    std::int64_t center_b() const { return b_; }

    ZpnElem coeff(int i, int j) const;
    void set_coeff(int i, int j, const ZpnElem& c);

    PSeries2 operator+(const PSeries2& o) const;
    PSeries2 operator-(const PSeries2& o) const;
    PSeries2 operator*(const PSeries2& o) const;
    PSeries2 operator-() const;
    PSeries2& operator+=(const PSeries2& o) { *this = *this + o; return *this; }
    PSeries2& operator-=(const PSeries2& o) { *this = *this - o; return *this; }
    PSeries2& operator*=(const PSeries2& o) { *this = *this * o; return *this; }

    bool operator==(const PSeries2& o) const;
    bool operator!=(const PSeries2& o) const { return !(*this == o); }

    // Multiplicative inverse; requires the constant term to be a unit.
    PSeries2 inverse() const;

    // Lower the precision or the degree, keeping canonical residues.
    PSeries2 truncate(int prec, int deg) const;

    bool is_zero() const { return t_.empty(); }

    nlohmann::ordered_json to_json() const;

  private:
    void check_compatible(const PSeries2& o) const;

    std::int64_t p_;
    int prec_;
    int deg_;
    std::int64_t a_;
    std::int64_t b_;
    std::map<std::pair<int, int>, ZpnElem> t_;
};

// Newton engine behind the implicit lifts: solve f = 0 (f a polynomial in
// x, y, z) for the coordinate solve_for (0 = x, 1 = y, 2 = z) through the
// residual point `center`, whose entries are canonical lifts in [0, p).
// The two remaining coordinates become the series variables.  The residual
// f(series args) is recomputed from scratch on exit and must vanish
// identically; a non-unit derivative at the center raises newton_stall.
PSeries2 newton_lift(const QPoly& f, std::int64_t p,
                     const std::array<std::int64_t, 3>& center, int prec,
                     int deg, int solve_for = 2);

// Same, for the curve f_n = 0 through an enumerated point.
PSeries2 hensel_implicit(const FpPoint& pt, int prec, int deg,
                         int solve_for = 2);

struct LReport {
    FpPoint point;
    PSeries2 L;
    std::string solved_for;      // which coordinate the lift solved for
    std::int64_t const_val = 0;  // mod-p residues of the low Taylor terms
    std::int64_t lin_x = 0;      // coefficient of the first series variable
    std::int64_t lin_y = 0;      // coefficient of the second
    int quad_rank = 0;           // rank of the degree-2 Gram matrix mod p
    std::string verdict;         // "pass", "fail" or "not-applicable"
    bool monotonic = false;      // higher-precision recompute truncates back

    nlohmann::ordered_json to_json() const;
};

// Torsion Taylor expansion along the lifted branch through pt.
// Acyclic points get verdict "not-applicable" (unit constant term);
// study-set points must have const and linear terms zero mod p to pass.
// Points with d/dz f_n = 0 are handled by solving for another coordinate
// when some other partial is nonzero; the choice lands in solved_for.
LReport l_function(const FpPoint& pt, int prec = 8, int deg = 4);

struct SurveyReport {
    int n = 1;
    std::int64_t p = 0;
    int prec = 8;
    int deg = 4;

    std::int64_t points_on_component = 0;
    std::int64_t study_set_size = 0;
    std::int64_t excluded_acyclic = 0;      // tau_n != 0
    std::int64_t excluded_reducible = 0;    // reducible locus
    std::int64_t excluded_dz_zero = 0;      // d/dz f_n = 0, among study candidates
    std::int64_t permuted_lifts = 0;        // rescued by solving for x or y
    std::int64_t singular_points = 0;       // all three partials vanish

    std::vector<LReport> reports;  // study set plus permuted rescues, sorted
    bool all_pass = false;

    nlohmann::ordered_json to_json() const;
};

SurveyReport l_survey(int n, std::int64_t p, int prec = 8, int deg = 4);

}  // namespace charvar
