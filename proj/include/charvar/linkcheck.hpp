#ifndef CHARVAR_LINKCHECK_HPP
#define CHARVAR_LINKCHECK_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charvar/chebfam.hpp"
#include "charvar/groebner.hpp"
#include "charvar/report.hpp"

namespace charvar {

// Canonical variable universes. The trace coordinates are x, y, z; v names
// the commutator trace and equals x^2+y^2+z^2-xyz-2 under trace_rel.
extern const std::vector<std::string> kXYZV;
extern const std::vector<std::string> kXYZ;

struct FamilyPolys {
    int n = 0;
    QPoly f_n;        // xy S(n-1) - (xy-z) S(n-2) - z S(n), over (x,y,z,v)
    QPoly tau_n;      // (2-x-y+z) S(n-1) + (4-2x-2y+xy) P(n-2)
    QPoly trace_rel;  // x^2+y^2+z^2-xyz-2-v
    QPoly reducible;  // x^2+y^2+z^2-xyz-4, over (x,y,z)
    QPoly f_exp;      // f_n with v expanded, over (x,y,z)
    QPoly tau_exp;    // tau_n with v expanded
};

FamilyPolys family_polys(int n);

// Replayable piece of evidence inside a certificate. `data` holds serialized
// polynomials and values; replay() recomputes the claim from data alone.
struct Evidence {
    std::string kind;
    std::string description;
    nlohmann::ordered_json data;

    bool replay() const;
    nlohmann::ordered_json to_json() const;
};

struct Certificate {
    std::string check;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    std::vector<QPoly> component_ideal;
    int claimed_multiplicity = 0;
    std::vector<Evidence> evidence;
    nlohmann::ordered_json notes = nlohmann::ordered_json::object();

    // replays every evidence entry from its serialized data
    bool verify() const;
    nlohmann::ordered_json to_json() const;
};

// The z = x+y-2 substitution identity, reducible-locus witnesses, membership
// of the half-torsion in the line ideal, and the rank-2 Jacobian of the line.
Certificate whitehead_divisor_check();

struct SmoothReport {
    int n = 0;
    bool q_system_trivial = false;
    // per branch modulus of each parity factor: is the singular system empty
    std::vector<std::pair<UniPoly, bool>> parity_branches;
    bool pass = false;
    nlohmann::ordered_json to_json() const;
};

// The trace relation, the family member, and its chain-rule gradient, over
// (x, y, z, v); the report below asks whether this system has solutions.
std::vector<QPoly> smoothness_system(int n);

SmoothReport smoothness_report(int n, const GBOptions& opt = {});
inline bool smoothness_check(int n, const GBOptions& opt = {}) {
    return smoothness_report(n, opt).pass;
}

struct NongeoReport {
    int n = 0;
    UniPoly g_odd, g_even;
    bool even_reduction_ok = false;  // tau_n = 0 mod g_even
    bool odd_reduction_ok = false;   // (2-v) tau_n = 2(2-x)(2-y) mod g_odd
    bool line_identity_ok = false;   // trace_rel at x=2 equals (y-z)^2 - (v-2)
    int line_jacobian_rank = 0;
    bool pass = false;
    nlohmann::ordered_json to_json() const;
};

NongeoReport nongeometric_check(int n);

// Saturated-ideal equality with the cleared forms of the three generators
// from the localized derivation, plus the minor-based transversality witness.
Certificate geometric_mult_check(int n, const GBOptions& opt = {});

struct DiagonalReport {
    std::vector<QPoly> computed;  // reduced generators after eliminating z
    QPoly expected;               // x (x-2) (x+y-1) (x-y-1), monic
    bool principal_match = false;
    bool radical_match = false;
    bool membership_ok = false;
    bool line_factor_ok = false;
    bool diag_point_ok = false;
    bool pass = false;
    nlohmann::ordered_json to_json() const;
};

DiagonalReport diagonal_elimination_check(const GBOptions& opt = {});

// Transport of a polynomial in (x,y,z,v) to coefficients in Q[v]/(mod),
// remaining variables (x,y,z).
MultiPoly<QuotElem> to_quot_poly(const QPoly& p, std::shared_ptr<const UniPoly> mod);

}

#endif
