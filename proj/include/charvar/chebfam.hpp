#ifndef CHARVAR_CHEBFAM_HPP
#define CHARVAR_CHEBFAM_HPP

#include "charvar/mpoly.hpp"
#include "charvar/unipoly.hpp"

namespace charvar {

// Second-kind recurrence family in one variable:
//   S(0) = 1, S(1) = v, S(k+2) = v*S(k+1) - S(k)
// extended to negative indices by S(-k) = -S(k-2), so S(-1) = 0, S(-2) = -1.
UniPoly cheb_s(int k);

// First-kind normalization: T(0) = 2, T(1) = v, same recurrence, T(-k) = T(k).
UniPoly cheb_t(int k);

// Partial sums P(k) = S(0) + ... + S(k); P(-1) = 0. Only k >= -1 is defined.
UniPoly cheb_p(int k);

struct ChebIdentityReport {
    int kmax = 0;
    bool recurrence_ok = false;
    bool bridge_ok = false;       // T(k) = S(k) - S(k-2), T(-k) = T(k)
    bool partial_sum_ok = false;  // (v-2)*P(k) = S(k+1) - S(k) - 1, P(k) - P(k-1) = S(k)
    bool boundary_ok = false;     // values at v = 2 and v = -2
    bool laurent_ok = false;      // cleared two-variable exponential forms
    bool all() const {
        return recurrence_ok && bridge_ok && partial_sum_ok && boundary_ok && laurent_ok;
    }
};

// Exercises the defining identities for every index up to kmax. The Laurent
// check substitutes v = a + 1/a in cleared form: with S(k) = sum c_j v^j the
// polynomial A(a) = sum c_j a^(k-j) (a^2+1)^j must satisfy
// (a^2 - 1) A = a^(2k+2) - 1, and the analogue B built from T(k) must equal
// a^(2k) + 1.
ChebIdentityReport identity_suite(int kmax);

// gcd(S(k), S(k)') = 1 for 1 <= k <= kmax.
bool separability_check(int kmax);

struct ParitySplit {
    UniPoly odd_factor;   // gcd(S(n-1), S(n-2) - 1)
    UniPoly even_factor;  // gcd(S(n-1), S(n-2) + 1)
};

// Splits monic S(n-1) into the two coprime parity factors. Throws
// product_mismatch if their product fails to reproduce monic S(n-1).
ParitySplit parity_split(int n);

// The same polynomials as elements of a multivariate ring.
inline QPoly cheb_s_poly(int k, const std::vector<std::string>& vars, const std::string& vname) {
    return QPoly::from_unipoly(cheb_s(k), vars, vname);
}
inline QPoly cheb_t_poly(int k, const std::vector<std::string>& vars, const std::string& vname) {
    return QPoly::from_unipoly(cheb_t(k), vars, vname);
}
inline QPoly cheb_p_poly(int k, const std::vector<std::string>& vars, const std::string& vname) {
    return QPoly::from_unipoly(cheb_p(k), vars, vname);
}

}

#endif
