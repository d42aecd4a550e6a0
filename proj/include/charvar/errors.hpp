#ifndef CHARVAR_ERRORS_HPP
#define CHARVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charvar {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Inversion of a non-unit. `witness` holds a nontrivial factor of the modulus
// when one was discovered (quotient rings), otherwise it is empty.
struct not_a_unit : error {
    std::string witness;
    explicit not_a_unit(const std::string& what, std::string w = {})
        : error(what), witness(std::move(w)) {}
};

// Binary operation on elements of different rings (mismatched p, N or modulus).
struct mixed_rings : error {
    using error::error;
};

// Coefficient embedding hit a denominator divisible by p.
struct bad_denominator : error {
    using error::error;
};

// A Groebner run over a quotient ring tried to invert a zero divisor.
// `factor` is the discovered proper factor of the modulus, serialized.
struct zero_divisor_hit : error {
    std::string factor;
    explicit zero_divisor_hit(const std::string& what, std::string f)
        : error(what), factor(std::move(f)) {}
};

struct division_failure : error {
    using error::error;
};

struct product_mismatch : error {
    using error::error;
};

struct identity_failure : error {
    using error::error;
};

struct saturation_mismatch : error {
    using error::error;
};

struct violation : error {
    using error::error;
};

struct denominator_zero : error {
    using error::error;
};

struct newton_stall : error {
    using error::error;
};

struct cap_exceeded : error {
    using error::error;
};

struct budget_exceeded : error {
    using error::error;
};

}

#endif
