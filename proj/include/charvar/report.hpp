#ifndef CHARVAR_REPORT_HPP
#define CHARVAR_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "charvar/mpoly.hpp"

namespace charvar {

inline constexpr const char* kVersion = "0.1.0";

uint64_t fnv1a64(std::string_view s);
std::string hash_hex(uint64_t h);

// Deterministic digest of a generator list, taken over the canonical JSON
// serialization. Used to pin reduced bases inside certificates.
std::string basis_hash(const std::vector<QPoly>& gens);

nlohmann::ordered_json polys_to_json(const std::vector<QPoly>& ps);
std::vector<QPoly> polys_from_json(const nlohmann::json& j);

// Exact rank of a small matrix over Q by Gaussian elimination.
int rational_rank(std::vector<std::vector<Rational>> m);

// Uniform CLI report envelope. Timing is integral milliseconds and can be
// suppressed entirely for byte-identical reruns. Seeded checks record their
// seed; everything else leaves it negative and the key is omitted.
struct Report {
    std::string check;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    std::string status;  // pass | fail | report-only | error
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    int64_t elapsed_ms = 0;
    bool with_timings = true;
    int64_t seed = -1;

    nlohmann::ordered_json to_json() const;
};

}

#endif
