#include "charvar/report.hpp"

namespace charvar {

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string basis_hash(const std::vector<QPoly>& gens) {
    return hash_hex(fnv1a64(polys_to_json(gens).dump()));
}

nlohmann::ordered_json polys_to_json(const std::vector<QPoly>& ps) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& p : ps) a.push_back(poly_to_json(p));
    return a;
}

std::vector<QPoly> polys_from_json(const nlohmann::json& j) {
    std::vector<QPoly> out;
    for (const auto& e : j) out.push_back(poly_from_json(e));
    return out;
}

int rational_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rational inv = m[r][c].inv();
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["version"] = kVersion;
    j["inputs"] = inputs;
    j["status"] = status;
    if (seed >= 0) j["seed"] = seed;
    j["payload"] = payload;
    if (with_timings) j["elapsed_ms"] = elapsed_ms;
    return j;
}

}
