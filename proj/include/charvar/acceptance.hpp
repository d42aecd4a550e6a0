#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace charvar {

struct CriterionResult {
    int index = 0;
    std::string name;
    std::string status;  // pass | fail | error | skipped
    std::int64_t elapsed_ms = 0;
    std::string detail;  // short summary or the failure text

    nlohmann::ordered_json to_json(bool with_timings) const;
};

// The ten release gates, run in order. A budget in whole seconds stops the
// suite once the cumulative runtime crosses it; anything not yet run comes
// back "skipped". on_each fires right after each criterion finishes, so a
// caller can stream progress lines.
std::vector<CriterionResult> run_acceptance(
    std::optional<std::int64_t> budget_s = std::nullopt,
    const std::function<void(const CriterionResult&)>& on_each = {});

}  // namespace charvar
