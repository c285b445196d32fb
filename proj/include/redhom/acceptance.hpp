#pragma once

// The acceptance battery: nine fixed checks with time budgets, shared by the
// CLI (`suite acceptance`) and the acceptance test binary.

#include <functional>
#include <string>
#include <vector>

namespace redhom {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;
};

/// Runs criteria in order; `on_result` sees each one as it finishes.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_line(const CriterionResult& r);

}  // namespace redhom
