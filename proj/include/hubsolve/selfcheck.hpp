#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hubsolve {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the acceptance criteria. level "quick" shrinks the corpora for a
/// fast smoke pass; "full" runs the documented sizes.
std::vector<CriterionResult> run_selfcheck(const std::string& level, std::uint64_t seed);

}  // namespace hubsolve
