#include "hubsolve/selfcheck.hpp"

namespace hubsolve {

std::vector<CriterionResult> run_selfcheck(const std::string&, std::uint64_t) { return {}; }

}  // namespace hubsolve
