#ifndef OPTOMECH_CLI_LIMITS_CHECK_HPP
#define OPTOMECH_CLI_LIMITS_CHECK_HPP

// Cross-oracle comparison suite: every closed-form limit is evaluated
// against the full composite (or single-scatterer) machinery and graded
// against a fixed tolerance.  Emitted as a JSON report; `optomech check`
// exits nonzero when any entry fails.

#include "config.hpp"

namespace optomech::cli {

struct CheckOutcome {
    bool all_pass = false;
    Json report;
};

CheckOutcome run_limits_check();

} // namespace optomech::cli

#endif
