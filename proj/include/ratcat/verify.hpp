#pragma once

#include <string>
#include <vector>

#include "ratcat/numbers.hpp"

namespace ratcat {

/// One verification outcome. Theorem checks report pass/fail; conjecture
/// probes report verified/refuted/inconclusive and never count as failures.
struct CheckResult {
    std::string name;
    std::string status;  // pass | fail | verified | refuted | inconclusive
    std::string detail;
};

struct VerifyOptions {
    std::string only;  // run a single named check when nonempty
    unsigned long long budget = 10'000'000;
};

/// Every registered check name, in execution order.
std::vector<std::string> verify_check_names();

/// Runs the registered checks that apply to the pair. Requires a < b.
std::vector<CheckResult> run_pair_checks(const CoprimePair& p, const VerifyOptions& opt);

inline bool is_hard_failure(const CheckResult& r) { return r.status == "fail"; }

}  // namespace ratcat
