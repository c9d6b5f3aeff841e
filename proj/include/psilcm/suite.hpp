#pragma once

#include <string>
#include <vector>

namespace psilcm {

enum class SuiteScale { quick, full };

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    bool soft;  // soft criteria warn instead of failing the suite
    std::string detail;
};

// Runs the verification grid. `quick` shrinks the Monte Carlo and B-series
// workloads; `full` runs everything at the nominal sizes. A nonzero
// `only_criterion` restricts the run to that criterion id.
std::vector<CriterionResult> run_acceptance(SuiteScale scale, int only_criterion = 0);

// True when every non-soft criterion passed.
bool suite_passed(const std::vector<CriterionResult>& results);

}  // namespace psilcm
