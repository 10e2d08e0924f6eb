#pragma once

#include <string>
#include <vector>

namespace annulus::verify {

// One sub-check of a criterion: a measured value against a pinned tolerance.
struct CheckResult {
    std::string name;
    double measured;
    double tolerance;
    bool passed;
};

struct CriterionResult {
    int id;
    std::string name;
    std::vector<CheckResult> checks;
    bool passed;
    long long wall_time_ms;
};

// Names, in id order, usable as subset filters (substring match).
std::vector<std::string> criterion_names();

// Runs the listed criteria (empty filter = all). A filter entry selects by
// numeric id or by substring of the criterion name.
std::vector<CriterionResult> run_criteria(const std::vector<std::string>& filter = {});

// Formats "PASS criterion 3 (kernel_gauge_equivalence) ..." style lines.
std::string format_report(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace annulus::verify
