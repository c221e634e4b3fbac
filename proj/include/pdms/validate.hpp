#pragma once

#include "pdms/squeezed_state.hpp"

#include <string>
#include <vector>

namespace pdms::validate {

struct CheckResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;   // worst-case metric over the check's grid
    double threshold = 0.0;  // pass iff observed < threshold
    std::string detail;
};

/// Rows of the informational closed-form reconciliation table.
struct ComparisonRow {
    double z_re, z_im, gamma, alpha;
    double max_deviation;
    int first_exceeding;
    int n_max;
};

struct ValidationReport {
    std::vector<CheckResult> checks;          // hard invariants
    std::vector<ComparisonRow> comparison;    // informational
    bool all_pass() const;
};

/// Runs every hard invariant plus the closed-form reconciliation table.
ValidationReport run_all();

}  // namespace pdms::validate
