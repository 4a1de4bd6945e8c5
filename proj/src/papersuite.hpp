#pragma once

#include "field.hpp"

#include <string>
#include <vector>

namespace skewmat {

struct CaseResult {
    std::string id;
    bool pass = false;
    std::string detail;  // pass note or failure explanation
    double seconds = 0.0;
};

struct SuiteReport {
    std::vector<CaseResult> results;

    bool all_pass() const;
    std::vector<std::string> failing_ids() const;
    Json to_json() const;
};

std::vector<std::string> paper_case_ids();

// Runs every golden worked-example case (or a single one when `only` is set;
// errc::bad_input for an unknown id). Cases run in parallel, reported in
// registry order.
SuiteReport run_paper_suite(const std::string& only = "");

}  // namespace skewmat
