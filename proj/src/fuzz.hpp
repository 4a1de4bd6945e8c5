#pragma once

#include "skewset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skewmat {

struct FuzzOptions {
    unsigned n = 3;
    FieldPtr field;
    double density = 0.3;
    std::size_t count = 100;
    std::uint64_t seed = 1;
};

struct FuzzViolation {
    std::string invariant;
    std::size_t index = 0;   // which random instance
    Json input;              // the failing skew set
    std::string detail;
    Json minimized;          // smallest restriction still failing
};

struct FuzzReport {
    std::size_t count = 0;
    std::size_t checks = 0;  // individual invariant evaluations
    std::vector<FuzzViolation> violations;

    bool pass() const { return violations.empty(); }
    Json to_json() const;
};

// Named invariants in the battery, in execution order.
std::vector<std::string> fuzz_invariant_names();

// Runs the invariant battery on one skew set; returns (invariant, detail)
// failures. instance_seed drives the randomized sub-checks.
std::vector<std::pair<std::string, std::string>> run_battery(const SkewSet& c,
                                                             std::uint64_t instance_seed);

// Battery over `count` seed-derived random skew sets; instances are evaluated
// in parallel and violations reported in input order, each with a greedy
// index-removal minimization.
FuzzReport run_fuzz(const FuzzOptions& opt);

}  // namespace skewmat
