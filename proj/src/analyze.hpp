#pragma once

#include "skewset.hpp"

#include <cstddef>

namespace skewmat {

struct AnalyzeOptions {
    std::size_t cap_ideals = 4096;
};

struct AnalyzeOutcome {
    Json report;
    bool truncated = false;  // ideal enumeration hit the cap
};

// Full desk report for one skew set: simplicity with witness, SCC count,
// bounded ideal enumeration, associativity with a violating chain, the
// combinatorial nucleus report, and the center dimension.
AnalyzeOutcome analyze_skewset(const SkewSet& c, const AnalyzeOptions& opt);

}  // namespace skewmat
