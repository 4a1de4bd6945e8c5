#pragma once

#include "ints.hpp"

#include <vector>

namespace skewmat {

using IMat = std::vector<std::vector<Int>>;

IMat imat_identity(std::size_t n);
IMat imat_mul(const IMat& a, const IMat& b);

// u * a * v = d with u, v unimodular and d diagonal, d[i] | d[i+1], d[i] >= 0.
struct SmithResult {
    IMat u, d, v;
};

SmithResult smith_normal_form(IMat a);

}  // namespace skewmat
