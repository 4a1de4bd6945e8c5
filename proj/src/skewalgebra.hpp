#pragma once

#include "linalg.hpp"
#include "skewset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skewmat {

// Elements of the skew matrix algebra attached to a skew set live as n x n
// coefficient tables, flattened row major: coord(i, j) = (i-1)*n + (j-1).

Vec elem_zero(const SkewSet& c);
Vec elem_unit(const SkewSet& c, unsigned i, unsigned j);
Vec elem_identity(const SkewSet& c);

// z[i][l] = sum_j x[i][j] * y[j][l] * c[i][j][l]
Vec multiply(const SkewSet& c, const Vec& x, const Vec& y);
Vec associator(const SkewSet& c, const Vec& x, const Vec& y, const Vec& z);

struct Chain {
    unsigned i, j, k, l;
};

// c[i][j][k]*c[i][k][l] - c[i][j][l]*c[j][k][l]; the coefficient of the
// associator (e_ij, e_jk, e_kl) on e_il.
FElem chain_obstruction(const SkewSet& c, unsigned i, unsigned j, unsigned k, unsigned l);

// nullopt when associative, else a violating chain.
std::optional<Chain> associativity_violation(const SkewSet& c);
bool is_associative(const SkewSet& c);

struct NucleusReport {
    PosSet left, middle, right, nucleus;
    bool regular = false;              // no nucleus position with c[i][j][i] = 0
    PosSet j_positions;                // radical support within the nucleus
    bool s_is_partition = false;       // the S-relation is an equivalence
    std::string s_violation;           // first violation when it is not
    std::vector<std::vector<unsigned>> s_blocks;
    std::vector<unsigned> atoms;       // block sizes, ascending
    bool nucleus_is_partition = false;

    Json to_json() const;
};

NucleusReport nuclei(const SkewSet& c);

// Basis of the center (row vectors of length n^2); a singleton for every
// reduced skew set by the structure theory, asserted by tests rather than here.
std::vector<Vec> center(const SkewSet& c);

// Echelonized basis of the two-sided ideal generated by x.
std::vector<Vec> ideal_generated(const SkewSet& c, const Vec& x);

// Support positions of an element.
PosSet elem_support(const SkewSet& c, const Vec& x);

}  // namespace skewmat
