#pragma once

#include "skewset.hpp"

#include <cstddef>
#include <vector>

namespace skewmat {

// Directed graph on the n^2 unit positions of a skew set: entry c[i][j][k] != 0
// contributes edges (i,j) -> (i,k) and (j,k) -> (i,k).
struct IdealGraph {
    unsigned n = 0;
    std::vector<std::vector<unsigned>> adj;  // vertex (i,j) = (i-1)*n + (j-1)
};

inline unsigned pos_vertex(unsigned n, unsigned i, unsigned j) { return (i - 1) * n + (j - 1); }
inline Pos vertex_pos(unsigned n, unsigned v) { return {v / n + 1, v % n + 1}; }

IdealGraph build_graph(const SkewSet& c);

// Least closed (successor-closed) set of positions containing start.
PosSet closure(const SkewSet& c, const PosSet& start);
bool is_closed(const SkewSet& c, const PosSet& s);

struct SimplicityReport {
    bool simple = false;
    unsigned scc_count = 0;
    PosSet witness;  // a proper nonzero closed set when not simple
};

SimplicityReport is_simple(const SkewSet& c);

struct IdealEnumeration {
    std::vector<PosSet> ideals;  // includes the empty and the full set
    bool truncated = false;
};

// Enumerates all closed position sets as condensation up-sets. cap = 0 means
// unlimited and is refused (errc::cap_exceeded) for n > 6; a positive cap
// truncates the enumeration and flags it.
IdealEnumeration enumerate_ideals(const SkewSet& c, std::size_t cap);

struct SquareReport {
    PosSet square_support;
    bool closed = false;
};

// Support of I*I for a closed set I, and whether that support is closed again.
SquareReport ideal_square(const SkewSet& c, const PosSet& ideal);

}  // namespace skewmat
