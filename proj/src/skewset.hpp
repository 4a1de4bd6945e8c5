#pragma once

#include "field.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace skewmat {

using Pos = std::pair<unsigned, unsigned>;       // 1-based (i, j)
using PosSet = std::vector<Pos>;                 // sorted, unique

// Reduced skew set of degree n over a field: an n^3 table c[i][j][k] with
// c[i][j][k] = 1 whenever the middle index equals either outer index.
// Indices are 1-based at this interface and in JSON.
class SkewSet {
public:
    static SkewSet trivial(FieldPtr f, unsigned n);

    unsigned n() const { return n_; }
    const FieldPtr& field() const { return f_; }

    static bool forced(unsigned i, unsigned j, unsigned k) { return j == i || j == k; }

    const FElem& at(unsigned i, unsigned j, unsigned k) const;
    bool zero_at(unsigned i, unsigned j, unsigned k) const;
    // Rejects forced positions unless the value is 1.
    void set(unsigned i, unsigned j, unsigned k, FElem v);

    SkewSet tensor(const SkewSet& other) const;
    // Relabels indices: result[i][j][k] = c[perm(i)][perm(j)][perm(k)].
    SkewSet relabel(const std::vector<unsigned>& perm) const;
    // Restriction to a subset of indices (preserves reducedness).
    SkewSet restrict(const std::vector<unsigned>& indices) const;

    bool same_pattern(const SkewSet& o) const;
    bool equal(const SkewSet& o) const;

    Json to_json() const;
    static SkewSet from_json(const Json& j);

private:
    SkewSet(FieldPtr f, unsigned n);
    std::size_t idx(unsigned i, unsigned j, unsigned k) const {
        return (static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * n_ + (k - 1);
    }

    FieldPtr f_;
    unsigned n_;
    std::vector<FElem> c_;
};

struct Violation {
    unsigned i, j, k;
    std::string value;
};

// Lenient check of a skew-set JSON document: reports every forced position
// carrying a non-unit value (empty means the table is reduced). Structural
// problems (bad shape, bad field) still throw.
std::vector<Violation> validate_skewset_json(const Json& j);

struct EquivResult {
    bool equivalent = false;
    // gamma[i-1][j-1], diagonal = 1; meaningful when equivalent
    std::vector<std::vector<FElem>> gamma;
    std::string reason;   // "pattern" or "system" when inequivalent
    std::string detail;
};

// Decides scaling equivalence b = gamma . a and produces a verified witness.
EquivResult equivalent(const SkewSet& a, const SkewSet& b);
bool check_equiv_witness(const SkewSet& a, const SkewSet& b,
                         const std::vector<std::vector<FElem>>& gamma);

// Zero pattern forced by a family of ideal supports: entry (i,j,k) becomes 0
// exactly when some I_t contains (i,j) or (j,k) but not (i,k); all other
// entries are 1. Throws when a forced-unit position would be zeroed.
SkewSet force_ideals(FieldPtr f, unsigned n, const std::vector<PosSet>& ideals);

// Associative set attached to a partition of {1..n}: entry 1 when the middle
// index shares a block with either outer one, else 0.  The cross-block
// positions span a square-zero radical whose quotient multiplies like the
// block-diagonal matrix algebra of the partition.
SkewSet radical_envelope(FieldPtr f, const std::vector<std::vector<unsigned>>& partition);

// Seed-deterministic random reduced skew set; each non-forced entry is 0 with
// probability zero_density, otherwise uniform over fixed nonzero choices.
SkewSet random_skewset(FieldPtr f, unsigned n, double zero_density, std::uint64_t seed);

Json pos_set_to_json(const PosSet& s);
PosSet pos_set_from_json(const Json& j);
void sort_pos_set(PosSet& s);

}  // namespace skewmat
