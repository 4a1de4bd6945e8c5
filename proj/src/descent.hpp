#pragma once

#include "structalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace skewmat {

// Deterministic degree-k extension of GF(p): the lexicographically first monic
// irreducible modulus. k == 1 returns the prime field itself.
Poly find_irreducible(const FieldPtr& prime_field, unsigned k);
FieldPtr make_gfq(const Int& p, unsigned k);

// Splitting data: a unital algebra over F with an etale subalgebra K = F[u]
// of degree n (dim A = n^2), and a field E where the minimal polynomial of u
// has n distinct roots.
struct SplitInput {
    StructAlgebra a;
    std::vector<Vec> k_basis;
    Vec u;                     // generator of K, in the coordinates of a
    FieldPtr e;
    std::vector<FElem> roots;  // the n distinct roots of min_poly(u) in e
};

// Orthogonal idempotents e_i of E (x) A with sum 1 and u e_i = r_i e_i,
// built by Lagrange interpolation at the supplied roots.
std::vector<Vec> lagrange_idempotents(const SplitInput& in);

struct SplitResult {
    SkewSet cprime;      // reduced skew set over E
    Mat transition;      // row (i-1)*n+(j-1) holds the new basis vector e_ij in E (x) A
    Vec v_used;          // the cyclic vector, in E (x) A
};

// Constructive splitting: finds v with E (x) A = K v K, reads off the skew
// set in the basis v_ij = e_i v e_j, normalizes it to a reduced set and
// verifies the full multiplication table.
SplitResult split_to_skew(const SplitInput& in, const std::optional<Vec>& v, std::uint64_t seed);

// A skew set over E = GF(p^k) together with an index permutation; descends
// to an F-form when the conjugacy condition holds.
struct DescentDatum {
    SkewSet c;
    std::vector<unsigned> perm;  // 1-based images: i -> perm[i-1]

    Json to_json() const;
    static DescentDatum from_json(const Json& j);
};

struct ConjugacyCheck {
    bool ok = true;
    unsigned i = 0, j = 0, k = 0;  // first violating triple when !ok
};

ConjugacyCheck check_conjugacy(const DescentDatum& d);

struct DescentResult {
    StructAlgebra fixed;                // the F-form, F the prime field
    std::vector<std::size_t> diagonal;  // fixed-basis indices spanning the descended diagonal
    std::optional<Vec> k_generator;     // generator of the descended diagonal, in fixed coords
    Poly k_min_poly;                    // its minimal polynomial (zero when no generator found)
    std::vector<Vec> embed;             // fixed basis vectors inside E (x) A
    std::vector<Pos> orbit_rep;         // representative position behind each fixed basis vector
};

// Fixed points of the semilinear action (Frobenius, index permutation) on the
// skew matrix algebra over E; returns structure constants over the prime
// field, with the descended diagonal as a distinguished subalgebra.
DescentResult fixed_subalgebra(const DescentDatum& d, std::uint64_t seed);

struct RealizeTarget {
    unsigned m = 1;  // center extension degree
    unsigned d = 1;  // matrix degree
};

struct RealizeResult {
    StructAlgebra alg;                  // over GF(p)
    std::vector<Vec> radical_candidate; // verified radical of the nucleus
    SigmaResult sig;
};

// Builds an algebra over GF(p) whose semisimple nucleus quotient has exactly
// the requested atoms: one of dimension d^2 m with center dimension m per
// target. Construction: radical envelope over GF(p^lcm) descended along a
// block-cycling permutation; the resulting sigma is verified.
RealizeResult realize_sigma(const Int& p, const std::vector<RealizeTarget>& targets,
                            std::uint64_t seed);

// Quaternion-type algebra Q = K + Kz on basis {1, s, z, sz}, K = F[s] with
// s^2 = d (d a non-square), z k = sigma(k) z, z^2 = b1 + b2 s. Associative
// exactly when b lies in F (b2 = 0).
StructAlgebra quaternion(const FieldPtr& f, const FElem& d, const FElem& b1, const FElem& b2);

}  // namespace skewmat
