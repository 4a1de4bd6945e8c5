#pragma once

#include "linalg.hpp"
#include "poly.hpp"
#include "skewalgebra.hpp"
#include "skewset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skewmat {

// Sparse linear combination of basis vectors: (index, coefficient), sorted by
// index, zero coefficients dropped. Indices are 0-based internally.
using SLin = std::vector<std::pair<unsigned, FElem>>;

SLin slin_from_vec(const Field& F, const Vec& v);
Vec slin_to_vec(const FieldPtr& f, unsigned dim, const SLin& s);

// Finite-dimensional unital algebra given by structure constants, with the
// basis products stored sparsely.
class StructAlgebra {
public:
    StructAlgebra(FieldPtr f, unsigned dim);

    unsigned dim() const { return dim_; }
    const FieldPtr& field() const { return f_; }
    const SLin& product(unsigned a, unsigned b) const { return table_[a * dim_ + b]; }
    void set_product(unsigned a, unsigned b, SLin value);
    const Vec& unit() const { return unit_; }
    void set_unit(Vec u);
    bool unit_valid() const;  // checks u e_b = e_b = e_b u for all b

    Vec mul(const Vec& x, const Vec& y) const;
    Vec associator3(const Vec& x, const Vec& y, const Vec& z) const;
    bool is_associative() const;

    static StructAlgebra from_skew(const SkewSet& c);

    bool equal_constants(const StructAlgebra& o) const;
    // Compares tables after relabeling this algebra's basis index x to perm[x].
    bool equal_under_relabeling(const StructAlgebra& o, const std::vector<unsigned>& perm) const;

    Json to_json() const;
    static StructAlgebra from_json(const Json& j);

private:
    FieldPtr f_;
    unsigned dim_;
    std::vector<SLin> table_;
    Vec unit_;
};

// A fixed independent spanning list with coordinate extraction.
class BasisFrame {
public:
    BasisFrame(FieldPtr f, std::vector<Vec> basis);

    const std::vector<Vec>& vectors() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }
    std::size_t ambient() const { return ambient_; }
    bool contains(const Vec& v) const;
    std::optional<Vec> coordinates(const Vec& v) const;

private:
    FieldPtr f_;
    std::size_t ambient_;
    std::vector<Vec> basis_;
    RowSpace aug_;  // rows [echelon | transform]
};

struct NucleusSpaces {
    std::vector<Vec> left, middle, right, nucleus, center;
};

// Kernel-of-associator computation of the one-sided nuclei, the nucleus and
// the center. Intended for small dimensions (cost grows like dim^4).
NucleusSpaces nucleus_linear(const StructAlgebra& a);

std::vector<Vec> center_linear(const StructAlgebra& a);

// Two-sided ideal generated by v, as an echelonized basis.
std::vector<Vec> ideal_generated(const StructAlgebra& a, const Vec& v);

// Minimal polynomial of x acting in the unital algebra a.
Poly min_poly(const StructAlgebra& a, const Vec& x);

// Subalgebra presented on an explicit closed basis; products are re-expressed
// in that basis (errc::bad_input if the span is not closed or lacks the unit
// when require_unit).
struct SubAlgebra {
    StructAlgebra alg;
    std::vector<Vec> embed;  // basis vectors inside the parent coordinates
};
SubAlgebra induced_algebra(const StructAlgebra& a, std::vector<Vec> basis, Vec unit);

// Quotient by a two-sided ideal (given as any spanning list of the ideal).
struct Quotient {
    StructAlgebra alg;
    std::vector<std::size_t> complement;  // parent coords carrying the classes
    std::vector<Vec> ideal_basis;
};
Quotient quotient_algebra(const StructAlgebra& a, const std::vector<Vec>& ideal);

// Jacobson radical via the trace form; exact for characteristic 0 or
// characteristic > dim (errc::char_too_small otherwise, errc::not_associative
// for non-associative input).
std::vector<Vec> jacobson_radical(const StructAlgebra& a);

// Radical through a caller-supplied candidate: verifies the span is a
// nilpotent two-sided ideal with semisimple quotient, which pins it as the
// radical in any characteristic. Throws when verification fails.
std::vector<Vec> jacobson_radical_with_candidate(const StructAlgebra& a,
                                                 const std::vector<Vec>& candidate);

struct SigmaAtom {
    unsigned dim = 0;
    unsigned center_dim = 0;
};

struct SigmaResult {
    unsigned nucleus_dim = 0;
    unsigned radical_dim = 0;
    std::vector<SigmaAtom> atoms;  // sorted by (dim, center_dim)
    Json to_json() const;
};

// Semisimple quotient of the nucleus: atoms are the simple components, each
// verified simple by ideal saturation. radical_candidate (coordinates in the
// parent algebra) routes the small-characteristic path.
SigmaResult sigma(const StructAlgebra& a,
                  const std::vector<Vec>* radical_candidate = nullptr);

// Simple components of an associative algebra presumed semisimple; each
// component is verified simple by saturation, so a successful decomposition
// proves semisimplicity. Throws internal diagnostics when the presumption
// fails and errc::no_generator when a component center cannot be certified.
struct Component {
    SubAlgebra part;          // embed holds basis vectors in the input coords
    unsigned center_dim = 0;
};
std::vector<Component> decompose_semisimple(const StructAlgebra& a, std::uint64_t seed);

StructAlgebra tensor_algebras(const StructAlgebra& a, const StructAlgebra& b);

// Index bijection aligning tensor_algebras(from_skew(c1), from_skew(c2)) with
// from_skew(c1.tensor(c2)): position pairs are paired as (i-1)*n2 + i2.
std::vector<unsigned> tensor_basis_relabeling(unsigned n1, unsigned n2);

// Coefficient embedding along GF(p) -> GF(p^k) (or the identity).
StructAlgebra base_change(const StructAlgebra& a, const FieldPtr& target);

struct EtaleReport {
    bool etale = false;
    Vec generator;        // witness with min poly degree == dim
    Poly minimal;         // its minimal polynomial
    std::string reason;   // when not etale
};

// Commutative unital algebra: searches (seeded, bounded) for a generating
// element and tests its minimal polynomial for degree == dim and
// squarefreeness. errc::no_generator when no generator is found.
EtaleReport verify_etale(const StructAlgebra& k, std::uint64_t seed);

struct SemiassocReport {
    bool ok = false;
    int failed_stage = 0;  // 1: K not nuclear/subalgebra, 2: K not etale of the
                           // right dimension, 3: K (x) K does not act faithfully
    std::string detail;
    Json to_json() const;
};

// Three-stage certificate that a is semiassociative with maximal etale K.
SemiassocReport verify_semiassociative(const StructAlgebra& a, const std::vector<Vec>& k_basis,
                                       std::uint64_t seed);

struct CentralizerReport {
    bool maximal = false;
    std::size_t centralizer_dim = 0;
};

// K maximal commutative <=> its centralizer in a equals K.
CentralizerReport maximal_commutative_check(const StructAlgebra& a,
                                            const std::vector<Vec>& k_basis);

}  // namespace skewmat
