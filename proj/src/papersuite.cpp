#include "papersuite.hpp"

#include "descent.hpp"
#include "frame.hpp"
#include "parallel.hpp"
#include "skewalgebra.hpp"
#include "skewset.hpp"
#include "structalg.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

namespace skewmat {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

Vec uvec(const FieldPtr& f, std::size_t dim, std::size_t t) {
    Vec v(dim, f->zero());
    v[t] = f->one();
    return v;
}

PosSet positions(std::initializer_list<Pos> l) {
    PosSet s(l);
    sort_pos_set(s);
    return s;
}

PosSet diag_positions(unsigned n) {
    PosSet s;
    for (unsigned i = 1; i <= n; ++i) s.push_back({i, i});
    return s;
}

SkewSet set_n2(const FieldPtr& f, const FElem& c121, const FElem& c212) {
    SkewSet c = SkewSet::trivial(f, 2);
    c.set(1, 2, 1, c121);
    c.set(2, 1, 2, c212);
    return c;
}

std::vector<FElem> nonzero_pool(const FieldPtr& f) {
    std::vector<FElem> out;
    if (f->finite()) {
        for (Int t = 1; t < f->order() && out.size() < 6; ++t)
            out.push_back(f->element_at(t));
    } else {
        out = {f->from_int(1), f->from_int(2), f->from_int(3), f->from_int(-1),
               f->from_fraction(1, 2)};
    }
    return out;
}

std::vector<Vec> delta_basis(const SkewSet& c) {
    std::vector<Vec> d;
    for (unsigned i = 1; i <= c.n(); ++i) d.push_back(elem_unit(c, i, i));
    return d;
}

bool vec_eq(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
        if (!f.eq(a[t], b[t])) return false;
    return true;
}

// The skew set of the ideal-whose-square-fails example: zeros at every
// c[i][j][i] with i != j and at (2,3,1), (3,1,2).
SkewSet badsquare_set(const FieldPtr& f) {
    SkewSet c = SkewSet::trivial(f, 3);
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned j = 1; j <= 3; ++j)
            if (i != j) c.set(i, j, i, f->zero());
    c.set(2, 3, 1, f->zero());
    c.set(3, 1, 2, f->zero());
    return c;
}

// Simple set with all distinct-index entries zero and c[i][j][i] = 1.
SkewSet mostly_zero_simple(const FieldPtr& f, unsigned n) {
    SkewSet c = SkewSet::trivial(f, n);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                if (SkewSet::forced(i, j, k) || k == i) continue;
                c.set(i, j, k, f->zero());
            }
    return c;
}

SkewSet nonnormal_set(const FieldPtr& f) {
    static const unsigned zeros[15][3] = {
        {1, 2, 1}, {1, 2, 3}, {1, 4, 1}, {1, 4, 3}, {2, 1, 2},
        {2, 1, 4}, {2, 3, 2}, {2, 3, 4}, {3, 2, 1}, {3, 2, 3},
        {3, 4, 1}, {4, 1, 2}, {4, 1, 4}, {4, 2, 3}, {4, 3, 2}};
    SkewSet c = SkewSet::trivial(f, 4);
    for (const auto& z : zeros) c.set(z[0], z[1], z[2], f->zero());
    return c;
}

StructAlgebra dual_numbers(const FieldPtr& f) {
    StructAlgebra a(f, 2);
    a.set_product(0, 0, {{0, f->one()}});
    a.set_product(0, 1, {{1, f->one()}});
    a.set_product(1, 0, {{1, f->one()}});
    a.set_product(1, 1, {});
    a.set_unit(uvec(f, 2, 0));
    return a;
}

StructAlgebra quadratic_field_algebra(const FieldPtr& f, const FElem& d) {
    StructAlgebra a(f, 2);
    a.set_product(0, 0, {{0, f->one()}});
    a.set_product(0, 1, {{1, f->one()}});
    a.set_product(1, 0, {{1, f->one()}});
    a.set_product(1, 1, {{0, d}});
    a.set_unit(uvec(f, 2, 0));
    return a;
}

std::string case_degree2_classification() {
    for (const FieldPtr& f : {Field::rationals(), Field::prime(5)}) {
        std::vector<FElem> pool = nonzero_pool(f);
        // type 1: both parameters zero
        SkewSet c00 = set_n2(f, f->zero(), f->zero());
        require(is_associative(c00), "type (0,0) must be associative");
        require(!is_simple(c00).simple, "type (0,0) must not be simple");
        NucleusReport r00 = nuclei(c00);
        require(r00.j_positions == positions({{1, 2}, {2, 1}}),
                "type (0,0) radical support must be the off-diagonal");
        std::vector<unsigned> ones{1, 1};
        require(r00.atoms == ones, "type (0,0) atoms must be [1,1]");
        std::vector<Vec> rad = jacobson_radical(StructAlgebra::from_skew(c00));
        require(rad.size() == 2, "type (0,0) radical dimension must be 2");
        // type 2: exactly one parameter zero
        for (const FElem& lam : pool) {
            SkewSet c = set_n2(f, f->zero(), lam);
            require(!is_simple(c).simple, "type (0,x) must not be simple");
            require(!is_associative(c), "type (0,x) must not be associative");
            PosSet e = positions({{1, 2}, {2, 1}, {2, 2}});
            require(closure(c, positions({{1, 2}})) == e,
                    "type (0,x) principal ideal of (1,2) must be the 3-dim ideal");
            SquareReport sq = ideal_square(c, e);
            require(sq.square_support == e && sq.closed,
                    "type (0,x) distinguished ideal must be idempotent");
            SkewSet ct = set_n2(f, lam, f->zero());
            require(!is_simple(ct).simple && !is_associative(ct),
                    "type (x,0) must be non-simple and non-associative");
            require(closure(ct, positions({{2, 1}})) == positions({{1, 1}, {1, 2}, {2, 1}}),
                    "type (x,0) principal ideal must transpose the (0,x) one");
        }
        // type 3: both parameters nonzero
        for (const FElem& lam : pool)
            for (const FElem& mu : pool) {
                SkewSet c = set_n2(f, lam, mu);
                require(is_simple(c).simple, "type (x,y) must be simple");
                require(is_associative(c) == f->eq(lam, mu),
                        "type (x,y) associative exactly when the parameters agree");
            }
    }
    return "three degree-2 types reproduced over the rationals and GF(5)";
}

std::string case_badsquare() {
    for (const FieldPtr& f : {Field::rationals(), Field::prime(3)}) {
        PosSet I = positions({{1, 2}, {1, 3}, {2, 3}});
        SkewSet c = force_ideals(f, 3, {I});
        require(c.equal(badsquare_set(f)), "forced set must match the published zero set");
        require(is_closed(c, I), "I must be an ideal");
        SquareReport sq = ideal_square(c, I);
        require(sq.square_support == positions({{1, 3}}), "I^2 support must be {(1,3)}");
        require(!sq.closed, "I^2 support must not be an ideal");
        require(!is_closed(c, positions({{1, 3}})), "{(1,3)} must not be closed");
        IdealEnumeration e = enumerate_ideals(c, 4096);
        require(!e.truncated, "small lattice must enumerate fully");
        require(std::find(e.ideals.begin(), e.ideals.end(), I) != e.ideals.end(),
                "I must appear in the ideal lattice");
    }
    return "ideal with non-ideal square reproduced, I^2 = {(1,3)} not closed";
}

std::string case_one_sided_nuclei() {
    // hand-checked via the chain obstructions: (e13,e32,e23) has associator
    // e13, so e13 is only middle-nuclear; e31 survives every chain
    SkewSet c = badsquare_set(Field::rationals());
    NucleusReport r = nuclei(c);
    PosSet n = diag_positions(3);
    n.push_back({3, 1});
    sort_pos_set(n);
    require(r.nucleus == n, "nucleus must be the diagonal plus (3,1)");
    PosSet left = n;
    left.push_back({2, 3});
    left.push_back({3, 2});
    sort_pos_set(left);
    require(r.left == left, "left nucleus must add (2,3) and (3,2)");
    PosSet middle = n;
    middle.push_back({1, 3});
    sort_pos_set(middle);
    require(r.middle == middle, "middle nucleus must add (1,3)");
    PosSet right = n;
    right.push_back({1, 2});
    right.push_back({2, 1});
    sort_pos_set(right);
    require(r.right == right, "right nucleus must add (1,2) and (2,1)");
    require(r.j_positions == PosSet{{3, 1}}, "the nucleus must not be semisimple");
    return "one-sided nuclei are pairwise distinct, none inside the other two";
}

std::string case_simple_distinct_nuclei() {
    const FieldPtr f = Field::rationals();
    SkewSet c = SkewSet::trivial(f, 4);
    c.set(1, 2, 3, f->from_int(2));
    require(is_simple(c).simple, "all-nonzero set must be simple");
    NucleusReport r = nuclei(c);
    require(r.nucleus == diag_positions(4), "nucleus must be the diagonal");
    auto expect_side = [&](unsigned avoided) {
        PosSet s = diag_positions(4);
        for (unsigned i = 1; i <= 4; ++i)
            for (unsigned j = 1; j <= 4; ++j)
                if (i != j && i != avoided && j != avoided) s.push_back({i, j});
        sort_pos_set(s);
        return s;
    };
    require(r.left == expect_side(1), "left nucleus must avoid index 1");
    require(r.middle == expect_side(2), "middle nucleus must avoid index 2");
    require(r.right == expect_side(3), "right nucleus must avoid index 3");
    return "single deviating entry separates all three one-sided nuclei";
}

std::string case_nonnormal() {
    for (const FieldPtr& f : {Field::rationals(), Field::prime(2)}) {
        SkewSet c = nonnormal_set(f);
        require(is_simple(c).simple, "the degree-4 set must be simple");
        PosSet n = diag_positions(4);
        n.push_back({1, 2});
        sort_pos_set(n);
        require(nuclei(c).nucleus == n, "nucleus must be the diagonal plus (1,2)");
    }
    return "simple degree-4 set with non-semisimple nucleus diag + (1,2)";
}

std::string case_simple_with_zeros() {
    const FieldPtr f = Field::rationals();
    for (unsigned n = 3; n <= 6; ++n) {
        SkewSet c = mostly_zero_simple(f, n);
        require(is_simple(c).simple,
                "degree " + std::to_string(n) + " mostly-zero set must be simple");
    }
    return "mostly-zero sets are simple for degrees 3 through 6";
}

std::string case_semiprime_not_prime() {
    const FieldPtr f = Field::rationals();
    PosSet I = positions({{1, 3}, {3, 2}, {1, 2}});
    PosSet Ip = positions({{2, 4}, {4, 1}, {2, 1}});
    SkewSet c = force_ideals(f, 4, {I, Ip});
    require(is_closed(c, I) && is_closed(c, Ip), "both forced sets must be ideals");
    PosSet R;
    for (unsigned i = 1; i <= 4; ++i)
        for (unsigned j = 1; j <= 4; ++j)
            if (!(i == j && i <= 2)) R.push_back({i, j});
    PosSet R11 = R, R22 = R;
    R11.push_back({1, 1});
    R22.push_back({2, 2});
    sort_pos_set(R11);
    sort_pos_set(R22);
    std::set<PosSet> principal;
    for (unsigned i = 1; i <= 4; ++i)
        for (unsigned j = 1; j <= 4; ++j) principal.insert(closure(c, {{i, j}}));
    std::set<PosSet> expected{I, Ip, R, R11, R22};
    require(principal == expected, "principal ideals must be exactly I, I', R, R+(1,1), R+(2,2)");
    // I * I' = 0
    for (const auto& p : I)
        for (const auto& q : Ip) {
            if (p.second != q.first) continue;
            require(c.zero_at(p.first, p.second, q.second), "I * I' must vanish");
        }
    IdealEnumeration e = enumerate_ideals(c, 4096);
    require(!e.truncated, "degree-4 lattice must enumerate fully");
    for (const auto& ide : e.ideals) {
        if (ide.empty()) continue;
        require(!ideal_square(c, ide).square_support.empty(),
                "every nonzero ideal must have nonzero square");
    }
    return "exactly 5 principal ideals, I*I' = 0, all squares nonzero";
}

std::string case_zero_matrix_algebra() {
    for (const FieldPtr& f : {Field::rationals(), Field::prime(3)}) {
        SkewSet c = set_n2(f, f->zero(), f->zero());
        require(c.equal(force_ideals(f, 2, {positions({{1, 2}, {2, 1}})})),
                "forcing the off-diagonal ideal must give the zero matrix algebra");
        require(c.equal(radical_envelope(f, {{1}, {2}})),
                "the discrete-partition envelope must give the zero matrix algebra");
        NucleusReport r = nuclei(c);
        require(r.nucleus.size() == 4, "the whole algebra must be nuclear");
        require(r.j_positions == positions({{1, 2}, {2, 1}}), "J must be the off-diagonal");
        std::vector<unsigned> ones{1, 1};
        require(r.atoms == ones, "atoms must be [1,1]");
        std::vector<Vec> cand{elem_unit(c, 1, 2), elem_unit(c, 2, 1)};
        SigmaResult sig = sigma(StructAlgebra::from_skew(c), &cand);
        require(sig.nucleus_dim == 4 && sig.radical_dim == 2, "sigma must see radical dim 2");
        require(sig.atoms.size() == 2 && sig.atoms[0].dim == 1 && sig.atoms[1].dim == 1,
                "sigma atoms must be two copies of the ground field");
    }
    return "zero matrix algebra: radical off-diagonal, sigma = F x F";
}

std::string case_ratio_invariant() {
    const FieldPtr f = Field::prime(7);
    std::vector<FElem> units;
    for (Int t = 1; t < 7; ++t) units.push_back(f->element_at(t));
    for (const FElem& a : units)
        for (const FElem& b : units)
            for (const FElem& a2 : units)
                for (const FElem& b2 : units) {
                    SkewSet c = set_n2(f, a, b);
                    SkewSet c2 = set_n2(f, a2, b2);
                    bool same_ratio = f->eq(a / b, a2 / b2);
                    EquivResult r = equivalent(c, c2);
                    require(r.equivalent == same_ratio,
                            "degree-2 equivalence must be decided by the ratio");
                    if (r.equivalent)
                        require(check_equiv_witness(c, c2, r.gamma),
                                "equivalence witness must verify");
                }
    return "over GF(7), c121/c212 is a complete equivalence invariant";
}

std::string case_associative_to_trivial() {
    std::mt19937_64 rng(20240911ull);
    for (const FieldPtr& f : {Field::rationals(), Field::prime(5)}) {
        std::vector<FElem> pool = nonzero_pool(f);
        for (unsigned n = 2; n <= 4; ++n)
            for (int rep = 0; rep < 8; ++rep) {
                std::vector<std::vector<FElem>> g(n, std::vector<FElem>(n, f->one()));
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = 0; j < n; ++j)
                        if (i != j) g[i][j] = pool[rng() % pool.size()];
                SkewSet c = SkewSet::trivial(f, n);
                for (unsigned i = 1; i <= n; ++i)
                    for (unsigned j = 1; j <= n; ++j)
                        for (unsigned k = 1; k <= n; ++k) {
                            if (SkewSet::forced(i, j, k)) continue;
                            c.set(i, j, k,
                                  g[i - 1][j - 1] * g[j - 1][k - 1] / g[i - 1][k - 1]);
                        }
                require(is_associative(c), "coboundary sets must be associative");
                EquivResult r = equivalent(c, SkewSet::trivial(f, n));
                require(r.equivalent, "associative all-nonzero set must be trivial");
                require(check_equiv_witness(c, SkewSet::trivial(f, n), r.gamma),
                        "triviality witness must verify");
            }
    }
    return "associative all-nonzero sets are scaling-trivial with verified witnesses";
}

std::string case_single_generator() {
    const FieldPtr f = Field::rationals();
    FElem lam = f->from_int(2), mu = f->from_int(5);
    SkewSet c = set_n2(f, lam, mu);
    Vec z = add_vec(elem_unit(c, 1, 2), elem_unit(c, 2, 1));
    Vec z2 = multiply(c, z, z);
    Vec expect_z2 = add_vec(scale_vec(lam, elem_unit(c, 1, 1)), scale_vec(mu, elem_unit(c, 2, 2)));
    require(vec_eq(*f, z2, expect_z2), "z^2 must be c121 e11 + c212 e22");
    Vec z2z = multiply(c, z2, z);
    Vec expect_z2z = add_vec(scale_vec(lam, elem_unit(c, 1, 2)), scale_vec(mu, elem_unit(c, 2, 1)));
    require(vec_eq(*f, z2z, expect_z2z), "(z^2)z must be c121 e12 + c212 e21");
    RowSpace span(f, 4);
    span.insert(elem_identity(c));
    span.insert(z);
    span.insert(z2);
    span.insert(z2z);
    require(span.rank() == 4, "z must generate the whole algebra");
    Vec assoc = associator(c, z, z, z);
    Vec expect_assoc = scale_vec(lam - mu, sub_vec(elem_unit(c, 1, 2), elem_unit(c, 2, 1)));
    require(vec_eq(*f, assoc, expect_assoc), "(z,z,z) must be (c121-c212)(e12-e21)");
    Vec basis_assoc = associator(c, elem_unit(c, 1, 2), elem_unit(c, 2, 1), elem_unit(c, 1, 2));
    require(vec_eq(*f, basis_assoc, scale_vec(lam - mu, elem_unit(c, 1, 2))),
            "(e12,e21,e12) must be (c121-c212) e12");
    return "single-element generation and the power-associativity failure verified";
}

std::string case_quaternion_family() {
    const FieldPtr q = Field::rationals();
    FElem d = q->from_int(2);
    // standard associative quaternions: b in F
    StructAlgebra std_q = quaternion(q, d, q->from_int(3), q->zero());
    require(std_q.is_associative(), "b in F must give an associative algebra");
    require(nucleus_linear(std_q).nucleus.size() == 4, "associative algebra is all nucleus");
    require(center_linear(std_q).size() == 1, "standard quaternions are central");
    // zero quaternion algebra: b = 0
    StructAlgebra zq = quaternion(q, d, q->zero(), q->zero());
    require(zq.is_associative(), "b = 0 must give an associative algebra");
    std::vector<Vec> rad = jacobson_radical(zq);
    require(rad.size() == 2, "zero quaternion radical must be Kz");
    for (const auto& v : rad)
        require(q->is_zero(v[0]) && q->is_zero(v[1]), "radical must sit inside Kz");
    SigmaResult sig = sigma(zq);
    require(sig.atoms.size() == 1 && sig.atoms[0].dim == 2 && sig.atoms[0].center_dim == 2,
            "zero quaternion sigma must be the quadratic field K");
    // nonassociative quaternions: b outside F
    StructAlgebra nq = quaternion(q, d, q->from_int(1), q->from_int(1));
    require(!nq.is_associative(), "b outside F must break associativity");
    Vec z = uvec(q, 4, 2);
    Vec zzz = nq.associator3(z, z, z);
    Vec expect = scale_vec(q->from_int(2), uvec(q, 4, 3));
    require(vec_eq(*q, zzz, expect), "(z,z,z) must be 2 b2 sz");
    NucleusSpaces sp = nucleus_linear(nq);
    require(sp.nucleus.size() == 2, "nucleus must be K");
    RowSpace k(q, 4);
    for (const auto& v : sp.nucleus) k.insert(v);
    require(k.contains(uvec(q, 4, 0)) && k.contains(uvec(q, 4, 1)), "nucleus must be span{1,s}");
    require(sp.center.size() == 1, "nonassociative quaternions are central");
    std::vector<Vec> kb{uvec(q, 4, 0), uvec(q, 4, 1)};
    SemiassocReport sr = verify_semiassociative(nq, kb, 7);
    require(sr.ok, "quaternion certificate must pass: " + sr.detail);
    CentralizerReport cr = maximal_commutative_check(nq, kb);
    require(cr.maximal && cr.centralizer_dim == 2, "K must be maximal commutative");
    // square parameter rejection
    bool rejected = false;
    try {
        quaternion(q, q->from_int(4), q->one(), q->one());
    } catch (const error& e) {
        rejected = e.code() == errc::d_is_square;
    }
    require(rejected, "square d must be rejected");
    // over a finite field
    const FieldPtr g7 = Field::prime(7);
    StructAlgebra nq7 = quaternion(g7, g7->from_int(3), g7->one(), g7->one());
    require(!nq7.is_associative(), "GF(7) case must be nonassociative");
    require(nucleus_linear(nq7).nucleus.size() == 2, "GF(7) nucleus must be K");
    return "quaternion family: associative, zero, and nonassociative cases verified";
}

std::string case_quaternion_split() {
    struct Inst {
        int p, d;
    };
    for (Inst inst : {Inst{3, 2}, Inst{5, 2}, Inst{7, 3}}) {
        const FieldPtr f = Field::prime(inst.p);
        StructAlgebra a = quaternion(f, f->from_int(inst.d), f->one(), f->one());
        FieldPtr e = make_gfq(inst.p, 2);
        Poly mu = poly_make(e, {e->neg(e->from_int(inst.d)), e->zero(), e->one()});
        std::vector<FElem> roots = poly_roots(mu);
        require(roots.size() == 2, "x^2 - d must split over GF(p^2)");
        SplitInput in{a, {uvec(f, 4, 0), uvec(f, 4, 1)}, uvec(f, 4, 1), e, roots};
        SplitResult res = split_to_skew(in, std::nullopt, 11 + inst.p);
        require(res.cprime.n() == 2, "split must give a degree-2 set");
        require(!res.cprime.zero_at(1, 2, 1) && !res.cprime.zero_at(2, 1, 2),
                "split of a simple algebra must have both parameters nonzero");
        require(!is_associative(res.cprime), "split of a nonassociative algebra stays nonassociative");
        require(is_simple(res.cprime).simple, "split skew set must be simple");
    }
    return "nonassociative quaternions over GF(3), GF(5), GF(7) split and stay simple";
}

std::string case_split_matrix_rationals() {
    const FieldPtr q = Field::rationals();
    SkewSet triv = SkewSet::trivial(q, 2);
    StructAlgebra a = StructAlgebra::from_skew(triv);
    Vec u = add_vec(elem_unit(triv, 1, 1), scale_vec(q->from_int(2), elem_unit(triv, 2, 2)));
    SplitInput in{a, delta_basis(triv), u, q, {q->from_int(1), q->from_int(2)}};
    std::vector<Vec> idem = lagrange_idempotents(in);
    require(vec_eq(*q, idem[0], elem_unit(triv, 1, 1)), "first idempotent must be e11");
    require(vec_eq(*q, idem[1], elem_unit(triv, 2, 2)), "second idempotent must be e22");
    Vec v = add_vec(elem_identity(triv), add_vec(elem_unit(triv, 1, 2), elem_unit(triv, 2, 1)));
    SplitResult res = split_to_skew(in, v, 5);
    require(equivalent(res.cprime, triv).equivalent,
            "splitting the matrix algebra must return a trivial-equivalent set");
    return "matrix algebra splits back to a set equivalent to the trivial one";
}

std::string case_split_identity_roundtrip() {
    const FieldPtr f = Field::prime(7);
    SkewSet c = random_skewset(f, 3, 0.2, 91u);
    StructAlgebra a = StructAlgebra::from_skew(c);
    Vec u(9, f->zero());
    for (unsigned i = 0; i < 3; ++i) u[i * 3 + i] = f->from_int(i);
    SplitInput in{a, delta_basis(c), u, f, {f->from_int(0), f->from_int(1), f->from_int(2)}};
    SplitResult res = split_to_skew(in, std::nullopt, 17);
    EquivResult r = equivalent(res.cprime, c);
    require(r.equivalent, "re-reading a skew algebra over its own field must give an equivalent set");
    require(check_equiv_witness(res.cprime, c, r.gamma), "round-trip witness must verify");
    return "diagonal split over the ground field reproduces the set up to scaling";
}

std::string case_descent_trivial_action() {
    const FieldPtr f = Field::prime(5);
    SkewSet c = random_skewset(f, 3, 0.3, 42u);
    DescentDatum d{c, {1, 2, 3}};
    require(check_conjugacy(d).ok, "identity action on a prime-field set is conjugant");
    DescentResult res = fixed_subalgebra(d, 3);
    require(res.fixed.dim() == 9, "fixed algebra must have dimension 9");
    require(res.fixed.equal_constants(StructAlgebra::from_skew(c)),
            "trivial action must recover the skew algebra itself");
    require(res.diagonal.size() == 3, "descended diagonal must have dimension 3");
    return "identity descent datum reproduces the skew matrix algebra";
}

std::string case_descent_frobenius_m2() {
    FieldPtr e = make_gfq(5, 2);
    SkewSet c = SkewSet::trivial(e, 2);
    DescentDatum d{c, {2, 1}};
    require(check_conjugacy(d).ok, "constant set with the swap must satisfy conjugacy");
    DescentResult res = fixed_subalgebra(d, 9);
    const StructAlgebra& a = res.fixed;
    require(a.dim() == 4, "fixed algebra must be 4-dimensional");
    require(a.is_associative(), "descended matrix algebra must be associative");
    require(center_linear(a).size() == 1, "descended matrix algebra must be central");
    for (unsigned t = 0; t < 4; ++t)
        require(ideal_generated(a, uvec(a.field(), 4, t)).size() == 4,
                "every basis element must generate the whole algebra");
    require(res.diagonal.size() == 2, "descended diagonal must be quadratic");
    std::vector<Vec> kb;
    for (std::size_t t : res.diagonal) kb.push_back(uvec(a.field(), 4, t));
    SemiassocReport sr = verify_semiassociative(a, kb, 13);
    require(sr.ok, "descended diagonal certificate must pass: " + sr.detail);
    require(res.k_generator.has_value(), "GF(25) diagonal must be monogenic");
    require(poly_deg(res.k_min_poly) == 2 && poly_irreducible(res.k_min_poly),
            "diagonal generator must have an irreducible quadratic minimal polynomial");
    CentralizerReport cr = maximal_commutative_check(a, kb);
    require(cr.maximal, "descended diagonal must be self-centralizing");
    return "Frobenius-twisted form of M2 over GF(5): central, simple, semiassociative";
}

std::string case_descent_zero_matrix() {
    FieldPtr e = make_gfq(5, 2);
    SkewSet c = set_n2(e, e->zero(), e->zero());
    DescentDatum d{c, {2, 1}};
    require(check_conjugacy(d).ok, "zero matrix set with the swap must satisfy conjugacy");
    DescentResult res = fixed_subalgebra(d, 21);
    require(res.fixed.dim() == 4, "fixed algebra must be 4-dimensional");
    require(res.fixed.is_associative(), "descended zero matrix algebra must be associative");
    std::vector<Vec> cand;
    for (std::size_t t = 0; t < res.orbit_rep.size(); ++t)
        if (res.orbit_rep[t].first != res.orbit_rep[t].second)
            cand.push_back(uvec(res.fixed.field(), 4, t));
    require(cand.size() == 2, "off-diagonal orbit must span two fixed vectors");
    SigmaResult sig = sigma(res.fixed, &cand);
    require(sig.radical_dim == 2, "sigma radical must have dimension 2");
    require(sig.atoms.size() == 1 && sig.atoms[0].dim == 2 && sig.atoms[0].center_dim == 2,
            "sigma must be the quadratic field GF(25)");
    return "descending the zero matrix algebra gives sigma = GF(25), one non-central atom";
}

std::string case_realize_sigma() {
    for (const Int& p : {Int(3), Int(5)}) {
        RealizeResult r1 = realize_sigma(p, {RealizeTarget{1, 1}, RealizeTarget{2, 1}}, 31);
        require(r1.sig.atoms.size() == 2, "two atoms requested");
        require(r1.sig.atoms[0].dim == 1 && r1.sig.atoms[0].center_dim == 1,
                "first atom must be the prime field");
        require(r1.sig.atoms[1].dim == 2 && r1.sig.atoms[1].center_dim == 2,
                "second atom must be the quadratic extension");
        RealizeResult r2 = realize_sigma(p, {RealizeTarget{2, 1}, RealizeTarget{2, 1}}, 32);
        require(r2.sig.atoms.size() == 2, "two quadratic atoms requested");
        for (const auto& at : r2.sig.atoms)
            require(at.dim == 2 && at.center_dim == 2, "both atoms must be quadratic fields");
        RealizeResult r3 = realize_sigma(p, {RealizeTarget{1, 2}}, 33);
        require(r3.sig.atoms.size() == 1 && r3.sig.atoms[0].dim == 4 &&
                    r3.sig.atoms[0].center_dim == 1,
                "matrix target must give one central atom of dimension 4");
        // a matrix block next to a second block exercises the cross-block
        // radical of a genuinely mixed envelope
        RealizeResult r4 = realize_sigma(p, {RealizeTarget{1, 2}, RealizeTarget{1, 1}}, 34);
        require(r4.sig.atoms.size() == 2 && r4.sig.atoms[0].dim == 1 &&
                    r4.sig.atoms[1].dim == 4 && r4.sig.atoms[1].center_dim == 1,
                "matrix-plus-line targets must give atoms of dimension 1 and 4");
    }
    return "sigma realized for mixed, doubled, matrix, and matrix-plus-line targets over "
           "GF(3), GF(5)";
}

std::string case_partition_envelope_sigma() {
    const FieldPtr f = Field::rationals();
    SkewSet c = radical_envelope(f, {{1, 2}, {3}});
    require(is_associative(c), "radical envelopes must be associative");
    NucleusReport r = nuclei(c);
    require(r.nucleus.size() == 9, "the whole envelope must be nuclear");
    std::vector<unsigned> degrees{1, 2};
    require(r.s_is_partition && r.atoms == degrees, "atom degrees must be [1,2]");
    // the cross-block positions carry zero diagonal entries, so they are
    // exactly the J part of the nucleus split, and chaining two of them
    // always lands on a zeroed entry
    PosSet cross{{1, 3}, {2, 3}, {3, 1}, {3, 2}};
    require(!r.regular && r.j_positions == cross, "cross positions must form J");
    for (const Pos& a : cross)
        for (const Pos& b : cross)
            if (a.second == b.first)
                require(c.zero_at(a.first, a.second, b.second), "J must square to zero");
    SigmaResult sig = sigma(StructAlgebra::from_skew(c));
    require(sig.radical_dim == 4, "cross-block positions must form the radical");
    require(sig.atoms.size() == 2 && sig.atoms[0].dim == 1 && sig.atoms[1].dim == 4,
            "sigma atoms must be F and M2(F)");
    require(sig.atoms[0].center_dim == 1 && sig.atoms[1].center_dim == 1,
            "both atoms must be central");
    // block degrees multiply under tensor
    SkewSet c2 = radical_envelope(f, {{1}, {2}});
    NucleusReport rt = nuclei(c.tensor(c2));
    std::vector<unsigned> expect{1, 1, 2, 2};
    require(rt.s_is_partition && rt.atoms == expect,
            "tensor envelope atoms must be pairwise products");
    return "partition envelope: sigma = F x M2(F), atom degrees multiply under tensor";
}

std::string case_radical_basics() {
    const FieldPtr q = Field::rationals();
    require(jacobson_radical(StructAlgebra::from_skew(SkewSet::trivial(q, 3))).empty(),
            "matrix algebras must have zero radical");
    StructAlgebra dn = dual_numbers(q);
    std::vector<Vec> rad = jacobson_radical(dn);
    require(rad.size() == 1 && q->is_zero(rad[0][0]) && !q->is_zero(rad[0][1]),
            "dual numbers must have radical spanned by the nilpotent");
    bool refused = false;
    try {
        jacobson_radical(quaternion(q, q->from_int(2), q->one(), q->one()));
    } catch (const error& e) {
        refused = e.code() == errc::not_associative;
    }
    require(refused, "trace-form radical must refuse nonassociative input");
    return "radical: zero for matrices, the nilpotent line for dual numbers";
}

std::string case_etale_examples() {
    const FieldPtr q = Field::rationals();
    SkewSet triv = SkewSet::trivial(q, 3);
    SubAlgebra diag = induced_algebra(StructAlgebra::from_skew(triv), delta_basis(triv),
                                      elem_identity(triv));
    EtaleReport et = verify_etale(diag.alg, 3);
    require(et.etale, "the diagonal of M3(Q) must be etale");
    EtaleReport dual = verify_etale(dual_numbers(q), 3);
    require(!dual.etale, "dual numbers must not be etale");
    const FieldPtr g5 = Field::prime(5);
    EtaleReport quad = verify_etale(quadratic_field_algebra(g5, g5->from_int(2)), 3);
    require(quad.etale, "GF(5)[x]/(x^2-2) must be etale");
    require(poly_deg(quad.minimal) == 2, "the quadratic field generator has degree 2");
    return "etale detection: diagonal and quadratic field pass, dual numbers fail";
}

std::string case_base_change_nucleus() {
    const FieldPtr g5 = Field::prime(5);
    StructAlgebra a = quaternion(g5, g5->from_int(2), g5->one(), g5->one());
    FieldPtr e = make_gfq(5, 2);
    StructAlgebra ae = base_change(a, e);
    require(ae.field()->same(*e), "base change must land in the extension");
    require(nucleus_linear(a).nucleus.size() == 2 && nucleus_linear(ae).nucleus.size() == 2,
            "nucleus dimension must be preserved under base change");
    const FieldPtr g3 = Field::prime(3);
    StructAlgebra m2 = StructAlgebra::from_skew(SkewSet::trivial(g3, 2));
    StructAlgebra m2e = base_change(m2, make_gfq(3, 2));
    require(m2e.is_associative() && m2e.dim() == 4, "matrix algebra survives base change");
    require(center_linear(m2e).size() == 1, "base-changed matrix algebra stays central");
    return "base change preserves nucleus dimension and centrality";
}

std::string case_certificate_positives() {
    const FieldPtr q = Field::rationals();
    for (const SkewSet& c : {SkewSet::trivial(q, 3), badsquare_set(q), nonnormal_set(q),
                             random_skewset(Field::prime(2), 3, 0.3, 7u),
                             random_skewset(Field::prime(3), 4, 0.4, 8u)}) {
        SemiassocReport r = verify_semiassociative(StructAlgebra::from_skew(c), delta_basis(c), 5);
        require(r.ok, "diagonal certificate must pass, got stage " +
                          std::to_string(r.failed_stage) + ": " + r.detail);
    }
    StructAlgebra nq = quaternion(q, q->from_int(2), q->one(), q->one());
    require(verify_semiassociative(nq, {uvec(q, 4, 0), uvec(q, 4, 1)}, 5).ok,
            "rational quaternion certificate must pass");
    const FieldPtr g7 = Field::prime(7);
    StructAlgebra nq7 = quaternion(g7, g7->from_int(3), g7->one(), g7->one());
    require(verify_semiassociative(nq7, {uvec(g7, 4, 0), uvec(g7, 4, 1)}, 5).ok,
            "GF(7) quaternion certificate must pass");
    return "certificates pass for skew diagonals (including GF(2)) and quaternions";
}

std::string case_certificate_negatives() {
    const FieldPtr q = Field::rationals();
    // K leaves the nucleus
    SkewSet c = SkewSet::trivial(q, 4);
    c.set(1, 2, 3, q->from_int(2));
    StructAlgebra a = StructAlgebra::from_skew(c);
    std::vector<Vec> k1{elem_identity(c), elem_unit(c, 1, 3)};
    SemiassocReport r1 = verify_semiassociative(a, k1, 5);
    require(!r1.ok && r1.failed_stage == 1 && r1.detail.find("nucleus") != std::string::npos,
            "non-nuclear K must fail stage 1 with a nucleus diagnosis");
    // K not etale
    SkewSet triv = SkewSet::trivial(q, 2);
    StructAlgebra m2 = StructAlgebra::from_skew(triv);
    std::vector<Vec> k2{elem_identity(triv), elem_unit(triv, 1, 2)};
    SemiassocReport r2 = verify_semiassociative(m2, k2, 5);
    require(!r2.ok && r2.failed_stage == 2 && r2.detail.find("etale") != std::string::npos,
            "nilpotent-bearing K must fail stage 2 with an etale diagnosis");
    // dimension mismatch
    std::vector<Vec> k3{elem_identity(triv)};
    SemiassocReport r3 = verify_semiassociative(m2, k3, 5);
    require(!r3.ok && r3.failed_stage == 2 && r3.detail.find("dimension") != std::string::npos,
            "scalar K in M2 must fail stage 2 with a dimension diagnosis");
    return "three designed negatives fail at the documented stages";
}

struct NamedCase {
    const char* id;
    std::string (*fn)();
};

const std::vector<NamedCase>& cases() {
    static const std::vector<NamedCase> list = {
        {"degree2-classification", case_degree2_classification},
        {"badsquare", case_badsquare},
        {"one-sided-nuclei", case_one_sided_nuclei},
        {"simple-distinct-nuclei", case_simple_distinct_nuclei},
        {"nonnormal", case_nonnormal},
        {"simple-with-zeros", case_simple_with_zeros},
        {"semiprime-not-prime", case_semiprime_not_prime},
        {"zero-matrix-algebra", case_zero_matrix_algebra},
        {"ratio-invariant", case_ratio_invariant},
        {"associative-to-trivial", case_associative_to_trivial},
        {"single-generator", case_single_generator},
        {"quaternion-family", case_quaternion_family},
        {"quaternion-split", case_quaternion_split},
        {"split-matrix-rationals", case_split_matrix_rationals},
        {"split-identity-roundtrip", case_split_identity_roundtrip},
        {"descent-trivial-action", case_descent_trivial_action},
        {"descent-frobenius-m2", case_descent_frobenius_m2},
        {"descent-zero-matrix", case_descent_zero_matrix},
        {"realize-sigma", case_realize_sigma},
        {"partition-envelope-sigma", case_partition_envelope_sigma},
        {"radical-basics", case_radical_basics},
        {"etale-examples", case_etale_examples},
        {"base-change-nucleus", case_base_change_nucleus},
        {"certificate-positives", case_certificate_positives},
        {"certificate-negatives", case_certificate_negatives},
    };
    return list;
}

}  // namespace

std::vector<std::string> paper_case_ids() {
    std::vector<std::string> ids;
    for (const auto& c : cases()) ids.push_back(c.id);
    return ids;
}

SuiteReport run_paper_suite(const std::string& only) {
    std::vector<const NamedCase*> selected;
    for (const auto& c : cases())
        if (only.empty() || only == c.id) selected.push_back(&c);
    if (selected.empty()) fail(errc::bad_input, "unknown case id: " + only);
    SuiteReport rep;
    rep.results.resize(selected.size());
    parallel_for(selected.size(), [&](std::size_t t) {
        CaseResult& r = rep.results[t];
        r.id = selected[t]->id;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = selected[t]->fn();
            r.pass = true;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    return rep;
}

bool SuiteReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<std::string> SuiteReport::failing_ids() const {
    std::vector<std::string> ids;
    for (const auto& r : results)
        if (!r.pass) ids.push_back(r.id);
    return ids;
}

Json SuiteReport::to_json() const {
    Json j;
    j["pass"] = all_pass();
    Json arr = Json::array();
    for (const auto& r : results) {
        // wall time stays out of the JSON: stdout must be byte-identical
        // across runs (timing goes to stderr logs)
        Json cj;
        cj["id"] = r.id;
        cj["pass"] = r.pass;
        cj["detail"] = r.detail;
        arr.push_back(std::move(cj));
    }
    j["cases"] = std::move(arr);
    Json failing = Json::array();
    for (const auto& id : failing_ids()) failing.push_back(id);
    j["failing"] = std::move(failing);
    return j;
}

}  // namespace skewmat
