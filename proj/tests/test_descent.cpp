#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "descent.hpp"
#include "skewalgebra.hpp"

using namespace skewmat;

namespace {

bool same_vec(const FieldPtr& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
        if (!f->eq(a[t], b[t])) return false;
    return true;
}

Vec uvec(const FieldPtr& f, std::size_t dim, std::size_t t) {
    Vec v(dim, f->zero());
    v[t] = f->one();
    return v;
}

}  // namespace

TEST_CASE("deterministic irreducible moduli generate the right orders") {
    Poly m2 = find_irreducible(Field::prime(2), 3);
    CHECK(poly_deg(m2) == 3);
    CHECK(poly_irreducible(m2));
    CHECK(poly_eq(m2, find_irreducible(Field::prime(2), 3)));  // stable choice
    FieldPtr e = make_gfq(5, 2);
    CHECK(e->order() == 25);
    CHECK(e->characteristic() == 5);
    CHECK(e->degree() == 2);
    CHECK(make_gfq(5, 2)->same(*e));
    CHECK(make_gfq(7, 1)->same(*Field::prime(7)));
}

TEST_CASE("lagrange idempotents are orthogonal, complete and eigen") {
    FieldPtr q = Field::rationals();
    SkewSet triv = SkewSet::trivial(q, 2);
    StructAlgebra a = StructAlgebra::from_skew(triv);
    Vec u = add_vec(elem_unit(triv, 1, 1), scale_vec(q->from_int(2), elem_unit(triv, 2, 2)));
    std::vector<Vec> kb{elem_unit(triv, 1, 1), elem_unit(triv, 2, 2)};
    SplitInput in{a, kb, u, q, {q->from_int(1), q->from_int(2)}};
    std::vector<Vec> idem = lagrange_idempotents(in);
    REQUIRE(idem.size() == 2);
    Vec sum = add_vec(idem[0], idem[1]);
    CHECK(same_vec(q, sum, elem_identity(triv)));
    CHECK(same_vec(q, a.mul(idem[0], idem[0]), idem[0]));
    CHECK(same_vec(q, a.mul(idem[0], idem[1]), elem_zero(triv)));
    // u e_i = r_i e_i
    CHECK(same_vec(q, a.mul(u, idem[0]), idem[0]));
    CHECK(same_vec(q, a.mul(u, idem[1]), scale_vec(q->from_int(2), idem[1])));
    // repeated roots are rejected
    SplitInput dup{a, kb, u, q, {q->one(), q->one()}};
    CHECK_THROWS_AS(lagrange_idempotents(dup), error);
}

TEST_CASE("splitting the rational matrix algebra recovers a trivial-type set") {
    FieldPtr q = Field::rationals();
    SkewSet triv = SkewSet::trivial(q, 2);
    StructAlgebra a = StructAlgebra::from_skew(triv);
    Vec u = add_vec(elem_unit(triv, 1, 1), scale_vec(q->from_int(2), elem_unit(triv, 2, 2)));
    std::vector<Vec> kb{elem_unit(triv, 1, 1), elem_unit(triv, 2, 2)};
    SplitInput in{a, kb, u, q, {q->from_int(1), q->from_int(2)}};
    SplitResult res = split_to_skew(in, std::nullopt, 3);
    CHECK(res.cprime.n() == 2);
    CHECK(equivalent(res.cprime, triv).equivalent);
    CHECK(res.v_used.size() == 4);
}

TEST_CASE("splitting refuses a non-cyclic vector") {
    FieldPtr q = Field::rationals();
    SkewSet triv = SkewSet::trivial(q, 2);
    StructAlgebra a = StructAlgebra::from_skew(triv);
    Vec u = add_vec(elem_unit(triv, 1, 1), scale_vec(q->from_int(2), elem_unit(triv, 2, 2)));
    std::vector<Vec> kb{elem_unit(triv, 1, 1), elem_unit(triv, 2, 2)};
    SplitInput in{a, kb, u, q, {q->from_int(1), q->from_int(2)}};
    // e11 generates only the first row/column block: K e11 K is 1-dimensional
    CHECK_THROWS_AS(split_to_skew(in, elem_unit(triv, 1, 1), 3), error);
    try {
        split_to_skew(in, elem_unit(triv, 1, 1), 3);
    } catch (const error& e) {
        CHECK(e.code() == errc::no_cyclic_generator);
    }
}

TEST_CASE("conjugacy check accepts compatible data and pins violations") {
    FieldPtr e = make_gfq(5, 2);
    SkewSet c = SkewSet::trivial(e, 2);
    DescentDatum ok{c, {2, 1}};
    CHECK(check_conjugacy(ok).ok);
    // a value that is not Frobenius-stable under the swap breaks the condition
    SkewSet bad = SkewSet::trivial(e, 2);
    FElem x = e->from_coeffs({0, 1});
    bad.set(1, 2, 1, x);
    DescentDatum datum{bad, {2, 1}};
    ConjugacyCheck cc = check_conjugacy(datum);
    CHECK(!cc.ok);
    // the reported triple genuinely violates phi(c_ijk) = c_pi(i)pi(j)pi(k)
    std::vector<unsigned> perm{2, 1};
    FElem lhs = e->frobenius(bad.at(cc.i, cc.j, cc.k), 1);
    FElem rhs = bad.at(perm[cc.i - 1], perm[cc.j - 1], perm[cc.k - 1]);
    CHECK(!e->eq(lhs, rhs));
    // identity permutation needs Frobenius-fixed (prime field) values only
    DescentDatum idd{bad, {1, 2}};
    CHECK(!check_conjugacy(idd).ok);
    SkewSet prime_vals = SkewSet::trivial(e, 2);
    prime_vals.set(1, 2, 1, e->from_int(3));
    DescentDatum idd2{prime_vals, {1, 2}};
    CHECK(check_conjugacy(idd2).ok);
}

TEST_CASE("descent data serialize to JSON and back") {
    FieldPtr e = make_gfq(3, 2);
    SkewSet c = SkewSet::trivial(e, 3);
    DescentDatum d{c, {2, 3, 1}};
    DescentDatum back = DescentDatum::from_json(d.to_json());
    CHECK(back.c.equal(d.c));
    CHECK(back.perm == d.perm);
}

TEST_CASE("fixed subalgebra of the swap action is a 4-dimensional form") {
    FieldPtr e = make_gfq(5, 2);
    SkewSet c = SkewSet::trivial(e, 2);
    DescentDatum d{c, {2, 1}};
    DescentResult res = fixed_subalgebra(d, 7);
    CHECK(res.fixed.dim() == 4);
    CHECK(res.fixed.field()->same(*Field::prime(5)));
    CHECK(res.fixed.is_associative());
    CHECK(res.fixed.unit_valid());
    CHECK(res.embed.size() == 4);
    CHECK(res.orbit_rep.size() == 4);
    CHECK(res.diagonal.size() == 2);
    // a violating datum is refused
    SkewSet bad = SkewSet::trivial(e, 2);
    bad.set(1, 2, 1, e->from_coeffs({0, 1}));
    DescentDatum viol{bad, {2, 1}};
    CHECK_THROWS_AS(fixed_subalgebra(viol, 7), error);
    try {
        fixed_subalgebra(viol, 7);
    } catch (const error& err) {
        CHECK(err.code() == errc::conjugacy_violated);
    }
}

TEST_CASE("quaternion construction obeys its defining relations") {
    FieldPtr f = Field::prime(7);
    FElem dd = f->from_int(3);
    StructAlgebra h = quaternion(f, dd, f->from_int(2), f->from_int(1));
    Vec one = uvec(f, 4, 0), s = uvec(f, 4, 1), z = uvec(f, 4, 2), w = uvec(f, 4, 3);
    CHECK(same_vec(f, h.mul(s, s), scale_vec(dd, one)));        // s^2 = d
    CHECK(same_vec(f, h.mul(s, z), w));                          // sz = w
    CHECK(same_vec(f, h.mul(z, s), scale_vec(f->neg(f->one()), w)));  // zs = -sz
    Vec z2 = h.mul(z, z);                                        // z^2 = b1 + b2 s
    CHECK(same_vec(f, z2, add_vec(scale_vec(f->from_int(2), one), s)));
    CHECK(!h.is_associative());
    StructAlgebra assoc = quaternion(f, dd, f->from_int(2), f->zero());
    CHECK(assoc.is_associative());
    CHECK_THROWS_AS(quaternion(f, f->from_int(2), f->one(), f->one()), error);  // 2 = 3^2 mod 7
}

TEST_CASE("realize_sigma hits a single requested atom") {
    RealizeResult r = realize_sigma(3, {RealizeTarget{2, 1}}, 5);
    REQUIRE(r.sig.atoms.size() == 1);
    CHECK(r.sig.atoms[0].dim == 2);
    CHECK(r.sig.atoms[0].center_dim == 2);
    CHECK(r.alg.field()->same(*Field::prime(3)));
}
