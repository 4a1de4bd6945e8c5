#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frame.hpp"
#include "linalg.hpp"
#include "skewalgebra.hpp"

#include <random>

using namespace skewmat;

namespace {

bool same_vec(const FieldPtr& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
        if (!f->eq(a[t], b[t])) return false;
    return true;
}

Vec random_elem(const SkewSet& c, std::mt19937_64& rng) {
    const FieldPtr& f = c.field();
    Vec v = elem_zero(c);
    for (auto& x : v)
        x = f->finite() ? f->element_at(Int(rng()) % f->order()) : f->from_int(Int(rng() % 5) - 2);
    return v;
}

}  // namespace

TEST_CASE("unit products follow the structure constants") {
    FieldPtr q = Field::rationals();
    SkewSet c = SkewSet::trivial(q, 3);
    c.set(1, 2, 3, q->from_int(5));
    // e12 * e23 = c123 e13
    Vec p = multiply(c, elem_unit(c, 1, 2), elem_unit(c, 2, 3));
    CHECK(same_vec(q, p, scale_vec(q->from_int(5), elem_unit(c, 1, 3))));
    // e12 * e13 = 0 (inner indices differ)
    CHECK(is_zero_vec(*q, multiply(c, elem_unit(c, 1, 2), elem_unit(c, 1, 3))));
    // e11 * e11 = e11
    CHECK(same_vec(q, multiply(c, elem_unit(c, 1, 1), elem_unit(c, 1, 1)), elem_unit(c, 1, 1)));
}

TEST_CASE("the identity element is two-sided for every table") {
    std::mt19937_64 rng(2);
    for (const FieldPtr& f : {Field::rationals(), Field::prime(3)})
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SkewSet c = random_skewset(f, 3, 0.4, seed);
            Vec one = elem_identity(c);
            for (int rep = 0; rep < 4; ++rep) {
                Vec x = random_elem(c, rng);
                CHECK(same_vec(f, multiply(c, one, x), x));
                CHECK(same_vec(f, multiply(c, x, one), x));
            }
        }
}

TEST_CASE("multiplication distributes over addition") {
    std::mt19937_64 rng(4);
    FieldPtr f = Field::prime(7);
    SkewSet c = random_skewset(f, 3, 0.3, 10);
    for (int rep = 0; rep < 10; ++rep) {
        Vec x = random_elem(c, rng), y = random_elem(c, rng), z = random_elem(c, rng);
        Vec lhs = multiply(c, x, add_vec(y, z));
        Vec rhs = add_vec(multiply(c, x, y), multiply(c, x, z));
        CHECK(same_vec(f, lhs, rhs));
    }
}

TEST_CASE("chain obstructions are the associators of unit chains") {
    FieldPtr q = Field::rationals();
    SkewSet c = SkewSet::trivial(q, 3);
    c.set(1, 2, 3, q->from_int(2));
    c.set(2, 3, 1, q->from_int(7));
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned j = 1; j <= 3; ++j)
            for (unsigned k = 1; k <= 3; ++k)
                for (unsigned l = 1; l <= 3; ++l) {
                    Vec a = associator(c, elem_unit(c, i, j), elem_unit(c, j, k),
                                       elem_unit(c, k, l));
                    FElem ob = chain_obstruction(c, i, j, k, l);
                    // the associator of a chain lands on e_il with the obstruction
                    Vec expect = scale_vec(ob, elem_unit(c, i, l));
                    CHECK(same_vec(q, a, expect));
                }
}

TEST_CASE("associativity detection agrees with a full associator sweep") {
    FieldPtr f = Field::prime(5);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SkewSet c = random_skewset(f, 3, 0.4, seed * 3);
        auto v = associativity_violation(c);
        CHECK(is_associative(c) == !v.has_value());
        if (v) {
            Vec a = associator(c, elem_unit(c, v->i, v->j), elem_unit(c, v->j, v->k),
                               elem_unit(c, v->k, v->l));
            CHECK(!is_zero_vec(*f, a));
        } else {
            std::mt19937_64 rng(seed);
            for (int rep = 0; rep < 5; ++rep) {
                Vec x = random_elem(c, rng), y = random_elem(c, rng), z = random_elem(c, rng);
                CHECK(is_zero_vec(*f, associator(c, x, y, z)));
            }
        }
    }
    CHECK(is_associative(SkewSet::trivial(f, 4)));
    SkewSet bad = SkewSet::trivial(f, 2);
    bad.set(1, 2, 1, f->from_int(2));
    CHECK(!is_associative(bad));
}

TEST_CASE("nucleus report is consistent with its defining associators") {
    FieldPtr f = Field::prime(3);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        SkewSet c = random_skewset(f, 3, 0.5, seed * 7);
        NucleusReport r = nuclei(c);
        unsigned n = c.n();
        auto member = [](const PosSet& s, unsigned i, unsigned j) {
            for (const auto& p : s)
                if (p.first == i && p.second == j) return true;
            return false;
        };
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j) {
                bool left_ok = true, mid_ok = true, right_ok = true;
                for (unsigned b = 1; b <= n; ++b)
                    for (unsigned d = 1; d <= n; ++d) {
                        if (!f->is_zero(chain_obstruction(c, i, j, b, d))) left_ok = false;
                        if (!f->is_zero(chain_obstruction(c, b, i, j, d))) mid_ok = false;
                        if (!f->is_zero(chain_obstruction(c, b, d, i, j))) right_ok = false;
                    }
                CHECK(member(r.left, i, j) == left_ok);
                CHECK(member(r.middle, i, j) == mid_ok);
                CHECK(member(r.right, i, j) == right_ok);
                CHECK(member(r.nucleus, i, j) == (left_ok && mid_ok && right_ok));
            }
        // the nucleus is the triple intersection
        for (const auto& p : r.nucleus) {
            CHECK(member(r.left, p.first, p.second));
            CHECK(member(r.middle, p.first, p.second));
            CHECK(member(r.right, p.first, p.second));
        }
    }
}

TEST_CASE("zero matrix algebra has the published nucleus split") {
    FieldPtr q = Field::rationals();
    SkewSet c = SkewSet::trivial(q, 2);
    c.set(1, 2, 1, q->zero());
    c.set(2, 1, 2, q->zero());
    NucleusReport r = nuclei(c);
    CHECK(r.nucleus.size() == 4);
    PosSet offdiag{{1, 2}, {2, 1}};
    CHECK(r.j_positions == offdiag);
    CHECK(!r.regular);
    CHECK(r.s_is_partition);
    std::vector<unsigned> atoms{1, 1};
    CHECK(r.atoms == atoms);
    CHECK(r.nucleus_is_partition);
}

TEST_CASE("center is the scalar line") {
    for (const FieldPtr& f : {Field::rationals(), Field::prime(5)})
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            SkewSet c = random_skewset(f, 3, 0.3, seed);
            std::vector<Vec> z = center(c);
            REQUIRE(z.size() == 1);
            // the basis vector is a scalar matrix
            Vec v = z[0];
            FElem diag = v[0];
            CHECK(!f->is_zero(diag));
            for (unsigned i = 0; i < 3; ++i)
                for (unsigned j = 0; j < 3; ++j) {
                    if (i == j)
                        CHECK(f->eq(v[i * 3 + j], diag));
                    else
                        CHECK(f->is_zero(v[i * 3 + j]));
                }
        }
}

TEST_CASE("homogeneous ideals span their position closure") {
    std::mt19937_64 rng(6);
    FieldPtr f = Field::prime(5);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        SkewSet c = random_skewset(f, 3, 0.4, seed * 13);
        Vec x = random_elem(c, rng);
        std::vector<Vec> ideal = ideal_generated(c, x);
        PosSet cl = closure(c, elem_support(c, x));
        CHECK(ideal.size() == cl.size());
        RowSpace span(f, 9);
        for (const auto& v : ideal) span.insert(v);
        for (const auto& p : cl)
            CHECK(span.contains(elem_unit(c, p.first, p.second)));
    }
}

TEST_CASE("element support lists exactly the nonzero coordinates") {
    FieldPtr q = Field::rationals();
    SkewSet c = SkewSet::trivial(q, 2);
    Vec x = add_vec(elem_unit(c, 1, 2), scale_vec(q->from_int(3), elem_unit(c, 2, 2)));
    PosSet s = elem_support(c, x);
    PosSet expect{{1, 2}, {2, 2}};
    CHECK(s == expect);
    CHECK(elem_support(c, elem_zero(c)).empty());
}
