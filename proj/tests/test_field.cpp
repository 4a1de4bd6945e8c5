#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "field.hpp"

#include <set>
#include <vector>

using namespace skewmat;

TEST_CASE("rational arithmetic normalizes fractions") {
    FieldPtr q = Field::rationals();
    CHECK(q->eq(q->from_fraction(2, 4), q->from_fraction(1, 2)));
    CHECK(q->eq(q->from_fraction(-3, -6), q->from_fraction(1, 2)));
    FElem a = q->from_fraction(1, 2), b = q->from_fraction(1, 3);
    CHECK(q->eq(a + b, q->from_fraction(5, 6)));
    CHECK(q->eq(a * b, q->from_fraction(1, 6)));
    CHECK(q->eq(a - a, q->zero()));
    CHECK(q->eq(a / b, q->from_fraction(3, 2)));
    CHECK(q->eq(q->pow(a, 3), q->from_fraction(1, 8)));
    CHECK(q->to_string(q->from_fraction(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(q->from_fraction(1, 0), error);
    CHECK_THROWS_AS(q->inv(q->zero()), error);
}

TEST_CASE("prime field satisfies Fermat and inverse laws") {
    FieldPtr f = Field::prime(13);
    for (Int t = 1; t < 13; ++t) {
        FElem a = f->element_at(t);
        CHECK(f->is_one(f->pow(a, 12)));
        CHECK(f->is_one(a * f->inv(a)));
        CHECK(f->index_of(a) == t);
    }
    CHECK(f->eq(f->from_int(13), f->zero()));
    CHECK(f->eq(f->from_int(-1), f->from_int(12)));
    CHECK(f->eq(f->from_fraction(1, 2), f->from_int(7)));
    CHECK_THROWS_AS(Field::prime(6), error);
    CHECK_THROWS_AS(Field::prime(1), error);
}

TEST_CASE("quartic extension field arithmetic and Frobenius") {
    // GF(4) with modulus x^2 + x + 1
    FieldPtr f = Field::extension(2, 2, {1, 1, 1});
    CHECK(f->order() == 4);
    FElem x = f->from_coeffs({0, 1});
    CHECK(f->eq(x * x, f->from_coeffs({1, 1})));       // x^2 = x + 1
    CHECK(f->is_one(x * x * x));                        // multiplicative order 3
    CHECK(f->eq(f->frobenius(x, 1), x * x));
    CHECK(f->eq(f->frobenius(x, 2), x));
    std::set<Int> seen;
    for (Int t = 0; t < 4; ++t) seen.insert(f->index_of(f->element_at(t)));
    CHECK(seen.size() == 4);
}

TEST_CASE("reducible modulus is rejected") {
    CHECK_THROWS_AS(Field::extension(2, 2, {0, 0, 1}), error);  // x^2
    CHECK_THROWS_AS(Field::extension(5, 2, {4, 0, 1}), error);  // x^2 - 4
    try {
        Field::extension(2, 2, {0, 1, 1});
    } catch (const error& e) {
        CHECK(e.code() == errc::reducible_modulus);
    }
}

TEST_CASE("GF(9) norms and conjugation behave") {
    // x^2 + 1 is irreducible over GF(3)
    FieldPtr f = Field::extension(3, 2, {1, 0, 1});
    FElem x = f->from_coeffs({0, 1});
    CHECK(f->eq(x * x, f->from_int(-1)));
    FElem conj = f->frobenius(x, 1);
    CHECK(f->eq(x * conj, f->from_int(1)));  // norm of x is -x^2 = 1
    CHECK(f->eq(x + conj, f->zero()));       // trace of x is 0
}

TEST_CASE("nth roots are found exactly when they exist") {
    FieldPtr f = Field::prime(7);
    auto r = f->nth_root(f->from_int(2), 2);
    REQUIRE(r.has_value());
    CHECK(f->eq(*r * *r, f->from_int(2)));
    CHECK(!f->nth_root(f->from_int(3), 2).has_value());
    FieldPtr q = Field::rationals();
    auto s = q->nth_root(q->from_fraction(4, 9), 2);
    REQUIRE(s.has_value());
    CHECK(q->eq(*s * *s, q->from_fraction(4, 9)));
    CHECK(!q->nth_root(q->from_int(2), 2).has_value());
    auto c = q->nth_root(q->from_fraction(-8, 27), 3);
    REQUIRE(c.has_value());
    CHECK(q->eq(*c, q->from_fraction(-2, 3)));
}

TEST_CASE("field and element JSON round-trips") {
    for (const FieldPtr& f :
         {Field::rationals(), Field::prime(11), Field::extension(3, 2, {1, 0, 1})}) {
        FieldPtr back = Field::from_json(f->to_json());
        CHECK(back->same(*f));
        FElem a = f->finite() ? f->element_at(f->order() - 1) : f->from_fraction(-7, 3);
        CHECK(f->eq(f->elem_from_json(f->elem_to_json(a)), a));
    }
}

TEST_CASE("element literals parse as integers and fractions") {
    FieldPtr q = Field::rationals();
    CHECK(q->eq(q->elem_from_string("3/4"), q->from_fraction(3, 4)));
    CHECK(q->eq(q->elem_from_string("-5"), q->from_int(-5)));
    FieldPtr f = Field::prime(5);
    CHECK(f->eq(f->elem_from_string("7"), f->from_int(2)));
    CHECK(f->eq(f->elem_from_string("1/2"), f->from_int(3)));
    CHECK_THROWS_AS(q->elem_from_string(""), error);
}

TEST_CASE("mixing elements of different fields is refused") {
    FieldPtr a = Field::prime(5), b = Field::prime(7);
    CHECK_THROWS_AS(a->add(a->one(), b->one()), error);
    try {
        a->add(a->one(), b->one());
    } catch (const error& e) {
        CHECK(e.code() == errc::field_mismatch);
    }
    // structurally identical fields interoperate
    FieldPtr a2 = Field::prime(5);
    CHECK(a->eq(a->add(a->one(), a2->one()), a->from_int(2)));
}

TEST_CASE("elem_less is a strict total order") {
    FieldPtr f = Field::prime(7);
    std::vector<FElem> all;
    for (Int t = 0; t < 7; ++t) all.push_back(f->element_at(t));
    for (const FElem& a : all)
        for (const FElem& b : all) {
            CHECK(!(elem_less(a, b) && elem_less(b, a)));
            if (!f->eq(a, b)) CHECK((elem_less(a, b) || elem_less(b, a)));
        }
}
