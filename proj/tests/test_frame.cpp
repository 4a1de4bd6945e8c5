#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frame.hpp"

#include <algorithm>
#include <set>

using namespace skewmat;

namespace {

// Brute-force ideal lattice: every subset of positions tested for closedness.
std::set<PosSet> brute_force_ideals(const SkewSet& c) {
    unsigned n = c.n();
    std::vector<Pos> all;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) all.push_back({i, j});
    std::set<PosSet> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << all.size()); ++mask) {
        PosSet s;
        for (std::size_t t = 0; t < all.size(); ++t)
            if (mask & (std::size_t(1) << t)) s.push_back(all[t]);
        if (is_closed(c, s)) out.insert(s);
    }
    return out;
}

}  // namespace

TEST_CASE("degree-2 simplicity depends on the two free entries") {
    FieldPtr q = Field::rationals();
    SkewSet both = SkewSet::trivial(q, 2);
    CHECK(is_simple(both).simple);
    CHECK(is_simple(both).scc_count == 1);

    SkewSet none = SkewSet::trivial(q, 2);
    none.set(1, 2, 1, q->zero());
    none.set(2, 1, 2, q->zero());
    SimplicityReport r = is_simple(none);
    CHECK(!r.simple);
    CHECK(r.scc_count == 4);
    CHECK(!r.witness.empty());
    CHECK(r.witness.size() < 4);
    CHECK(is_closed(none, r.witness));

    SkewSet one = SkewSet::trivial(q, 2);
    one.set(1, 2, 1, q->zero());
    CHECK(!is_simple(one).simple);
}

TEST_CASE("closure is extensive, monotone, idempotent and closed") {
    FieldPtr f = Field::prime(3);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        SkewSet c = random_skewset(f, 3, 0.5, seed);
        PosSet s{{1, 2}};
        PosSet cl = closure(c, s);
        CHECK(std::includes(cl.begin(), cl.end(), s.begin(), s.end()));
        CHECK(is_closed(c, cl));
        CHECK(closure(c, cl) == cl);
        PosSet bigger{{1, 2}, {2, 1}};
        PosSet cl2 = closure(c, bigger);
        CHECK(std::includes(cl2.begin(), cl2.end(), cl.begin(), cl.end()));
    }
}

TEST_CASE("closure reproduces the degree-2 ideal of a nilpotent entry") {
    FieldPtr q = Field::rationals();
    SkewSet c = SkewSet::trivial(q, 2);
    c.set(1, 2, 1, q->zero());  // c121 = 0, c212 = 1
    PosSet e = closure(c, {{1, 2}});
    PosSet expect{{1, 2}, {2, 1}, {2, 2}};
    CHECK(e == expect);
    PosSet full = closure(c, {{1, 1}});
    CHECK(full.size() == 4);
}

TEST_CASE("ideal enumeration matches the brute-force lattice") {
    for (const FieldPtr& f : {Field::rationals(), Field::prime(2)})
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            SkewSet c = random_skewset(f, 3, 0.6, seed * 17);
            IdealEnumeration e = enumerate_ideals(c, 4096);
            REQUIRE(!e.truncated);
            std::set<PosSet> got(e.ideals.begin(), e.ideals.end());
            CHECK(got.size() == e.ideals.size());  // no duplicates
            CHECK(got == brute_force_ideals(c));
        }
}

TEST_CASE("enumeration honors the cap and the refusal rule") {
    FieldPtr q = Field::rationals();
    SkewSet c = SkewSet::trivial(q, 2);
    c.set(1, 2, 1, q->zero());
    c.set(2, 1, 2, q->zero());
    IdealEnumeration all = enumerate_ideals(c, 4096);
    CHECK(!all.truncated);
    CHECK(all.ideals.size() > 2);
    IdealEnumeration capped = enumerate_ideals(c, 2);
    CHECK(capped.truncated);
    CHECK(capped.ideals.size() == 2);
    // unbounded enumeration is refused for large degrees
    SkewSet big = SkewSet::trivial(q, 7);
    CHECK_THROWS_AS(enumerate_ideals(big, 0), error);
    try {
        enumerate_ideals(big, 0);
    } catch (const error& e) {
        CHECK(e.code() == errc::cap_exceeded);
    }
    // bounded enumeration of the same degree works
    CHECK(enumerate_ideals(big, 4).ideals.size() >= 2);
}

TEST_CASE("ideal squares detect the non-ideal square support") {
    FieldPtr q = Field::rationals();
    PosSet I{{1, 2}, {1, 3}, {2, 3}};
    SkewSet c = force_ideals(q, 3, {I});
    SquareReport sq = ideal_square(c, I);
    PosSet expect{{1, 3}};
    CHECK(sq.square_support == expect);
    CHECK(!sq.closed);
    // squares of the full position set stay full for the trivial table
    SkewSet t = SkewSet::trivial(q, 2);
    PosSet full{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    SquareReport sq2 = ideal_square(t, full);
    CHECK(sq2.square_support == full);
    CHECK(sq2.closed);
}

TEST_CASE("witnesses of non-simplicity are proper closed sets") {
    FieldPtr f = Field::prime(5);
    unsigned found = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        SkewSet c = random_skewset(f, 4, 0.5, seed);
        SimplicityReport r = is_simple(c);
        if (r.simple) continue;
        ++found;
        CHECK(!r.witness.empty());
        CHECK(r.witness.size() < 16);
        CHECK(is_closed(c, r.witness));
    }
    CHECK(found > 0);
}
