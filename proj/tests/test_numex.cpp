#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wallflip/numex.hpp"

using namespace wallflip;
using namespace wallflip::testing;

TEST_CASE("surd approximants of sqrt(3) from above") {
    SurdApprox a = approximate_surd(3, 4);
    std::vector<std::pair<Int, Int>> expect = {{1, 2}, {4, 7}, {15, 26}, {56, 97}};
    CHECK(a.convergents == expect);
    for (const auto& [p, q] : a.convergents) {
        // 0 < q/p - sqrt(3) < 1/p^2, in cross-multiplied integer form
        CHECK(q * q > 3 * p * p);
        if (q * p > 1) CHECK((q * p - 1) * (q * p - 1) < 3 * p * p * p * p);
    }
    CHECK_THROWS_AS(approximate_surd(4, 1), Error);
    CHECK_THROWS_AS(approximate_surd(1, 1), Error);
    CHECK_THROWS_AS(approximate_surd(3, 0), Error);
}

TEST_CASE("surd approximants for other radicands stay exact") {
    for (int d : {2, 5, 7, 13, 61}) {
        SurdApprox a = approximate_surd(d, 3);
        REQUIRE(a.convergents.size() == 3);
        Int prev_p = 0;
        for (const auto& [p, q] : a.convergents) {
            CHECK(p > prev_p);
            prev_p = p;
            CHECK(q * q > Int(d) * p * p);
            if (q * p > 1) CHECK((q * p - 1) * (q * p - 1) < Int(d) * p * p * p * p);
        }
    }
}

TEST_CASE("pell solutions for d = 3") {
    auto sols = pell_solutions(3, 3);
    std::vector<std::pair<Int, Int>> expect = {{1, 2}, {4, 7}, {15, 26}};
    CHECK(sols == expect);

    auto more = pell_solutions(3, 4);
    CHECK(more[3] == std::pair<Int, Int>{56, 97});
    for (const auto& [p, q] : more) CHECK(q * q - 3 * p * p == 1);

    CHECK(pell_solutions(3, 0).empty());
    CHECK_THROWS_AS(pell_solutions(9, 1), Error);
}

TEST_CASE("product lattice and coordinates") {
    SurfaceLattice lat = product_abelian_lattice();
    auto w = lat.validate();
    CHECK(w.positives == 1);
    CHECK(w.negatives == 2);
    CHECK(lat.canonical().is_zero());
    CHECK(lat.chi() == 0);
    // U = E1+E2+D, V = E1-D
    CHECK(product_coordinates(1, 0) == std::vector<Int>{1, 1, 1});
    CHECK(product_coordinates(0, 1) == std::vector<Int>{1, 0, -1});
    CHECK(product_coordinates(4, 7) == std::vector<Int>{11, 4, -3});
}

TEST_CASE("remark-style unbounded family from the pell solutions") {
    NumClass probe({Rat(1), Rat(0), Rat(0)});  // U
    UnboundedFamily fam = remark17_family(5, probe);
    REQUIRE(fam.members.size() == 5);
    SurfaceLattice lat = product_abelian_lattice();

    std::vector<Rat> expect_pairings = {Rat(6), Rat(24), Rat(90), Rat(336), Rat(1254)};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& m = fam.members[i];
        CHECK(m.q * m.q - 3 * m.p * m.p == 1);
        CHECK(lat.square(m.l) == -2);
        CHECK(m.c2 == 2);
        CHECK(m.c2 > 0);
        CHECK(m.c2 < 8);
        CHECK(lat.square(m.h) == 6);
        CHECK(lat.pair(m.h, m.l) == 0);
        CHECK(m.verdict != Stability::UNSTABLE);
        CHECK(m.probe_pairing == expect_pairings[i]);
    }

    // the member (4,7): H = 7U + 12V
    const auto& m1 = fam.members[1];
    CHECK(m1.h == NumClass({Rat(7), Rat(12), Rat(0)}));
    CHECK(lat.square(m1.h) == Rat(6 * 49 - 2 * 144));

    // constant term of the reduced polynomial, per the convention used here
    CHECK(fam.reduced_constant_term == Rat(-1));

    CHECK_THROWS_AS(remark17_family(0, probe), Error);
    CHECK_THROWS_AS(remark17_family(1, NumClass({Rat(0), Rat(1), Rat(0)})), Error);
}
