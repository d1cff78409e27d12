#include <doctest.h>

#include "martex/error.hpp"
#include "martex/measure.hpp"

#include <vector>

using namespace martex;

namespace {

DiscreteMeasure symmetric_pair() {
    return DiscreteMeasure({{Rational(1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(1, 2)}});
}

// all measures on points {1, 2, 3} with masses in quarters
std::vector<DiscreteMeasure> quarter_family() {
    std::vector<DiscreteMeasure> out;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) {
            int c = 4 - a - b;
            std::vector<DiscreteMeasure::Atom> atoms;
            if (a) atoms.push_back({Rational(1), Rational(a, 4)});
            if (b) atoms.push_back({Rational(2), Rational(b, 4)});
            if (c) atoms.push_back({Rational(3), Rational(c, 4)});
            out.push_back(DiscreteMeasure(atoms));
        }
    return out;
}

} // namespace

TEST_CASE("measure canonicalization") {
    DiscreteMeasure m({{Rational(2), Rational(1, 4)},
                       {Rational(1), Rational(1, 2)},
                       {Rational(2), Rational(1, 4)}});
    REQUIRE(m.size() == 2);
    CHECK(m.atoms()[0].point == Rational(1));
    CHECK(m.atoms()[1].mass == Rational(1, 2)); // merged duplicates
    CHECK(m.mass_at(Rational(2)) == Rational(1, 2));
    CHECK(m.mass_at(Rational(7)) == Rational(0));

    CHECK_THROWS_AS(DiscreteMeasure({{Rational(1), Rational(1, 2)}}), Error); // mass 1/2 != 1
    CHECK_THROWS_AS(DiscreteMeasure({{Rational(0), Rational(1)}}), Error);    // point at 0
    CHECK_THROWS_AS(DiscreteMeasure({{Rational(1), Rational(0)}}), Error);    // zero mass
}

TEST_CASE("mean") {
    CHECK(mean(DiscreteMeasure::point_mass(Rational(1))) == Rational(1));
    CHECK(mean(symmetric_pair()) == Rational(1));
    DiscreteMeasure m({{Rational(1), Rational(1, 3)}, {Rational(4), Rational(2, 3)}});
    CHECK(mean(m) == Rational(3));
}

TEST_CASE("call price") {
    auto delta1 = DiscreteMeasure::point_mass(Rational(1));
    CHECK(call_price(delta1, Rational(1)) == Rational(0));
    CHECK(call_price(symmetric_pair(), Rational(1)) == Rational(1, 4));
    CHECK(call_price(delta1, Rational(0)) == Rational(1));
}

TEST_CASE("convex order decisions") {
    auto delta1 = DiscreteMeasure::point_mass(Rational(1));
    auto pair = symmetric_pair();

    CHECK(check_convex_order(delta1, pair).holds);  // dilation of a point mass
    CHECK(check_convex_order(pair, pair).holds);    // reflexivity

    auto r = check_convex_order(pair, delta1);
    CHECK(!r.holds);
    REQUIRE(r.witness);
    CHECK(*r.witness == Rational(1)); // call(pair, 1) = 1/4 > 0 = call(delta1, 1)

    auto shifted = DiscreteMeasure::point_mass(Rational(2));
    auto mm = check_convex_order(delta1, shifted);
    CHECK(!mm.holds);
    CHECK(mm.mean_mismatch);
}

TEST_CASE("call price is convex and non-increasing in the strike") {
    auto family = quarter_family();
    std::vector<Rational> grid;
    for (int k = 0; k <= 8; ++k) grid.push_back(Rational(k, 2));
    for (const auto& m : family) {
        for (size_t i = 0; i + 2 < grid.size(); ++i) {
            Rational c1 = call_price(m, grid[i]);
            Rational c2 = call_price(m, grid[i + 1]);
            Rational c3 = call_price(m, grid[i + 2]);
            CHECK(c2 >= c3);
            // midpoint convexity on the equispaced triple
            CHECK(c1 + c3 >= Rational(2) * c2);
        }
    }
}

TEST_CASE("convex order is antisymmetric and transitive on the quarter family") {
    auto family = quarter_family();
    for (const auto& a : family)
        for (const auto& b : family) {
            bool ab = check_convex_order(a, b).holds;
            bool ba = check_convex_order(b, a).holds;
            if (ab && ba) CHECK(a == b);
        }
    for (const auto& a : family)
        for (const auto& b : family) {
            if (!check_convex_order(a, b).holds) continue;
            for (const auto& c : family)
                if (check_convex_order(b, c).holds) CHECK(check_convex_order(a, c).holds);
        }
}
