#include <doctest.h>

#include "fixtures.hpp"
#include "martex/cycles.hpp"
#include "martex/error.hpp"
#include "martex/enumerate.hpp"
#include "martex/erasure.hpp"
#include "martex/generators.hpp"
#include "martex/wep.hpp"

using namespace martex;

namespace {

PathFunction seeded_payoff(const Support& s, uint64_t seed) {
    SplitMix64 rng(seed);
    PathFunction f;
    for (const auto& p : s.paths())
        f[p] = Rational(static_cast<long>(rng.below(41)) - 20,
                        static_cast<long>(1 + rng.below(7)));
    return f;
}

bool residual_is_zero(const Support& s, const PathFunction& f, const WepDecomposition& d) {
    for (const auto& [p, r] : decomposition_residual(s, f, d))
        if (!r.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("wep rank oracle") {
    SUBCASE("binomial mesh holds") {
        Support s({{Rational(1), Rational(1, 2)}, {Rational(1), Rational(3, 2)}});
        CHECK(wep_holds(s).holds);
    }
    SUBCASE("shared triple fails with a replayable witness") {
        Support s = fixtures::shared_triple_support();
        auto r = wep_holds(s);
        CHECK(!r.holds);
        CHECK(r.rank == 5);
        REQUIRE(r.cokernel_witness);
        CHECK(annihilates_families(s, *r.cokernel_witness));
    }
    SUBCASE("free-cycle pattern fails with rank deficiency") {
        Support s = fixtures::free_cycle_support();
        auto r = wep_holds(s);
        CHECK(!r.holds);
        CHECK(r.rank < 10);
        REQUIRE(r.cokernel_witness);
        CHECK(annihilates_families(s, *r.cokernel_witness));
    }
    SUBCASE("empty support holds vacuously") {
        CHECK(wep_holds(Support()).holds);
    }
}

TEST_CASE("binomial mesh decomposition matches the closed form") {
    Rational x(1), y1(1, 2), y2(3, 2);
    Support s({{x, y1}, {x, y2}});
    PathFunction f{{{x, y1}, Rational(7, 3)}, {{x, y2}, Rational(-2)}};
    auto result = wep_decompose(s, f);
    auto* d = std::get_if<WepDecomposition>(&result);
    REQUIRE(d);
    CHECK(d->psi.at(y1) == Rational(0));
    CHECK(d->psi.at(y2) == Rational(0));
    CHECK(d->h.at(x) == (f.at({x, y1}) - f.at({x, y2})) / (y1 - y2));
    Rational phi_expected = (x - y2) / (y1 - y2) * f.at({x, y1}) +
                            (y1 - x) / (y1 - y2) * f.at({x, y2});
    CHECK(d->phi.at(x) == phi_expected);
    CHECK(residual_is_zero(s, f, *d));
}

TEST_CASE("zero payoff decomposes to the zero triple") {
    Support s = fixtures::binomial_tree_support();
    PathFunction zero;
    for (const auto& p : s.paths()) zero[p] = Rational(0);
    auto result = wep_decompose(s, zero);
    auto* d = std::get_if<WepDecomposition>(&result);
    REQUIRE(d);
    for (const auto& [x, v] : d->phi) CHECK(v.is_zero());
    for (const auto& [x, v] : d->h) CHECK(v.is_zero());
    for (const auto& [y, v] : d->psi) CHECK(v.is_zero());
}

TEST_CASE("opposing increment ratios on a shared triple are not replicable") {
    // f(x1, .) has strictly convex increments over the shared triple and
    // f(x2, .) strictly concave ones; replication would force psi into two
    // contradictory increment-ratio orderings
    Support s = fixtures::shared_triple_support();
    Rational x1(3, 2), x2(2);
    PathFunction f;
    for (long y = 1; y <= 3; ++y) {
        f[{x1, Rational(y)}] = Rational((y - 1) * (y - 1));
        f[{x2, Rational(y)}] = -Rational((y - 1) * (y - 1));
    }
    auto result = wep_decompose(s, f);
    auto* cert = std::get_if<WepInfeasibility>(&result);
    REQUIRE(cert);
    CHECK(annihilates_families(s, cert->dual));
    CHECK(!cert->pairing.is_zero());
}

TEST_CASE("missing-path indicator on the shared triple is not replicable") {
    Support s = fixtures::shared_triple_support();
    PathFunction f;
    for (const auto& p : s.paths()) f[p] = Rational(0);
    f[{Rational(2), Rational(3)}] = Rational(1); // indicator of a single path
    auto result = wep_decompose(s, f);
    auto* cert = std::get_if<WepInfeasibility>(&result);
    REQUIRE(cert);
    CHECK(!cert->pairing.is_zero());
    CHECK(annihilates_families(s, cert->dual));
    Rational pairing;
    for (const auto& [p, z] : cert->dual) pairing += z * f.at(p);
    CHECK(pairing == cert->pairing);
}

TEST_CASE("payoff domain must cover the support") {
    Support s = fixtures::binomial_tree_support();
    PathFunction partial;
    partial[s.paths()[0]] = Rational(1);
    CHECK_THROWS_AS(wep_decompose(s, partial), Error);
}

TEST_CASE("decomposition replay on every wep-holding support of the (3,4) grid") {
    size_t holding = 0;
    enumerate_supports(default_grid(3, 4), [&](const Support& s) {
        if (!wep_holds(s).holds) return;
        ++holding;
        auto f = seeded_payoff(s, 1000 + holding);
        auto result = wep_decompose(s, f);
        auto* d = std::get_if<WepDecomposition>(&result);
        REQUIRE(d);
        CHECK(residual_is_zero(s, f, *d));
    });
    CHECK(holding > 100);
}

TEST_CASE("a 4x6 pattern holding the replication property without a 2-link ordering") {
    // two 2-nets (sections sharing a pair each) joined by exactly two
    // links; peeling stalls on every x, yet the rank is full, so the
    // decomposition must go through the dense solver
    std::vector<std::vector<long>> sections{{1, 2, 3}, {1, 2, 4}, {5, 6, 3}, {5, 6, 4}};
    std::vector<Path> paths;
    for (size_t i = 0; i < sections.size(); ++i)
        for (long y : sections[i])
            paths.push_back({Rational(static_cast<long>(2 * i + 3), 2), Rational(y)});
    Support s(paths);

    CHECK(!find_2link_ordering(s));
    CHECK(!erasure_fixpoint(s).fully_erasable);
    CHECK(intersection_screen(s).empty());
    auto wep = wep_holds(s);
    CHECK(wep.holds);
    CHECK(wep.rank == 12);
    CHECK(is_2net(s)); // the pattern is itself a 2-net

    auto f = seeded_payoff(s, 424242);
    auto result = wep_decompose(s, f);
    auto* d = std::get_if<WepDecomposition>(&result);
    REQUIRE(d);
    CHECK(residual_is_zero(s, f, *d));

    auto sat = verify_saturation_theorem(s);
    CHECK(sat.wep);
    CHECK(!sat.theorem_violated);

    auto q = canonical_coupling(s);
    REQUIRE(q);
    CHECK(extremality_kernel(*q).extremal);
}

TEST_CASE("necessary conditions and implications on the (3,4) grid") {
    enumerate_supports(default_grid(3, 4), [&](const Support& s) {
        bool wep = wep_holds(s).holds;
        if (wep) CHECK(intersection_screen(s).empty());   // intersection bound
        bool two_link = find_2link_ordering(s).has_value();
        if (two_link) CHECK(wep);                          // 2-link is sufficient
        bool erasable = erasure_fixpoint(s).fully_erasable;
        if (erasable) CHECK(wep);                          // erasability is sufficient
        CHECK(wep == erasable);                            // |S_Y| <= 5 equivalence
    });
}

TEST_CASE("extended intersection bound for found 2-nets") {
    enumerate_supports(default_grid(3, 4), [&](const Support& s) {
        if (!wep_holds(s).holds) return;
        for (const auto& net : grow_2nets(s)) {
            for (const auto& z : s.x_points()) {
                if (net.paths.contains_x(z)) continue;
                size_t hits = 0;
                for (const auto& y : s.y_section(z))
                    if (net.paths.contains_y(y)) ++hits;
                CHECK(hits <= 2);
            }
        }
    });
}

TEST_CASE("saturation theorem cross-check") {
    SUBCASE("two-x chain: wep holds, nets saturated") {
        Support s({{Rational(3, 2), Rational(1)}, {Rational(3, 2), Rational(2)},
                   {Rational(5, 2), Rational(2)}, {Rational(5, 2), Rational(3)}});
        auto r = verify_saturation_theorem(s);
        CHECK(r.wep);
        CHECK(r.all_saturated);
        CHECK(!r.theorem_violated);
    }
    SUBCASE("shared triple: wep fails and a non-saturated net is exhibited") {
        auto r = verify_saturation_theorem(fixtures::shared_triple_support());
        CHECK(!r.wep);
        CHECK(!r.all_saturated);
        REQUIRE(r.non_saturated_net);
        CHECK(!r.missing_paths.empty());
        CHECK(!r.theorem_violated);
    }
    SUBCASE("empty support is vacuously consistent") {
        auto r = verify_saturation_theorem(Support());
        CHECK(r.wep);
        CHECK(r.all_saturated);
    }
    SUBCASE("never violated on the (3,4) grid") {
        enumerate_supports(default_grid(3, 4), [&](const Support& s) {
            CHECK(!verify_saturation_theorem(s).theorem_violated);
        });
    }
}
