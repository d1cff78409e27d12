#include <doctest.h>

#include "fixtures.hpp"
#include "martex/enumerate.hpp"
#include "martex/erasure.hpp"
#include "martex/generators.hpp"

using namespace martex;

TEST_CASE("erase_once applies its predicate against the input set") {
    SUBCASE("single trinomial mesh: E1x clears everything") {
        Support s({{Rational(2), Rational(1)}, {Rational(2), Rational(2)},
                   {Rational(2), Rational(3)}});
        CHECK(erase_once(s, EraseOp::E1x).empty());
        // E2y does not touch a 3-point section
        CHECK(erase_once(s, EraseOp::E2y) == s);
    }
    SUBCASE("binomial mesh with both leaves shared: E2y removes the mesh") {
        // x = 2 has a 2-point section; both its leaves also belong to x = 4
        Support s({{Rational(2), Rational(1)}, {Rational(2), Rational(3)},
                   {Rational(4), Rational(1)}, {Rational(4), Rational(3)},
                   {Rational(4), Rational(8)}});
        Support after = erase_once(s, EraseOp::E2y);
        CHECK(!after.contains({Rational(2), Rational(1)}));
        CHECK(!after.contains({Rational(2), Rational(3)}));
        CHECK(after.contains({Rational(4), Rational(1)}));
    }
    SUBCASE("free-cycle pattern is a fixpoint of every operator") {
        Support s = fixtures::free_cycle_support();
        CHECK(erase_once(s, EraseOp::E1x) == s);
        CHECK(erase_once(s, EraseOp::E1y) == s);
        CHECK(erase_once(s, EraseOp::E2y) == s);
    }
}

TEST_CASE("erasure fixpoint") {
    SUBCASE("trinomial pattern erases completely") {
        auto trace = erasure_fixpoint(gen_hk_trinomial(fixtures::hk_two_inner()));
        CHECK(trace.fully_erasable);
        CHECK(trace.fixpoint.empty());
    }
    SUBCASE("free-cycle pattern is its own fixpoint") {
        Support s = fixtures::free_cycle_support();
        auto trace = erasure_fixpoint(s);
        CHECK(!trace.fully_erasable);
        CHECK(trace.fixpoint == s);
        CHECK(trace.steps.empty());
    }
    SUBCASE("empty support erases in zero steps") {
        auto trace = erasure_fixpoint(Support());
        CHECK(trace.fully_erasable);
        CHECK(trace.steps.empty());
    }
    SUBCASE("traces replay") {
        for (const Support& s : {fixtures::binomial_tree_support(),
                                 fixtures::shared_triple_support(),
                                 fixtures::free_cycle_support(),
                                 gen_hk_trinomial(fixtures::hk_two_inner())}) {
            auto trace = erasure_fixpoint(s);
            CHECK(replay_erasure(s, trace));
        }
    }
    SUBCASE("a tampered trace does not replay") {
        Support s = fixtures::binomial_tree_support();
        auto trace = erasure_fixpoint(s);
        REQUIRE(!trace.steps.empty());
        trace.steps[0].removed.pop_back();
        CHECK(!replay_erasure(s, trace));
    }
}

TEST_CASE("k-erased predicates") {
    CHECK(is_k_erased(fixtures::binomial_tree_support(), 1));
    CHECK(!is_k_erased(fixtures::binomial_tree_support(), 2));
    CHECK(is_k_erased(fixtures::free_cycle_support(), 2));
    Support lonely({{Rational(1), Rational(1)}, {Rational(2), Rational(1)},
                    {Rational(2), Rational(3)}});
    CHECK(!is_k_erased(lonely, 1)); // |Y(1)| = 1
}

TEST_CASE("2-link ordering search") {
    SUBCASE("trinomial pattern has an ordering") {
        Support s = gen_hk_trinomial(fixtures::hk_two_inner());
        auto ordering = find_2link_ordering(s);
        REQUIRE(ordering);
        CHECK(verify_2link_ordering(s, *ordering));
    }
    SUBCASE("binomial tree: any order works, peeling finds one") {
        Support s = fixtures::binomial_tree_support();
        auto ordering = find_2link_ordering(s);
        REQUIRE(ordering);
        CHECK(verify_2link_ordering(s, *ordering));
    }
    SUBCASE("shared triple has none") {
        Support s = fixtures::shared_triple_support();
        CHECK(!find_2link_ordering(s));
        // exhaustive: both numberings of the two x points fail directly
        CHECK(!verify_2link_ordering(s, TwoLinkOrdering{{Rational(3, 2), Rational(2)}}));
        CHECK(!verify_2link_ordering(s, TwoLinkOrdering{{Rational(2), Rational(3, 2)}}));
    }
    SUBCASE("free-cycle pattern has none") {
        CHECK(!find_2link_ordering(fixtures::free_cycle_support()));
    }
}

TEST_CASE("2-link property matches full erasability") {
    SUBCASE("exhaustive on the (3, 4) grid") {
        enumerate_supports(default_grid(3, 4), [](const Support& s) {
            bool two_link = find_2link_ordering(s).has_value();
            bool erasable = erasure_fixpoint(s).fully_erasable;
            CHECK(two_link == erasable);
        });
    }
    SUBCASE("sampled up to (5, 6) sections") {
        SplitMix64 rng(77);
        for (int trial = 0; trial < 400; ++trial) {
            std::vector<Path> paths;
            size_t nx = 1 + rng.below(5), ny = 2 + rng.below(5);
            for (size_t i = 0; i < nx; ++i)
                for (size_t j = 0; j < ny; ++j)
                    if (rng.below(100) < 45)
                        paths.push_back({Rational(static_cast<long>(2 * i + 1), 2),
                                         Rational(static_cast<long>(j + 1))});
            if (paths.empty()) continue;
            Support s(std::move(paths));
            bool two_link = find_2link_ordering(s).has_value();
            bool erasable = erasure_fixpoint(s).fully_erasable;
            CHECK(two_link == erasable);
        }
    }
}
