#pragma once

// Shared hand-built instances used across the unit suites.

#include "martex/generators.hpp"
#include "martex/support.hpp"

namespace martex::fixtures {

// Two x points whose sections share the full triple {1, 2, 3}: the minimal
// pattern breaking the section-intersection bound.
inline Support shared_triple_support() {
    Rational x1(3, 2), x2(2);
    std::vector<Path> paths;
    for (long y = 1; y <= 3; ++y) {
        paths.push_back({x1, Rational(y)});
        paths.push_back({x2, Rational(y)});
    }
    return Support(std::move(paths));
}

// The 10-path pattern carried by three free cycles: sections
// Y(6) = {5,6,8}, Y(4) = {1,2,5,6}, Y(3) = {1,2,8}.
inline Support free_cycle_support() {
    Rational x1(6), x2(4), x3(3);
    return Support({{x1, Rational(8)}, {x1, Rational(6)}, {x1, Rational(5)},
                    {x2, Rational(6)}, {x2, Rational(5)}, {x2, Rational(2)}, {x2, Rational(1)},
                    {x3, Rational(8)}, {x3, Rational(2)}, {x3, Rational(1)}});
}

// Binomial tree on three atoms with pairwise distinct leaves.
inline Support binomial_tree_support() {
    return Support({{Rational(2), Rational(1)}, {Rational(2), Rational(3)},
                    {Rational(5), Rational(4)}, {Rational(5), Rational(6)},
                    {Rational(8), Rational(7)}, {Rational(8), Rational(9)}});
}

// Trinomial pattern with two inner atoms, both carrying themselves.
inline HkParams hk_two_inner() {
    HkParams params;
    params.a = Rational(2);
    params.b = Rational(4);
    params.inner.push_back({Rational(5, 2), true, Rational(3, 2), Rational(6)});
    params.inner.push_back({Rational(7, 2), true, Rational(1), Rational(5)});
    params.outer = {Rational(1, 2), Rational(9)};
    return params;
}

} // namespace martex::fixtures
