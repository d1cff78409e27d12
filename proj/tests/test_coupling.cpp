#include <doctest.h>

#include "fixtures.hpp"
#include "martex/coupling.hpp"
#include "martex/enumerate.hpp"
#include "martex/error.hpp"
#include "martex/generators.hpp"

using namespace martex;

namespace {

DiscreteMeasure delta1() { return DiscreteMeasure::point_mass(Rational(1)); }

DiscreteMeasure half_pair() {
    return DiscreteMeasure({{Rational(1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(1, 2)}});
}

} // namespace

TEST_CASE("the unique binomial coupling validates") {
    MartingaleCoupling q({{{Rational(1), Rational(1, 2)}, Rational(1, 2)},
                          {{Rational(1), Rational(3, 2)}, Rational(1, 2)}},
                         delta1(), half_pair());
    auto r = validate_coupling(q);
    CHECK(r.ok);
    CHECK(r.violations.empty());

    auto row = q.kernel_row(Rational(1));
    REQUIRE(row.size() == 2);
    CHECK(row[0].second == Rational(1, 2));
}

TEST_CASE("skewed weights break the martingale and nu rows") {
    MartingaleCoupling q({{{Rational(1), Rational(1, 2)}, Rational(3, 4)},
                          {{Rational(1), Rational(3, 2)}, Rational(1, 4)}},
                         delta1(), half_pair());
    auto r = validate_coupling(q);
    CHECK(!r.ok);
    bool saw_martingale = false, saw_nu = false;
    for (const auto& v : r.violations) {
        if (v.kind == CouplingViolation::Kind::Martingale) {
            saw_martingale = true;
            CHECK(v.location == Rational(1));
            CHECK(v.lhs == Rational(3, 4)); // 3/4 * 1/2 + 1/4 * 3/2
            CHECK(v.rhs == Rational(1));
        }
        if (v.kind == CouplingViolation::Kind::NuMarginal) saw_nu = true;
    }
    CHECK(saw_martingale);
    CHECK(saw_nu);
}

TEST_CASE("mass deficit is a mu violation") {
    MartingaleCoupling q({{{Rational(1), Rational(1, 2)}, Rational(9, 20)},
                          {{Rational(1), Rational(3, 2)}, Rational(9, 20)}},
                         delta1(), half_pair());
    auto r = validate_coupling(q);
    CHECK(!r.ok);
    bool saw_mu = false;
    for (const auto& v : r.violations)
        if (v.kind == CouplingViolation::Kind::MuMarginal && v.location == Rational(1)) {
            saw_mu = true;
            CHECK(v.lhs == Rational(9, 10));
        }
    CHECK(saw_mu);
}

TEST_CASE("construction rejects nonpositive weights and duplicates") {
    CHECK_THROWS_AS(MartingaleCoupling({{{Rational(1), Rational(1, 2)}, Rational(0)},
                                        {{Rational(1), Rational(3, 2)}, Rational(1)}},
                                       delta1(), half_pair()),
                    Error);
    CHECK_THROWS_AS(MartingaleCoupling({{{Rational(1), Rational(1, 2)}, Rational(1, 2)},
                                        {{Rational(1), Rational(1, 2)}, Rational(1, 2)}},
                                       delta1(), half_pair()),
                    Error);
}

TEST_CASE("valid couplings have equal means and convex-ordered marginals") {
    // canonical couplings over a small enumeration, plus the fixtures
    std::vector<MartingaleCoupling> battery{shared_triple_fixture(), free_cycle_fixture()};
    size_t taken = 0;
    enumerate_supports(default_grid(2, 4), [&](const Support& s) {
        if (++taken % 7 != 0) return; // thin the stream
        auto q = canonical_coupling(s);
        REQUIRE(q);
        battery.push_back(*q);
    });
    for (const auto& q : battery) {
        CHECK(validate_coupling(q).ok);
        CHECK(mean(q.mu()) == mean(q.nu()));
        CHECK(check_convex_order(q.mu(), q.nu()).holds);
    }
}
