#include <doctest.h>

#include "martex/enumerate.hpp"
#include "martex/error.hpp"
#include "martex/instance.hpp"

using namespace martex;

TEST_CASE("parse - serialize - parse is the identity") {
    std::string text = R"({
      "mu": [["3/2", "1/2"], ["2", "0.5"]],
      "nu": [["1", "7/16"], ["2", "3/8"], ["3", "3/16"]],
      "weights": [["3/2", "1", "5/16"], ["3/2", "2", "1/8"], ["3/2", "3", "1/16"],
                  ["2", "1", "1/8"], ["2", "2", "1/4"], ["2", "3", "1/8"]]
    })";
    InstanceFile a = parse_instance(text);
    std::string s1 = serialize_instance(a);
    InstanceFile b = parse_instance(s1);
    CHECK(serialize_instance(b) == s1);
    CHECK(a.mu == b.mu);
    CHECK(a.nu == b.nu);
    CHECK(a.weights == b.weights);
    // decimal "0.5" was converted by place value
    CHECK(a.mu[1].mass == Rational(1, 2));
}

TEST_CASE("coupling and support extraction") {
    InstanceFile f = InstanceFile::from_coupling(shared_triple_fixture());
    CHECK(f.support);
    CHECK(f.weights);
    auto q = f.coupling();
    CHECK(validate_coupling(q).ok);
    CHECK(f.support_set() == q.support());

    InstanceFile measures_only;
    measures_only.mu = f.mu;
    measures_only.nu = f.nu;
    CHECK(!measures_only.has_support());
    CHECK_THROWS_AS(measures_only.coupling(), Error);
    CHECK_THROWS_AS(measures_only.support_set(), Error);
}

TEST_CASE("malformed documents are parse errors") {
    CHECK_THROWS_AS(parse_instance("{"), Error);
    CHECK_THROWS_AS(parse_instance(R"({"mu": [["1", "1"]]})"), Error); // nu missing
    CHECK_THROWS_AS(parse_instance(R"({"mu": [["1/0", "1"]], "nu": [["1", "1"]]})"), Error);
    CHECK_THROWS_AS(parse_instance(R"({"mu": [["1", "1"]], "nu": [[1.25, "1"]]})"), Error);
    CHECK_THROWS_AS(
        parse_instance(R"({"mu": [["1", "1"]], "nu": [["1", "1"]], "weights": [["1", "1", "0"]]})"),
        Error);
    // explicit support inconsistent with the positive-weight paths
    CHECK_THROWS_AS(parse_instance(R"({
        "mu": [["1", "1"]], "nu": [["1", "1"]],
        "support": [["1", "2"]],
        "weights": [["1", "1", "1"]]
    })"),
                    Error);
}

TEST_CASE("integer JSON numbers are accepted exactly") {
    InstanceFile f = parse_instance(R"({"mu": [[1, 1]], "nu": [[1, "1"]]})");
    CHECK(f.mu[0].point == Rational(1));
}

TEST_CASE("round-trip identity across the canonical fixtures") {
    for (const auto& q : {shared_triple_fixture(), free_cycle_fixture()}) {
        InstanceFile f = InstanceFile::from_coupling(q);
        std::string s1 = serialize_instance(f);
        std::string s2 = serialize_instance(parse_instance(s1));
        CHECK(s1 == s2);
        CHECK(parse_instance(s1).coupling().weights() == q.weights());
    }
}
