#include <doctest.h>

#include "martex/enumerate.hpp"
#include "martex/cycles.hpp"
#include "martex/instance.hpp"

#include <json.hpp>

using namespace martex;

TEST_CASE("zero budget is an empty run") {
    FuzzConfig config;
    config.exhaustive = false;
    config.budget = 0;
    auto summary = run_fuzz(config);
    CHECK(summary.instances == 0);
    CHECK(summary.violations.empty());
    CHECK(summary.conjecture_log.empty());
}

TEST_CASE("exhaustive runs visit every support plus the two fixtures") {
    FuzzConfig config;
    config.max_x = 2;
    config.max_y = 3;
    config.exhaustive = true;
    auto summary = run_fuzz(config);
    CHECK(summary.instances == count_supports(default_grid(2, 3)) + 2);
    CHECK(summary.violations.empty());
    // the built-in fixtures are non-extremal, so not everything is extremal
    CHECK(summary.extremal + 2 <= summary.instances);
}

TEST_CASE("sampled run at the (4,6) cap: implications hold, threads agree") {
    FuzzConfig config;
    config.max_x = 4;
    config.max_y = 6;
    config.budget = 250;
    config.seed = 31;
    auto a = run_fuzz(config);
    CHECK(a.instances == 252);
    CHECK(a.violations.empty());

    config.threads = 3;
    auto b = run_fuzz(config);
    CHECK(b.instances == a.instances);
    CHECK(b.wep == a.wep);
    CHECK(b.extremal == a.extremal);
    CHECK(b.fully_erasable == a.fully_erasable);
    CHECK(b.pools_found == a.pools_found);
    CHECK(b.conjecture_log.size() == a.conjecture_log.size());
}

TEST_CASE("exhaustive bounds are capped") {
    FuzzConfig config;
    config.max_x = 5;
    config.max_y = 6;
    config.exhaustive = true;
    CHECK_THROWS(run_fuzz(config));
}

TEST_CASE("conjecture log lines are stable and replayable") {
    InstanceFile inst = InstanceFile::from_coupling(shared_triple_fixture());
    std::string line = conjecture_log_line(inst);
    auto doc = nlohmann::json::parse(line);
    CHECK(doc.at("reason") == "non-extremal-without-found-pool");
    InstanceFile replayed = parse_instance_json(doc.at("instance"));
    CHECK(!extremality_kernel(replayed.coupling()).extremal);
    CHECK(conjecture_log_line(replayed) == line);
}
