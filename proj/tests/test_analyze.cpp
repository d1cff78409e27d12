#include <doctest.h>

#include "martex/analyze.hpp"
#include "martex/enumerate.hpp"
#include "martex/error.hpp"

using namespace martex;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const CheckOutcome& find_check(const AnalysisReport& report, const std::string& name) {
    for (const auto& o : report.checks)
        if (o.name == name) return o;
    throw std::runtime_error("check not in report: " + name);
}

bool all_verified(const std::vector<VerifyOutcome>& outcomes) {
    for (const auto& o : outcomes)
        if (!o.ok) return false;
    return true;
}

} // namespace

TEST_CASE("analysis of the binomial instance") {
    InstanceFile f = parse_instance(R"({
        "mu": [["1", "1"]],
        "nu": [["1/2", "1/2"], ["3/2", "1/2"]],
        "weights": [["1", "1/2", "1/2"], ["1", "3/2", "1/2"]]
    })");
    auto report = run_analysis(f, all_checks(), 0);
    CHECK(find_check(report, "convex-order").result == "holds");
    CHECK(find_check(report, "validate").result == "ok");
    CHECK(find_check(report, "2link").result == "yes");
    CHECK(find_check(report, "erasability").result == "fully-erasable");
    CHECK(find_check(report, "wep").result == "holds");
    CHECK(find_check(report, "extremality").result == "extremal");
    CHECK(find_check(report, "mesh-cycles").result == "0");
    CHECK(find_check(report, "free-pool").result == "none");
    CHECK(!report.internal_violation);
    CHECK(all_verified(verify_report(f, report_to_json(report))));
}

TEST_CASE("analysis of the shared-triple instance") {
    InstanceFile f = InstanceFile::from_coupling(shared_triple_fixture());
    auto report = run_analysis(f, all_checks(), 0);
    CHECK(find_check(report, "intersection-screen").result == "violations");
    CHECK(find_check(report, "2link").result == "no");
    CHECK(find_check(report, "wep").result == "fails");
    CHECK(!find_check(report, "wep").certificate.is_null());
    CHECK(find_check(report, "2nets-saturation").result == "non-saturated-net");
    CHECK(find_check(report, "extremality").result == "non-extremal");
    CHECK(find_check(report, "mesh-cycles").result == "2");
    CHECK(find_check(report, "free-pool").result == "found");
    CHECK(!report.internal_violation);
    CHECK(all_verified(verify_report(f, report_to_json(report))));
}

TEST_CASE("analysis of the free-cycle instance") {
    InstanceFile f = InstanceFile::from_coupling(free_cycle_fixture());
    auto report = run_analysis(f, all_checks(), 0);
    CHECK(find_check(report, "wep").result == "fails");
    CHECK(find_check(report, "erasability").result == "not-fully-erasable");
    CHECK(find_check(report, "extremality").result == "non-extremal");
    CHECK(find_check(report, "mesh-cycles").result == "0");
    CHECK(find_check(report, "free-pool").result == "found");
    CHECK(all_verified(verify_report(f, report_to_json(report))));
}

TEST_CASE("reports are deterministic bytes") {
    InstanceFile f = InstanceFile::from_coupling(shared_triple_fixture());
    auto a = report_to_json(run_analysis(f, all_checks(), 7)).dump(2);
    auto b = report_to_json(run_analysis(f, all_checks(), 7)).dump(2);
    CHECK(a == b);
}

TEST_CASE("check selection keeps the fixed order") {
    auto checks = parse_check_list("wep,convex-order,wep");
    REQUIRE(checks.size() == 2);
    CHECK(checks[0] == Check::ConvexOrder);
    CHECK(checks[1] == Check::Wep);
    CHECK_THROWS_AS(parse_check_list("nope"), Error);
}

TEST_CASE("weight-dependent checks are skipped without weights") {
    InstanceFile f;
    f.mu = {{Rational(1), Rational(1)}};
    f.nu = {{Rational(1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(1, 2)}};
    auto report = run_analysis(f, all_checks(), 0);
    CHECK(find_check(report, "validate").result == "skipped");
    CHECK(find_check(report, "extremality").result == "skipped");
    CHECK(find_check(report, "convex-order").result == "holds");
    CHECK(find_check(report, "wep").result == "skipped");
}

TEST_CASE("tampered certificates fail verification") {
    InstanceFile f = InstanceFile::from_coupling(shared_triple_fixture());
    auto report = report_to_json(run_analysis(f, all_checks(), 0));
    json tampered = report;
    for (auto& entry : tampered.at("checks")) {
        if (entry.at("name") == "extremality") {
            entry.at("certificate").at("kernel_vector")[0][2] = "999";
        }
    }
    CHECK(!all_verified(verify_report(f, tampered)));
}

TEST_CASE("validate violations replay through verify") {
    InstanceFile f = parse_instance(R"({
        "mu": [["1", "1"]],
        "nu": [["1/2", "1/2"], ["3/2", "1/2"]],
        "weights": [["1", "1/2", "3/4"], ["1", "3/2", "1/4"]]
    })");
    auto report = run_analysis(f, all_checks(), 0);
    CHECK(find_check(report, "validate").result == "fails");
    CHECK(find_check(report, "extremality").result == "skipped");
    CHECK(all_verified(verify_report(f, report_to_json(report))));
}
