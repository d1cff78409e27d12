#include "martex/analyze.hpp"

#include "martex/cycles.hpp"
#include "martex/erasure.hpp"
#include "martex/error.hpp"

#include <algorithm>
#include <sstream>

namespace martex {

using nlohmann::json;
using nlohmann::ordered_json;

const std::vector<Check>& all_checks() {
    static const std::vector<Check> order = {
        Check::ConvexOrder,  Check::Validate,   Check::IntersectionScreen,
        Check::TwoLink,      Check::Erasability, Check::Wep,
        Check::NetsSaturation, Check::Extremality, Check::MeshCycles,
        Check::FreePool,
    };
    return order;
}

std::string check_name(Check c) {
    switch (c) {
        case Check::ConvexOrder: return "convex-order";
        case Check::Validate: return "validate";
        case Check::IntersectionScreen: return "intersection-screen";
        case Check::TwoLink: return "2link";
        case Check::Erasability: return "erasability";
        case Check::Wep: return "wep";
        case Check::NetsSaturation: return "2nets-saturation";
        case Check::Extremality: return "extremality";
        case Check::MeshCycles: return "mesh-cycles";
        case Check::FreePool: return "free-pool";
    }
    return "?";
}

std::optional<Check> check_from_name(const std::string& name) {
    for (Check c : all_checks())
        if (check_name(c) == name) return c;
    return std::nullopt;
}

std::vector<Check> parse_check_list(const std::string& csv) {
    std::vector<Check> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto c = check_from_name(item);
        if (!c) throw Error("parse", "unknown check '" + item + "'");
        if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
    }
    // keep the fixed report order regardless of how the list was written
    std::vector<Check> ordered;
    for (Check c : all_checks())
        if (std::find(out.begin(), out.end(), c) != out.end()) ordered.push_back(c);
    return ordered;
}

// ---------------------------------------------------------------- encoding

namespace {

ordered_json rat_json(const Rational& r) { return r.str(); }

ordered_json path_json(const Path& p) {
    return ordered_json::array({p.x.str(), p.y.str()});
}

ordered_json paths_json(const std::vector<Path>& ps) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : ps) arr.push_back(path_json(p));
    return arr;
}

Rational rat_from(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw Error("parse", "expected a rational string");
}

Path path_from(const json& v) {
    if (!v.is_array() || v.size() != 2) throw Error("parse", "expected [x, y]");
    return {rat_from(v[0]), rat_from(v[1])};
}

std::vector<Path> paths_from(const json& v) {
    std::vector<Path> out;
    for (const auto& e : v) out.push_back(path_from(e));
    return out;
}

ordered_json cycle_json(const Cycle& c) {
    ordered_json xs = ordered_json::array(), ys = ordered_json::array();
    for (const auto& x : c.xs) xs.push_back(x.str());
    for (const auto& y : c.ys) ys.push_back(y.str());
    return ordered_json{{"xs", std::move(xs)}, {"ys", std::move(ys)}};
}

Cycle cycle_from(const json& v) {
    Cycle c;
    for (const auto& x : v.at("xs")) c.xs.push_back(rat_from(x));
    for (const auto& y : v.at("ys")) c.ys.push_back(rat_from(y));
    return c;
}

ordered_json pool_json(const CyclePool& pool) {
    ordered_json cycles = ordered_json::array();
    for (const auto& c : pool.cycles) cycles.push_back(cycle_json(c));
    ordered_json xs = ordered_json::array();
    for (const auto& x : pool.x_points) xs.push_back(x.str());
    ordered_json gamma = ordered_json::array();
    for (const auto& row : pool.gamma) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row) r.push_back(v.str());
        gamma.push_back(std::move(r));
    }
    return ordered_json{{"cycles", std::move(cycles)},
                        {"x_points", std::move(xs)},
                        {"gamma", std::move(gamma)}};
}

CyclePool pool_from(const json& v) {
    CyclePool pool;
    for (const auto& c : v.at("cycles")) pool.cycles.push_back(cycle_from(c));
    for (const auto& x : v.at("x_points")) pool.x_points.push_back(rat_from(x));
    for (const auto& row : v.at("gamma")) {
        std::vector<Rational> r;
        for (const auto& g : row) r.push_back(rat_from(g));
        pool.gamma.push_back(std::move(r));
    }
    return pool;
}

} // namespace

ordered_json path_function_to_json(const PathFunction& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& [p, v] : f)
        arr.push_back(ordered_json::array({p.x.str(), p.y.str(), v.str()}));
    return arr;
}

PathFunction path_function_from_json(const json& v) {
    PathFunction f;
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 3) throw Error("parse", "expected [x, y, value]");
        f[{rat_from(e[0]), rat_from(e[1])}] = rat_from(e[2]);
    }
    return f;
}

// ---------------------------------------------------------------- analysis

namespace {

CheckOutcome outcome(Check c, std::string result) {
    CheckOutcome o;
    o.name = check_name(c);
    o.result = std::move(result);
    o.certificate = nullptr;
    return o;
}

CheckOutcome skipped(Check c, const std::string& why) {
    auto o = outcome(c, "skipped");
    o.oracle_only = true;
    o.note = why;
    return o;
}

} // namespace

AnalysisReport run_analysis(const InstanceFile& instance, const std::vector<Check>& checks,
                            uint64_t seed) {
    AnalysisReport report;
    report.seed = seed;

    DiscreteMeasure mu = instance.mu_measure();
    DiscreteMeasure nu = instance.nu_measure();
    std::optional<Support> support;
    if (instance.has_support()) support = instance.support_set();
    std::optional<MartingaleCoupling> coupling;
    if (instance.weights) coupling = instance.coupling();
    std::optional<bool> coupling_valid;

    for (Check c : checks) {
        switch (c) {
            case Check::ConvexOrder: {
                auto r = check_convex_order(mu, nu);
                auto o = outcome(c, r.holds ? "holds" : "fails");
                if (r.holds) {
                    o.oracle_only = true;
                } else if (r.mean_mismatch) {
                    o.certificate = ordered_json{{"mean_mismatch", true},
                                                 {"mean_mu", mean(mu).str()},
                                                 {"mean_nu", mean(nu).str()}};
                } else {
                    o.certificate = ordered_json{{"witness_strike", r.witness->str()}};
                }
                report.checks.push_back(std::move(o));
                break;
            }
            case Check::Validate: {
                if (!coupling) { report.checks.push_back(skipped(c, "no weights")); break; }
                auto r = validate_coupling(*coupling);
                coupling_valid = r.ok;
                auto o = outcome(c, r.ok ? "ok" : "fails");
                if (r.ok) {
                    o.oracle_only = true;
                } else {
                    ordered_json arr = ordered_json::array();
                    for (const auto& v : r.violations)
                        arr.push_back(ordered_json{{"kind", to_string(v.kind)},
                                                   {"at", v.location.str()},
                                                   {"lhs", v.lhs.str()},
                                                   {"rhs", v.rhs.str()}});
                    o.certificate = ordered_json{{"violations", std::move(arr)}};
                }
                report.checks.push_back(std::move(o));
                break;
            }
            case Check::IntersectionScreen: {
                if (!support) { report.checks.push_back(skipped(c, "no support")); break; }
                auto viols = intersection_screen(*support);
                auto o = outcome(c, viols.empty() ? "clean" : "violations");
                if (viols.empty()) {
                    o.oracle_only = true;
                } else {
                    ordered_json arr = ordered_json::array();
                    for (const auto& v : viols) {
                        ordered_json ys = ordered_json::array();
                        for (const auto& y : v.shared_ys) ys.push_back(y.str());
                        arr.push_back(ordered_json{{"x1", v.x1.str()},
                                                   {"x2", v.x2.str()},
                                                   {"shared_ys", std::move(ys)}});
                    }
                    o.certificate = ordered_json{{"pairs", std::move(arr)}};
                }
                report.checks.push_back(std::move(o));
                break;
            }
            case Check::TwoLink: {
                if (!support) { report.checks.push_back(skipped(c, "no support")); break; }
                auto ordering = find_2link_ordering(*support);
                auto o = outcome(c, ordering ? "yes" : "no");
                if (ordering) {
                    ordered_json arr = ordered_json::array();
                    for (const auto& x : ordering->order) arr.push_back(x.str());
                    o.certificate = ordered_json{{"ordering", std::move(arr)}};
                } else {
                    o.oracle_only = true;
                    o.note = "greedy peeling stalled";
                }
                report.checks.push_back(std::move(o));
                break;
            }
            case Check::Erasability: {
                if (!support) { report.checks.push_back(skipped(c, "no support")); break; }
                auto trace = erasure_fixpoint(*support);
                auto o = outcome(c, trace.fully_erasable ? "fully-erasable" : "not-fully-erasable");
                ordered_json steps = ordered_json::array();
                for (const auto& step : trace.steps)
                    steps.push_back(ordered_json{{"op", to_string(step.op)},
                                                 {"removed", paths_json(step.removed)}});
                o.certificate = ordered_json{{"steps", std::move(steps)},
                                             {"fixpoint", paths_json(trace.fixpoint.paths())},
                                             {"fully_erasable", trace.fully_erasable}};
                report.checks.push_back(std::move(o));
                break;
            }
            case Check::Wep: {
                if (!support) { report.checks.push_back(skipped(c, "no support")); break; }
                auto r = wep_holds(*support);
                auto o = outcome(c, r.holds ? "holds" : "fails");
                o.note = "rank " + std::to_string(r.rank) + " of " + std::to_string(support->size());
                if (r.holds) {
                    o.oracle_only = true;
                } else {
                    o.certificate =
                        ordered_json{{"cokernel_witness", path_function_to_json(*r.cokernel_witness)}};
                }
                report.checks.push_back(std::move(o));
                break;
            }
            case Check::NetsSaturation: {
                if (!support) { report.checks.push_back(skipped(c, "no support")); break; }
                // work on the erasure fixpoint, which is 1-erased and
                // carries the same WEP verdict as the input
                Support base = erasure_fixpoint(*support).fixpoint;
                if (base.empty()) {
                    auto o = outcome(c, "consistent");
                    o.oracle_only = true;
                    o.note = "erasure fixpoint empty";
                    report.checks.push_back(std::move(o));
                    break;
                }
                auto r = verify_saturation_theorem(base);
                CheckOutcome o;
                if (r.theorem_violated) {
                    o = outcome(c, "theorem-violated");
                    report.internal_violation = true;
                } else if (!r.all_saturated) {
                    o = outcome(c, "non-saturated-net");
                    o.certificate = ordered_json{
                        {"net", paths_json(r.non_saturated_net->paths.paths())},
                        {"missing", paths_json(r.missing_paths)}};
                } else {
                    o = outcome(c, "consistent");
                    o.oracle_only = true;
                    if (r.search_incomplete_hint)
                        o.note = "wep fails but all found nets saturated (net search is best-effort)";
                }
                if (o.note.empty())
                    o.note = std::to_string(r.nets_examined) + " nets examined on the fixpoint";
                report.checks.push_back(std::move(o));
                break;
            }
            case Check::Extremality: {
                if (!coupling) { report.checks.push_back(skipped(c, "no weights")); break; }
                if (!coupling_valid) coupling_valid = validate_coupling(*coupling).ok;
                if (!*coupling_valid) {
                    report.checks.push_back(skipped(c, "coupling fails validation"));
                    break;
                }
                auto r = extremality_kernel(*coupling);
                auto o = outcome(c, r.extremal ? "extremal" : "non-extremal");
                o.note = "kernel dimension " + std::to_string(r.kernel_basis.size());
                if (r.extremal) {
                    o.oracle_only = true;
                } else {
                    ordered_json arr = ordered_json::array();
                    for (const auto& [p, v] : r.kernel_basis.front())
                        arr.push_back(ordered_json::array({p.x.str(), p.y.str(), v.str()}));
                    o.certificate = ordered_json{{"kernel_vector", std::move(arr)}};
                }
                report.checks.push_back(std::move(o));
                break;
            }
            case Check::MeshCycles: {
                if (!support) { report.checks.push_back(skipped(c, "no support")); break; }
                auto cycles = find_mesh_cycles(*support);
                auto o = outcome(c, std::to_string(cycles.size()));
                if (cycles.empty()) {
                    o.oracle_only = true;
                } else {
                    ordered_json arr = ordered_json::array();
                    for (const auto& mc : cycles) {
                        ordered_json meshes = ordered_json::array();
                        for (const auto& m : mc.meshes)
                            meshes.push_back(ordered_json::array(
                                {m.x.str(), m.ys[0].str(), m.ys[1].str()}));
                        arr.push_back(std::move(meshes));
                    }
                    o.certificate = ordered_json{{"cycles", std::move(arr)}};
                }
                report.checks.push_back(std::move(o));
                break;
            }
            case Check::FreePool: {
                if (!support) { report.checks.push_back(skipped(c, "no support")); break; }
                auto pool = find_free_pool(*support);
                auto o = outcome(c, pool ? "found" : "none");
                if (pool) {
                    o.certificate = ordered_json{{"pool", pool_json(*pool)}};
                } else {
                    o.oracle_only = true;
                    o.note = "bounded search; absence is not proved";
                }
                report.checks.push_back(std::move(o));
                break;
            }
        }
    }
    return report;
}

ordered_json report_to_json(const AnalysisReport& report) {
    ordered_json doc;
    doc["kind"] = "analysis";
    doc["tool"] = "martex";
    doc["version"] = "0.1.0";
    doc["seed"] = report.seed;
    ordered_json checks = ordered_json::array();
    for (const auto& o : report.checks) {
        ordered_json entry;
        entry["name"] = o.name;
        entry["result"] = o.result;
        entry["certificate"] = o.certificate.is_null()
                                   ? ordered_json(nullptr)
                                   : o.certificate;
        entry["oracle_only"] = o.oracle_only;
        if (!o.note.empty()) entry["note"] = o.note;
        checks.push_back(std::move(entry));
    }
    doc["checks"] = std::move(checks);
    return doc;
}

std::string report_to_text(const AnalysisReport& report) {
    std::ostringstream out;
    for (const auto& o : report.checks) {
        out << o.name << ": " << o.result;
        if (!o.note.empty()) out << "  (" << o.note << ")";
        if (o.oracle_only && o.result != "skipped") out << "  [no-certificate (oracle-only)]";
        out << "\n";
    }
    return out.str();
}

// ------------------------------------------------------------------ verify

namespace {

void expect(std::vector<VerifyOutcome>& out, const std::string& item, bool ok,
            const std::string& detail = "") {
    out.push_back({item, ok, detail});
}

bool nonzero(const PathFunction& v) {
    for (const auto& [p, val] : v)
        if (!val.is_zero()) return true;
    return false;
}

void verify_analysis_checks(const InstanceFile& instance, const json& report,
                            std::vector<VerifyOutcome>& out) {
    DiscreteMeasure mu = instance.mu_measure();
    DiscreteMeasure nu = instance.nu_measure();
    std::optional<Support> support;
    if (instance.has_support()) support = instance.support_set();

    for (const auto& entry : report.at("checks")) {
        std::string name = entry.at("name").get<std::string>();
        std::string result = entry.at("result").get<std::string>();
        const json& cert = entry.at("certificate");
        if (cert.is_null()) continue; // oracle-only or skipped

        if (name == "convex-order") {
            if (cert.contains("mean_mismatch")) {
                expect(out, name, mean(mu) != mean(nu), "means must differ");
            } else {
                Rational k = rat_from(cert.at("witness_strike"));
                expect(out, name, call_price(mu, k) > call_price(nu, k),
                       "witness strike must violate the call dominance");
            }
        } else if (name == "validate") {
            if (!instance.weights) { expect(out, name, false, "no weights to check"); continue; }
            auto q = instance.coupling();
            bool ok = true;
            for (const auto& v : cert.at("violations")) {
                std::string kind = v.at("kind").get<std::string>();
                Rational at = rat_from(v.at("at"));
                Rational lhs = rat_from(v.at("lhs"));
                Rational rhs = rat_from(v.at("rhs"));
                Rational sum, moment;
                for (const auto& w : q.weights()) {
                    if (kind == "nu-marginal" && w.path.y == at) sum += w.weight;
                    if (kind != "nu-marginal" && w.path.x == at) {
                        sum += w.weight;
                        moment += w.weight * w.path.y;
                    }
                }
                if (kind == "mu-marginal") ok &= (lhs == sum && rhs == q.mu().mass_at(at) && lhs != rhs);
                else if (kind == "nu-marginal") ok &= (lhs == sum && rhs == q.nu().mass_at(at) && lhs != rhs);
                else if (kind == "martingale") ok &= (lhs == moment && rhs == at * sum && lhs != rhs);
                else ok = false;
            }
            expect(out, name, ok, "each violation must replay exactly");
        } else if (name == "intersection-screen") {
            if (!support) { expect(out, name, false, "no support"); continue; }
            bool ok = true;
            for (const auto& pair : cert.at("pairs")) {
                Rational x1 = rat_from(pair.at("x1"));
                Rational x2 = rat_from(pair.at("x2"));
                std::vector<Rational> claimed;
                for (const auto& y : pair.at("shared_ys")) claimed.push_back(rat_from(y));
                std::vector<Rational> actual;
                const auto& a = support->y_section(x1);
                const auto& b = support->y_section(x2);
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(actual));
                ok &= (claimed == actual && claimed.size() >= 3);
            }
            expect(out, name, ok, "shared sections must recount to >= 3");
        } else if (name == "2link") {
            if (!support) { expect(out, name, false, "no support"); continue; }
            TwoLinkOrdering ordering;
            for (const auto& x : cert.at("ordering")) ordering.order.push_back(rat_from(x));
            expect(out, name, verify_2link_ordering(*support, ordering),
                   "ordering must satisfy the prefix-intersection bound");
        } else if (name == "erasability") {
            if (!support) { expect(out, name, false, "no support"); continue; }
            ErasureTrace trace;
            for (const auto& step : cert.at("steps")) {
                auto op = erase_op_from_string(step.at("op").get<std::string>());
                if (!op) { expect(out, name, false, "unknown operator"); continue; }
                trace.steps.push_back({*op, paths_from(step.at("removed"))});
            }
            auto fixpoint_paths = paths_from(cert.at("fixpoint"));
            trace.fixpoint = fixpoint_paths.empty() ? Support() : Support(fixpoint_paths);
            trace.fully_erasable = cert.at("fully_erasable").get<bool>();
            bool ok = replay_erasure(*support, trace) &&
                      trace.fully_erasable == (result == "fully-erasable");
            expect(out, name, ok, "trace must replay to the recorded fixpoint");
        } else if (name == "wep") {
            if (!support) { expect(out, name, false, "no support"); continue; }
            PathFunction witness = path_function_from_json(cert.at("cokernel_witness"));
            bool ok = nonzero(witness) && annihilates_families(*support, witness);
            for (const auto& [p, v] : witness) ok &= support->contains(p);
            expect(out, name, ok, "cokernel witness must annihilate the replication image");
        } else if (name == "2nets-saturation") {
            if (!support) { expect(out, name, false, "no support"); continue; }
            Support base = erasure_fixpoint(*support).fixpoint;
            Support net(paths_from(cert.at("net")));
            auto missing = paths_from(cert.at("missing"));
            bool ok = !missing.empty() && is_k_erased(net, 1) && is_2net(net);
            for (const auto& p : net.paths()) ok &= base.contains(p);
            for (const auto& p : missing)
                ok &= base.contains(p) && !net.contains(p) && net.contains_x(p.x) &&
                      net.contains_y(p.y);
            expect(out, name, ok, "net must be a non-saturated 2-net of the erasure fixpoint");
        } else if (name == "extremality") {
            if (!instance.weights) { expect(out, name, false, "no weights"); continue; }
            auto q = instance.coupling();
            PathFunction v = path_function_from_json(cert.at("kernel_vector"));
            bool ok = nonzero(v) && annihilates_families(q.support(), v);
            for (const auto& [p, val] : v) ok &= q.support().contains(p);
            expect(out, name, ok, "kernel vector must annihilate all constraint families");
        } else if (name == "mesh-cycles") {
            if (!support) { expect(out, name, false, "no support"); continue; }
            bool ok = true;
            size_t n = 0;
            for (const auto& mc_json : cert.at("cycles")) {
                MeshCycle mc;
                for (const auto& m : mc_json)
                    mc.meshes.push_back(Mesh{rat_from(m[0]), {rat_from(m[1]), rat_from(m[2])}});
                ok &= verify_mesh_cycle(*support, mc);
                ++n;
            }
            expect(out, name, ok && n > 0, "each mesh cycle must alternate and live in S");
        } else if (name == "free-pool") {
            if (!support) { expect(out, name, false, "no support"); continue; }
            CyclePool pool = pool_from(cert.at("pool"));
            expect(out, name, verify_pool(*support, pool),
                   "pool must satisfy the x-count and freeness conditions");
        }
    }
}

void verify_decomposition(const InstanceFile& instance, const json& report,
                          std::vector<VerifyOutcome>& out) {
    Support s = instance.support_set();
    PathFunction payoff = path_function_from_json(report.at("payoff"));
    for (const auto& p : s.paths())
        if (!payoff.count(p)) { expect(out, "payoff", false, "payoff must cover the support"); return; }

    if (report.contains("decomposition")) {
        const json& d = report.at("decomposition");
        WepDecomposition dec;
        for (const auto& e : d.at("phi")) dec.phi[rat_from(e[0])] = rat_from(e[1]);
        for (const auto& e : d.at("h")) dec.h[rat_from(e[0])] = rat_from(e[1]);
        for (const auto& e : d.at("psi")) dec.psi[rat_from(e[0])] = rat_from(e[1]);
        bool ok = true;
        try {
            for (const auto& [p, r] : decomposition_residual(s, payoff, dec))
                ok &= r.is_zero();
        } catch (const std::out_of_range&) {
            ok = false;
        }
        expect(out, "decomposition", ok, "replay residual must vanish on every path");
    } else if (report.contains("infeasibility")) {
        const json& cert = report.at("infeasibility");
        PathFunction dual = path_function_from_json(cert.at("dual"));
        Rational pairing = rat_from(cert.at("pairing"));
        Rational got;
        for (const auto& [p, z] : dual) got += z * payoff.at(p);
        bool ok = nonzero(dual) && annihilates_families(s, dual) && got == pairing &&
                  !pairing.is_zero();
        expect(out, "infeasibility", ok,
               "dual must annihilate the image and pair nonzero with the payoff");
    } else {
        expect(out, "decomposition", false, "report carries neither triple nor certificate");
    }
}

void verify_perturbation(const InstanceFile& instance, const json& report,
                         std::vector<VerifyOutcome>& out) {
    MartingaleCoupling q = instance.coupling();
    CyclePool pool = pool_from(report.at("pool"));
    expect(out, "pool", verify_pool(q.support(), pool), "pool conditions on supp(Q)");

    auto parse_weights = [&](const json& v) {
        std::vector<WeightedPath> ws;
        for (const auto& e : v)
            ws.push_back({{rat_from(e[0]), rat_from(e[1])}, rat_from(e[2])});
        return ws;
    };
    MartingaleCoupling q1(parse_weights(report.at("q1")), q.mu(), q.nu());
    MartingaleCoupling q2(parse_weights(report.at("q2")), q.mu(), q.nu());
    expect(out, "q1", validate_coupling(q1).ok, "q1 must lie in M(mu, nu)");
    expect(out, "q2", validate_coupling(q2).ok, "q2 must lie in M(mu, nu)");

    bool midpoint = q1.support() == q.support() && q2.support() == q.support();
    if (midpoint)
        for (const auto& w : q.weights())
            midpoint &= q1.weight_at(w.path) + q2.weight_at(w.path) == Rational(2) * w.weight;
    expect(out, "midpoint", midpoint, "(q1 + q2) / 2 must equal the input weights");

    bool distinct = false;
    for (const auto& w : q.weights())
        if (q1.weight_at(w.path) != w.weight) distinct = true;
    expect(out, "nonzero", distinct, "the perturbation must move at least one weight");
}

} // namespace

std::vector<VerifyOutcome> verify_report(const InstanceFile& instance, const json& report) {
    std::vector<VerifyOutcome> out;
    if (!report.is_object() || !report.contains("kind"))
        throw Error("parse", "report must be an object with a 'kind' field");
    std::string kind = report.at("kind").get<std::string>();
    if (kind == "analysis") verify_analysis_checks(instance, report, out);
    else if (kind == "decomposition") verify_decomposition(instance, report, out);
    else if (kind == "perturbation") verify_perturbation(instance, report, out);
    else throw Error("parse", "unknown report kind '" + kind + "'");
    return out;
}

} // namespace martex
