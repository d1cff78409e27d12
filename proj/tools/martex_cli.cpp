// Command-line surface for the martingale-support analyzer: analyze,
// decompose, perturb, generate, fuzz, verify. Exit codes: 0 verdicts
// computed (whatever they are), 1 verification mismatch, 2 input/parse
// error, 3 internal invariant violation.
#include <CLI11.hpp>

#include "martex/analyze.hpp"
#include "martex/cycles.hpp"
#include "martex/enumerate.hpp"
#include "martex/error.hpp"
#include "martex/generators.hpp"
#include "martex/instance.hpp"
#include "martex/wep.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

using martex::Error;
using martex::InstanceFile;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

struct CliAbort {
    int code;
};

[[noreturn]] void abort_cli(int code, const std::string& message) {
    std::cerr << "martex: " << message << "\n";
    throw CliAbort{code};
}

InstanceFile load_or_die(const std::string& path) {
    try {
        return martex::load_instance(path);
    } catch (const Error& e) {
        abort_cli(kExitParse, std::string(e.what()) + " [" + path + "]");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        martex::write_file(out_path, text);
    }
}

int cmd_analyze(const std::string& path, bool as_json, const std::string& checks_csv,
                uint64_t seed, const std::string& out_path) {
    InstanceFile instance = load_or_die(path);
    std::vector<martex::Check> checks;
    try {
        checks = checks_csv.empty() ? martex::all_checks() : martex::parse_check_list(checks_csv);
    } catch (const Error& e) {
        abort_cli(kExitParse, e.what());
    }
    auto report = martex::run_analysis(instance, checks, seed);
    if (as_json) {
        emit(martex::report_to_json(report).dump(2) + "\n", out_path);
    } else {
        emit(martex::report_to_text(report), out_path);
    }
    return report.internal_violation ? kExitInternal : kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& payoff_path,
                  const std::string& out_path) {
    InstanceFile instance = load_or_die(path);
    martex::Support support = instance.support_set();

    martex::PathFunction payoff;
    try {
        json doc = json::parse(martex::read_file(payoff_path), nullptr, false);
        if (doc.is_discarded()) throw Error("parse", "invalid JSON");
        payoff = martex::path_function_from_json(doc.is_object() ? doc.at("payoff") : doc);
    } catch (const Error& e) {
        abort_cli(kExitParse, std::string(e.what()) + " [" + payoff_path + "]");
    } catch (const json::exception& e) {
        abort_cli(kExitParse, std::string("payoff file: ") + e.what());
    }
    for (const auto& p : support.paths())
        if (!payoff.count(p))
            abort_cli(kExitParse, "payoff-domain-mismatch: no value at (" + p.x.str() + ", " +
                                      p.y.str() + ")");

    ordered_json doc;
    doc["kind"] = "decomposition";
    doc["tool"] = "martex";
    doc["payoff"] = martex::path_function_to_json(payoff);
    auto result = martex::wep_decompose(support, payoff);
    if (auto* triple = std::get_if<martex::WepDecomposition>(&result)) {
        auto map_json = [](const std::map<martex::Rational, martex::Rational>& m) {
            ordered_json arr = ordered_json::array();
            for (const auto& [k, v] : m) arr.push_back({k.str(), v.str()});
            return arr;
        };
        doc["decomposition"] = ordered_json{{"phi", map_json(triple->phi)},
                                            {"h", map_json(triple->h)},
                                            {"psi", map_json(triple->psi)}};
    } else {
        auto& cert = std::get<martex::WepInfeasibility>(result);
        doc["infeasibility"] = ordered_json{{"dual", martex::path_function_to_json(cert.dual)},
                                            {"pairing", cert.pairing.str()}};
    }
    emit(doc.dump(2) + "\n", out_path);
    return kExitOk;
}

int cmd_perturb(const std::string& path, const std::string& scale_text,
                std::string out_prefix) {
    InstanceFile instance = load_or_die(path);
    if (!instance.weights) abort_cli(kExitParse, "instance carries no weights");
    martex::MartingaleCoupling q = instance.coupling();
    if (!martex::validate_coupling(q).ok)
        abort_cli(kExitParse, "invalid-coupling: weights fail the marginal/martingale constraints");

    auto pool = martex::find_free_pool(q.support());
    if (!pool) {
        std::cout << "no pool found\n";
        return kExitOk;
    }
    std::optional<martex::Rational> scale;
    if (!scale_text.empty()) {
        try {
            scale = martex::Rational::parse(scale_text);
        } catch (const Error& e) {
            abort_cli(kExitParse, e.what());
        }
    }
    auto pair = martex::build_pool_perturbation(q, *pool, scale);

    if (out_prefix.empty()) {
        out_prefix = path;
        if (out_prefix.size() > 5 && out_prefix.substr(out_prefix.size() - 5) == ".json")
            out_prefix.resize(out_prefix.size() - 5);
        out_prefix += ".perturb";
    }
    std::string q1_path = out_prefix + ".q1.json";
    std::string q2_path = out_prefix + ".q2.json";
    martex::save_instance(InstanceFile::from_coupling(pair.q1), q1_path);
    martex::save_instance(InstanceFile::from_coupling(pair.q2), q2_path);

    ordered_json report;
    report["kind"] = "perturbation";
    report["tool"] = "martex";
    {
        ordered_json cycles = ordered_json::array();
        for (const auto& c : pool->cycles) {
            ordered_json xs = ordered_json::array(), ys = ordered_json::array();
            for (const auto& x : c.xs) xs.push_back(x.str());
            for (const auto& y : c.ys) ys.push_back(y.str());
            cycles.push_back(ordered_json{{"xs", std::move(xs)}, {"ys", std::move(ys)}});
        }
        ordered_json xs = ordered_json::array();
        for (const auto& x : pool->x_points) xs.push_back(x.str());
        ordered_json gamma = ordered_json::array();
        for (const auto& row : pool->gamma) {
            ordered_json r = ordered_json::array();
            for (const auto& v : row) r.push_back(v.str());
            gamma.push_back(std::move(r));
        }
        report["pool"] = ordered_json{{"cycles", std::move(cycles)},
                                      {"x_points", std::move(xs)},
                                      {"gamma", std::move(gamma)}};
    }
    {
        ordered_json delta = ordered_json::array();
        for (const auto& [p, d] : pair.delta)
            delta.push_back(ordered_json::array({p.x.str(), p.y.str(), d.str()}));
        report["delta"] = std::move(delta);
    }
    auto weights_json = [](const martex::MartingaleCoupling& c) {
        ordered_json arr = ordered_json::array();
        for (const auto& w : c.weights())
            arr.push_back(ordered_json::array({w.path.x.str(), w.path.y.str(), w.weight.str()}));
        return arr;
    };
    report["q1"] = weights_json(pair.q1);
    report["q2"] = weights_json(pair.q2);
    std::string report_path = out_prefix + ".report.json";
    martex::write_file(report_path, report.dump(2) + "\n");

    std::cout << "wrote " << q1_path << "\n";
    std::cout << "wrote " << q2_path << "\n";
    std::cout << "wrote " << report_path << "\n";
    return kExitOk;
}

martex::Rational rat_field(const json& v) {
    if (v.is_string()) return martex::Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return martex::Rational(v.get<long>());
    throw Error("parse", "expected a rational string, got " + v.dump());
}

int cmd_generate(const std::string& kind, const std::string& params_text, uint64_t seed,
                 const std::string& out_path) {
    json params = json::object();
    if (!params_text.empty()) {
        params = json::parse(params_text, nullptr, false);
        if (params.is_discarded()) {
            // maybe a file path rather than inline JSON
            try {
                params = json::parse(martex::read_file(params_text), nullptr, false);
            } catch (const Error&) {
                params = json(); // fallthrough to the error below
            }
            if (params.is_discarded() || params.is_null())
                abort_cli(kExitParse, "params must be inline JSON or a JSON file");
        }
    }

    InstanceFile out;
    if (kind == "binomial") {
        std::vector<martex::DiscreteMeasure::Atom> atoms;
        for (const auto& a : params.at("mu")) atoms.push_back({rat_field(a[0]), rat_field(a[1])});
        std::map<martex::Rational, std::pair<martex::Rational, martex::Rational>> spreads;
        for (const auto& s : params.at("spreads"))
            spreads[rat_field(s[0])] = {rat_field(s[1]), rat_field(s[2])};
        out = InstanceFile::from_coupling(
            martex::gen_binomial(martex::DiscreteMeasure(atoms), spreads));
    } else if (kind == "hk") {
        martex::HkParams hk;
        hk.a = rat_field(params.at("a"));
        hk.b = rat_field(params.at("b"));
        if (params.contains("inner"))
            for (const auto& node : params.at("inner")) {
                martex::HkParams::Inner inner;
                inner.x = rat_field(node.at("x"));
                inner.includes_self = node.value("self", true);
                inner.p = rat_field(node.at("p"));
                inner.q = rat_field(node.at("q"));
                hk.inner.push_back(std::move(inner));
            }
        if (params.contains("outer"))
            for (const auto& x : params.at("outer")) hk.outer.push_back(rat_field(x));
        martex::Support pattern = martex::gen_hk_trinomial(hk);
        auto q = martex::canonical_coupling(pattern);
        if (!q) throw Error("internal", "trinomial pattern lost its canonical coupling");
        out = InstanceFile::from_coupling(*q);
    } else if (kind == "lp-vertex") {
        std::vector<martex::DiscreteMeasure::Atom> mu_atoms, nu_atoms;
        for (const auto& a : params.at("mu")) mu_atoms.push_back({rat_field(a[0]), rat_field(a[1])});
        for (const auto& a : params.at("nu")) nu_atoms.push_back({rat_field(a[0]), rat_field(a[1])});
        martex::CostFunction cost = martex::CostFunction::preset(martex::CostFunction::Kind::ForwardDiff2);
        if (params.contains("cost")) {
            if (params.at("cost").is_string()) {
                auto named = martex::CostFunction::from_name(params.at("cost").get<std::string>());
                if (!named) abort_cli(kExitParse, "unknown cost preset");
                cost = *named;
            } else {
                std::map<martex::Path, martex::Rational> table;
                for (const auto& e : params.at("cost").at("table"))
                    table[{rat_field(e[0]), rat_field(e[1])}] = rat_field(e[2]);
                cost = martex::CostFunction::table(std::move(table));
            }
        }
        martex::Sense sense = martex::Sense::Max;
        if (params.value("sense", "max") == std::string("min")) sense = martex::Sense::Min;
        auto lp = martex::solve_mot_lp(martex::DiscreteMeasure(mu_atoms),
                                       martex::DiscreteMeasure(nu_atoms), cost, sense);
        out = InstanceFile::from_coupling(lp.coupling);
        std::cerr << "objective " << lp.objective.str() << "\n";
    } else if (kind == "random") {
        size_t n_mu = params.value("n_mu", 2);
        size_t n_nu = params.value("n_nu", 4);
        auto [mu, nu] = martex::gen_random_instance(seed, n_mu, n_nu);
        out.mu = mu.atoms();
        out.nu = nu.atoms();
    } else {
        abort_cli(kExitParse, "unknown kind '" + kind + "' (binomial|hk|lp-vertex|random)");
    }
    emit(martex::serialize_instance(out), out_path);
    return kExitOk;
}

int cmd_fuzz(size_t max_x, size_t max_y, bool exhaustive, uint64_t budget, uint64_t seed,
             size_t threads, const std::string& log_path) {
    martex::FuzzConfig config;
    config.max_x = max_x;
    config.max_y = max_y;
    config.exhaustive = exhaustive;
    config.budget = budget;
    config.seed = seed;
    config.threads = threads;
    auto summary = martex::run_fuzz(config);

    std::cout << "instances " << summary.instances << "\n"
              << "2link " << summary.two_link << "\n"
              << "fully-erasable " << summary.fully_erasable << "\n"
              << "wep " << summary.wep << "\n"
              << "extremal " << summary.extremal << "\n"
              << "mesh-cyclic " << summary.mesh_cyclic << "\n"
              << "pools-found " << summary.pools_found << "\n"
              << "decompose-replays " << summary.decompose_replays << "\n"
              << "conjecture-log " << summary.conjecture_log.size() << "\n"
              << "violations " << summary.violations.size() << "\n";
    for (const auto& v : summary.violations) std::cout << "VIOLATION " << v << "\n";

    if (!log_path.empty()) {
        std::string lines;
        for (const auto& inst : summary.conjecture_log)
            lines += martex::conjecture_log_line(inst) + "\n";
        martex::write_file(log_path, lines);
    }
    return summary.violations.empty() ? kExitOk : kExitInternal;
}

int cmd_verify(const std::string& instance_path, const std::string& report_path) {
    InstanceFile instance = load_or_die(instance_path);
    json report;
    try {
        report = json::parse(martex::read_file(report_path), nullptr, false);
        if (report.is_discarded()) throw Error("parse", "invalid JSON");
    } catch (const Error& e) {
        abort_cli(kExitParse, std::string(e.what()) + " [" + report_path + "]");
    }
    std::vector<martex::VerifyOutcome> outcomes;
    try {
        outcomes = martex::verify_report(instance, report);
    } catch (const json::exception& e) {
        abort_cli(kExitParse, std::string("report: ") + e.what());
    }
    bool all_ok = true;
    for (const auto& o : outcomes) {
        std::cout << o.item << ": " << (o.ok ? "verified" : "FAILED");
        if (!o.ok && !o.detail.empty()) std::cout << "  (" << o.detail << ")";
        std::cout << "\n";
    }
    for (const auto& o : outcomes) all_ok &= o.ok;
    if (outcomes.empty()) std::cout << "nothing to verify (oracle-only report)\n";
    return all_ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analyzer for supports of martingale transport plans"};
    app.require_subcommand(1);

    std::string instance_path, payoff_path, report_path, out_path, checks_csv, params_text;
    std::string scale_text, out_prefix, log_path, kind;
    bool as_json = false, as_text = false, exhaustive = false;
    uint64_t seed = 0, budget = 0;
    size_t max_x = 3, max_y = 4, threads = 1;

    auto* analyze = app.add_subcommand("analyze", "run the check battery on an instance file");
    analyze->add_option("instance", instance_path)->required();
    analyze->add_flag("--json", as_json, "emit the JSON report");
    analyze->add_flag("--text", as_text, "emit the text report (default)");
    analyze->add_option("--checks", checks_csv, "comma-separated subset of checks");
    analyze->add_option("--seed", seed);
    analyze->add_option("--out", out_path, "write the report here instead of stdout");

    auto* decompose = app.add_subcommand("decompose", "exact replication triple or dual certificate");
    decompose->add_option("instance", instance_path)->required();
    decompose->add_option("payoff", payoff_path)->required();
    decompose->add_option("--out", out_path);

    auto* perturb = app.add_subcommand("perturb", "split a coupling along a free cycle pool");
    perturb->add_option("instance", instance_path)->required();
    perturb->add_option("--scale", scale_text, "perturbation scale (default: half the safe maximum)");
    perturb->add_option("--out-prefix", out_prefix);

    auto* generate = app.add_subcommand("generate", "emit an instance file");
    generate->add_option("kind", kind, "binomial|hk|lp-vertex|random")->required();
    generate->add_option("--params", params_text, "inline JSON or a JSON file");
    generate->add_option("--seed", seed);
    generate->add_option("--out", out_path);

    auto* fuzz = app.add_subcommand("fuzz", "enumerate/sample instances and assert the implication chain");
    fuzz->add_option("--max-x", max_x);
    fuzz->add_option("--max-y", max_y);
    fuzz->add_flag("--exhaustive", exhaustive, "visit every admissible support (capped at 4x6)");
    fuzz->add_option("--budget", budget, "sampled instances when not exhaustive");
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--threads", threads);
    fuzz->add_option("--log", log_path, "write the conjecture log (JSONL) here");

    auto* verify = app.add_subcommand("verify", "replay a report's certificates against an instance");
    verify->add_option("instance", instance_path)->required();
    verify->add_option("report", report_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze))
            return cmd_analyze(instance_path, as_json && !as_text, checks_csv, seed, out_path);
        if (app.got_subcommand(decompose)) return cmd_decompose(instance_path, payoff_path, out_path);
        if (app.got_subcommand(perturb)) return cmd_perturb(instance_path, scale_text, out_prefix);
        if (app.got_subcommand(generate)) return cmd_generate(kind, params_text, seed, out_path);
        if (app.got_subcommand(fuzz))
            return cmd_fuzz(max_x, max_y, exhaustive, budget, seed, threads, log_path);
        if (app.got_subcommand(verify)) return cmd_verify(instance_path, report_path);
    } catch (const CliAbort& abort) {
        return abort.code;
    } catch (const Error& e) {
        std::cerr << "martex: " << e.what() << "\n";
        return e.code() == "internal" ? kExitInternal : kExitParse;
    } catch (const json::exception& e) {
        std::cerr << "martex: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
