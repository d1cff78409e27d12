#include "martex/enumerate.hpp"

#include "martex/analyze.hpp"
#include "martex/cycles.hpp"
#include "martex/erasure.hpp"
#include "martex/error.hpp"
#include "martex/generators.hpp"
#include "martex/wep.hpp"

#include <algorithm>
#include <thread>

namespace martex {

GridSpec default_grid(size_t max_x, size_t max_y) {
    GridSpec grid;
    for (size_t k = 1; k <= max_x; ++k)
        grid.xs.push_back(Rational(static_cast<long>(2 * k + 1), 2));
    for (size_t k = 1; k <= max_y; ++k) grid.ys.push_back(Rational(static_cast<long>(k)));
    return grid;
}

namespace {

/// Per-row admissible section masks: empty, or any mask with at least one
/// y below and one above the row's x (so the canonical coupling exists and
/// the support is 1-erased).
std::vector<std::vector<uint32_t>> admissible_masks(const GridSpec& grid) {
    std::vector<std::vector<uint32_t>> rows;
    const size_t ny = grid.ys.size();
    for (const auto& x : grid.xs) {
        uint32_t low = 0, high = 0;
        for (size_t j = 0; j < ny; ++j) {
            if (grid.ys[j] < x) low |= (1u << j);
            if (grid.ys[j] > x) high |= (1u << j);
        }
        std::vector<uint32_t> masks{0};
        for (uint32_t m = 1; m < (1u << ny); ++m)
            if ((m & low) != 0 && (m & high) != 0) masks.push_back(m);
        rows.push_back(std::move(masks));
    }
    return rows;
}

Support support_from_digits(const GridSpec& grid,
                            const std::vector<std::vector<uint32_t>>& rows,
                            const std::vector<size_t>& digits) {
    std::vector<Path> paths;
    for (size_t i = 0; i < digits.size(); ++i) {
        uint32_t mask = rows[i][digits[i]];
        for (size_t j = 0; j < grid.ys.size(); ++j)
            if (mask & (1u << j)) paths.push_back({grid.xs[i], grid.ys[j]});
    }
    return Support(std::move(paths));
}

std::vector<size_t> digits_of(uint64_t index, const std::vector<std::vector<uint32_t>>& rows) {
    std::vector<size_t> digits(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        digits[i] = index % rows[i].size();
        index /= rows[i].size();
    }
    return digits;
}

} // namespace

uint64_t count_supports(const GridSpec& grid) {
    uint64_t total = 1;
    for (const auto& masks : admissible_masks(grid)) total *= masks.size();
    return total - 1; // drop the all-empty assignment
}

void enumerate_supports(const GridSpec& grid, const std::function<void(const Support&)>& fn) {
    auto rows = admissible_masks(grid);
    uint64_t total = 1;
    for (const auto& masks : rows) total *= masks.size();
    for (uint64_t index = 1; index < total; ++index)
        fn(support_from_digits(grid, rows, digits_of(index, rows)));
}

MartingaleCoupling shared_triple_fixture() {
    Rational x1(3, 2), x2(2);
    std::vector<WeightedPath> weights = {
        {{x1, Rational(1)}, Rational(5, 16)}, {{x1, Rational(2)}, Rational(1, 8)},
        {{x1, Rational(3)}, Rational(1, 16)}, {{x2, Rational(1)}, Rational(1, 8)},
        {{x2, Rational(2)}, Rational(1, 4)},  {{x2, Rational(3)}, Rational(1, 8)},
    };
    DiscreteMeasure mu({{x1, Rational(1, 2)}, {x2, Rational(1, 2)}});
    DiscreteMeasure nu({{Rational(1), Rational(7, 16)},
                        {Rational(2), Rational(3, 8)},
                        {Rational(3), Rational(3, 16)}});
    return MartingaleCoupling(std::move(weights), std::move(mu), std::move(nu));
}

MartingaleCoupling free_cycle_fixture() {
    // x points 6 > 4 > 3 and y points 8 > 6 > 5 > 2 > 1 with y2 = x1 = 6;
    // the sections are Y(6) = {5,6,8}, Y(4) = {1,2,5,6}, Y(3) = {1,2,8}
    Rational x1(6), x2(4), x3(3);
    std::vector<WeightedPath> weights = {
        {{x1, Rational(8)}, Rational(1, 12)}, {{x1, Rational(6)}, Rational(1, 12)},
        {{x1, Rational(5)}, Rational(1, 6)},  {{x2, Rational(6)}, Rational(1, 10)},
        {{x2, Rational(5)}, Rational(1, 9)},  {{x2, Rational(2)}, Rational(1, 18)},
        {{x2, Rational(1)}, Rational(1, 15)}, {{x3, Rational(8)}, Rational(1, 15)},
        {{x3, Rational(2)}, Rational(1, 5)},  {{x3, Rational(1)}, Rational(1, 15)},
    };
    DiscreteMeasure mu({{x3, Rational(1, 3)}, {x2, Rational(1, 3)}, {x1, Rational(1, 3)}});
    DiscreteMeasure nu({{Rational(1), Rational(2, 15)},
                        {Rational(2), Rational(23, 90)},
                        {Rational(5), Rational(5, 18)},
                        {Rational(6), Rational(11, 60)},
                        {Rational(8), Rational(3, 20)}});
    return MartingaleCoupling(std::move(weights), std::move(mu), std::move(nu));
}

std::string conjecture_log_line(const InstanceFile& instance) {
    nlohmann::ordered_json line;
    line["reason"] = "non-extremal-without-found-pool";
    line["instance"] = instance_to_json(instance);
    return line.dump();
}

namespace {

struct InstanceChecks {
    std::vector<std::string> violations;
    bool two_link = false, erasable = false, wep = false, extremal = false;
    bool mesh_cyclic = false, pool_found = false, decompose_replayed = false;
    std::optional<InstanceFile> conjecture;
};

InstanceChecks check_instance(const MartingaleCoupling& q, uint64_t payoff_seed,
                              bool with_saturation, size_t saturation_max_paths) {
    InstanceChecks r;
    const Support& s = q.support();
    auto flag = [&](const std::string& what) { r.violations.push_back(what); };

    auto ordering = find_2link_ordering(s);
    r.two_link = ordering.has_value();
    if (ordering && !verify_2link_ordering(s, *ordering))
        flag("returned 2-link ordering fails recount");

    auto trace = erasure_fixpoint(s);
    r.erasable = trace.fully_erasable;
    if (!replay_erasure(s, trace)) flag("erasure trace does not replay");

    auto wep = wep_holds(s);
    r.wep = wep.holds;
    if (!wep.holds) {
        if (!wep.cokernel_witness || !annihilates_families(s, *wep.cokernel_witness))
            flag("cokernel witness fails replay");
    }

    auto extremality = extremality_kernel(q);
    r.extremal = extremality.extremal;
    for (const auto& vec : extremality.kernel_basis) {
        std::map<Path, Rational> v(vec.begin(), vec.end());
        if (!annihilates_families(s, v)) flag("kernel vector fails replay");
    }

    // implication chain and finite equivalences
    if (r.two_link != r.erasable) flag("2-link <=> fully erasable violated");
    if (r.erasable && !r.wep) flag("fully erasable => WEP violated");
    if (r.two_link && !r.wep) flag("2-link => WEP violated");
    if (r.wep != r.extremal) flag("WEP <=> extremal violated");
    if (s.y_points().size() <= 5 && r.wep != r.erasable)
        flag("WEP <=> fully erasable violated at |S_Y| <= 5");

    if (!intersection_screen(s).empty() && (r.wep || r.extremal))
        flag("intersection screen obstruction ignored");

    r.mesh_cyclic = !find_mesh_cycles(s).empty();
    if (r.mesh_cyclic && (r.wep || r.extremal)) flag("mesh-cycle obstruction ignored");

    if (with_saturation && s.size() <= saturation_max_paths && is_k_erased(s, 1)) {
        auto sat = verify_saturation_theorem(s);
        if (sat.theorem_violated) flag("WEP holds but a found 2-net is not saturated");
    }

    if (r.wep) {
        // decomposition replay on a seeded payoff
        SplitMix64 rng(payoff_seed);
        PathFunction f;
        for (const auto& p : s.paths())
            f[p] = Rational(static_cast<long>(rng.below(41)) - 20,
                            static_cast<long>(1 + rng.below(7)));
        auto dec = wep_decompose(s, f);
        if (auto* triple = std::get_if<WepDecomposition>(&dec)) {
            bool zero = true;
            for (const auto& [p, res] : decomposition_residual(s, f, *triple))
                zero &= res.is_zero();
            if (zero) r.decompose_replayed = true;
            else flag("WEP decomposition leaves a nonzero residual");
        } else {
            flag("WEP holds but decomposition reported infeasibility");
        }
    } else {
        auto pool = find_free_pool(s);
        r.pool_found = pool.has_value();
        if (pool) {
            if (r.extremal) flag("free pool found on an extremal coupling");
            auto pair = build_pool_perturbation(q, *pool);
            bool midpoint = true;
            for (const auto& w : q.weights())
                midpoint &= pair.q1.weight_at(w.path) + pair.q2.weight_at(w.path) ==
                            Rational(2) * w.weight;
            if (!midpoint || !validate_coupling(pair.q1).ok || !validate_coupling(pair.q2).ok)
                flag("pool perturbation fails midpoint/membership replay");
        } else if (!r.extremal) {
            r.conjecture = InstanceFile::from_coupling(q);
        }
    }
    return r;
}

void fold(FuzzSummary& sum, const InstanceChecks& c) {
    ++sum.instances;
    sum.two_link += c.two_link;
    sum.fully_erasable += c.erasable;
    sum.wep += c.wep;
    sum.extremal += c.extremal;
    sum.mesh_cyclic += c.mesh_cyclic;
    sum.pools_found += c.pool_found;
    sum.decompose_replays += c.decompose_replayed;
    for (const auto& v : c.violations) sum.violations.push_back(v);
    if (c.conjecture) sum.conjecture_log.push_back(*c.conjecture);
}

} // namespace

FuzzSummary run_fuzz(const FuzzConfig& config) {
    if (config.exhaustive && (config.max_x > 4 || config.max_y > 6))
        throw Error("params", "exhaustive mode is capped at max_x 4, max_y 6");
    if (config.max_y > 30) throw Error("params", "max_y too large");

    FuzzSummary sum;
    if (!config.exhaustive && config.budget == 0) return sum; // empty run

    GridSpec grid = default_grid(config.max_x, config.max_y);
    auto rows = admissible_masks(grid);
    uint64_t space = 1;
    for (const auto& masks : rows) space *= masks.size();

    // the two canonical fixtures always ride along
    std::vector<MartingaleCoupling> fixtures{shared_triple_fixture(), free_cycle_fixture()};

    uint64_t n_instances =
        config.exhaustive ? (space - 1) : config.budget;
    uint64_t total = fixtures.size() + n_instances;

    auto instance_at = [&](uint64_t k) -> MartingaleCoupling {
        if (k < fixtures.size()) return fixtures[k];
        uint64_t j = k - fixtures.size();
        if (config.exhaustive) {
            Support s = support_from_digits(grid, rows, digits_of(j + 1, rows));
            auto q = canonical_coupling(s);
            if (!q) throw Error("internal", "enumerated support lost its coupling");
            return *q;
        }
        // sampled: per-instance rng, independent of threading
        SplitMix64 rng(config.seed * 0x9e3779b97f4a7c15ull + j + 1);
        std::vector<size_t> digits(rows.size());
        for (;;) {
            bool nonempty = false;
            for (size_t i = 0; i < rows.size(); ++i) {
                digits[i] = rng.below(rows[i].size());
                nonempty |= digits[i] != 0;
            }
            if (nonempty) break;
        }
        auto q = canonical_coupling(support_from_digits(grid, rows, digits));
        if (!q) throw Error("internal", "sampled support lost its coupling");
        return *q;
    };

    size_t threads = std::max<size_t>(1, config.threads);
    if (threads == 1 || total < 2 * threads) {
        for (uint64_t k = 0; k < total; ++k)
            fold(sum, check_instance(instance_at(k), config.seed ^ (k * 0x9e3779b9ull),
                                     config.with_saturation, config.saturation_max_paths));
        return sum;
    }

    std::vector<FuzzSummary> partial(threads);
    std::vector<std::thread> pool;
    uint64_t chunk = (total + threads - 1) / threads;
    for (size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            uint64_t lo = t * chunk, hi = std::min<uint64_t>(total, lo + chunk);
            for (uint64_t k = lo; k < hi; ++k)
                fold(partial[t], check_instance(instance_at(k), config.seed ^ (k * 0x9e3779b9ull),
                                                config.with_saturation,
                                                config.saturation_max_paths));
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial) {
        sum.instances += p.instances;
        sum.two_link += p.two_link;
        sum.fully_erasable += p.fully_erasable;
        sum.wep += p.wep;
        sum.extremal += p.extremal;
        sum.mesh_cyclic += p.mesh_cyclic;
        sum.pools_found += p.pools_found;
        sum.decompose_replays += p.decompose_replays;
        sum.violations.insert(sum.violations.end(), p.violations.begin(), p.violations.end());
        sum.conjecture_log.insert(sum.conjecture_log.end(), p.conjecture_log.begin(),
                                  p.conjecture_log.end());
    }
    return sum;
}

} // namespace martex
