#include "martex/coupling.hpp"

#include "martex/error.hpp"

#include <algorithm>
#include <map>

namespace martex {

std::string to_string(CouplingViolation::Kind k) {
    switch (k) {
        case CouplingViolation::Kind::MuMarginal: return "mu-marginal";
        case CouplingViolation::Kind::NuMarginal: return "nu-marginal";
        case CouplingViolation::Kind::Martingale: return "martingale";
    }
    return "?";
}

MartingaleCoupling::MartingaleCoupling(std::vector<WeightedPath> weights,
                                       DiscreteMeasure mu, DiscreteMeasure nu)
    : mu_(std::move(mu)), nu_(std::move(nu)) {
    if (weights.empty()) throw Error("coupling", "empty weight list");
    std::sort(weights.begin(), weights.end(),
              [](const WeightedPath& a, const WeightedPath& b) { return a.path < b.path; });
    std::vector<Path> paths;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (weights[i].weight.sign() <= 0)
            throw Error("coupling", "weight at (" + weights[i].path.x.str() + ", " +
                                        weights[i].path.y.str() + ") must be > 0");
        if (i > 0 && weights[i].path == weights[i - 1].path)
            throw Error("coupling", "duplicate path in weight list");
        paths.push_back(weights[i].path);
    }
    weights_ = std::move(weights);
    support_ = Support(std::move(paths));
}

Rational MartingaleCoupling::weight_at(const Path& p) const {
    auto it = std::lower_bound(weights_.begin(), weights_.end(), p,
                               [](const WeightedPath& w, const Path& q) { return w.path < q; });
    if (it != weights_.end() && it->path == p) return it->weight;
    return Rational(0);
}

std::vector<std::pair<Rational, Rational>> MartingaleCoupling::kernel_row(const Rational& x) const {
    const auto& ys = support_.y_section(x);
    Rational row_mass;
    for (const auto& y : ys) row_mass += weight_at({x, y});
    std::vector<std::pair<Rational, Rational>> row;
    for (const auto& y : ys) row.emplace_back(y, weight_at({x, y}) / row_mass);
    return row;
}

ValidationResult validate_coupling(const MartingaleCoupling& q) {
    ValidationResult r;
    std::map<Rational, Rational> row_sum, col_sum, row_ymoment;
    for (const auto& w : q.weights()) {
        row_sum[w.path.x] += w.weight;
        col_sum[w.path.y] += w.weight;
        row_ymoment[w.path.x] += w.path.y * w.weight;
    }

    auto push = [&](CouplingViolation::Kind k, const Rational& at, Rational lhs, Rational rhs) {
        r.ok = false;
        r.violations.push_back({k, at, std::move(lhs), std::move(rhs)});
    };

    // mu rows: every mu atom must be matched exactly, and no extra rows
    for (const auto& a : q.mu().atoms()) {
        Rational got = row_sum.count(a.point) ? row_sum[a.point] : Rational(0);
        if (got != a.mass) push(CouplingViolation::Kind::MuMarginal, a.point, got, a.mass);
    }
    for (const auto& [x, got] : row_sum)
        if (q.mu().mass_at(x).is_zero())
            push(CouplingViolation::Kind::MuMarginal, x, got, Rational(0));

    // nu columns
    for (const auto& a : q.nu().atoms()) {
        Rational got = col_sum.count(a.point) ? col_sum[a.point] : Rational(0);
        if (got != a.mass) push(CouplingViolation::Kind::NuMarginal, a.point, got, a.mass);
    }
    for (const auto& [y, got] : col_sum)
        if (q.nu().mass_at(y).is_zero())
            push(CouplingViolation::Kind::NuMarginal, y, got, Rational(0));

    // martingale kernel condition per x: sum_y y Q(x,y) == x * sum_y Q(x,y)
    for (const auto& [x, moment] : row_ymoment) {
        Rational want = x * row_sum[x];
        if (moment != want) push(CouplingViolation::Kind::Martingale, x, moment, want);
    }
    return r;
}

} // namespace martex
