#include "martex/generators.hpp"

#include "martex/error.hpp"

#include <algorithm>
#include <set>

namespace martex {

CostFunction CostFunction::preset(Kind k) {
    CostFunction f;
    f.kind_ = k;
    return f;
}

CostFunction CostFunction::table(std::map<Path, Rational> values) {
    CostFunction f;
    f.kind_ = Kind::Table;
    f.table_ = std::move(values);
    return f;
}

std::optional<CostFunction> CostFunction::from_name(const std::string& name) {
    if (name == "fd1") return preset(Kind::ForwardDiff1);
    if (name == "fd2") return preset(Kind::ForwardDiff2);
    if (name == "fd3") return preset(Kind::ForwardDiff3);
    if (name == "abs") return preset(Kind::AbsDiff);
    if (name == "negabs") return preset(Kind::NegAbsDiff);
    return std::nullopt;
}

std::string CostFunction::name() const {
    switch (kind_) {
        case Kind::ForwardDiff1: return "fd1";
        case Kind::ForwardDiff2: return "fd2";
        case Kind::ForwardDiff3: return "fd3";
        case Kind::AbsDiff: return "abs";
        case Kind::NegAbsDiff: return "negabs";
        case Kind::Table: return "table";
    }
    return "?";
}

Rational CostFunction::operator()(const Rational& x, const Rational& y) const {
    Rational d = y - x;
    switch (kind_) {
        case Kind::ForwardDiff1: return d;
        case Kind::ForwardDiff2: return d * d;
        case Kind::ForwardDiff3: return d * d * d;
        case Kind::AbsDiff: return d.abs();
        case Kind::NegAbsDiff: return -d.abs();
        case Kind::Table: {
            auto it = table_.find({x, y});
            if (it == table_.end())
                throw Error("cost-table", "no table entry at (" + x.str() + ", " + y.str() + ")");
            return it->second;
        }
    }
    return Rational(0);
}

LpSolution solve_mot_lp(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                        const CostFunction& cost, Sense sense) {
    if (!check_convex_order(mu, nu).holds)
        throw Error("convex-order-violated", "mu must precede nu in the convex order");

    const auto& mus = mu.atoms();
    const auto& nus = nu.atoms();
    const size_t nx = mus.size(), ny = nus.size();
    const size_t nvar = nx * ny;
    auto var = [&](size_t i, size_t j) { return i * ny + j; };

    // rows: mu marginals, nu marginals, martingale moments
    Matrix a(nx + ny + nx, nvar);
    std::vector<Rational> b(nx + ny + nx);
    for (size_t i = 0; i < nx; ++i) {
        for (size_t j = 0; j < ny; ++j) a.at(i, var(i, j)) = Rational(1);
        b[i] = mus[i].mass;
    }
    for (size_t j = 0; j < ny; ++j) {
        for (size_t i = 0; i < nx; ++i) a.at(nx + j, var(i, j)) = Rational(1);
        b[nx + j] = nus[j].mass;
    }
    for (size_t i = 0; i < nx; ++i) {
        for (size_t j = 0; j < ny; ++j)
            a.at(nx + ny + i, var(i, j)) = nus[j].point - mus[i].point;
        b[nx + ny + i] = Rational(0);
    }

    std::vector<Rational> c(nvar);
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j) c[var(i, j)] = cost(mus[i].point, nus[j].point);

    auto sol = simplex_solve(a, b, c, sense);
    if (!sol)
        throw Error("internal", "transport program infeasible despite convex order");

    std::vector<WeightedPath> weights;
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j)
            if (sol->x[var(i, j)].sign() > 0)
                weights.push_back({{mus[i].point, nus[j].point}, sol->x[var(i, j)]});

    std::vector<Path> basic;
    for (size_t k : sol->basis) basic.push_back({mus[k / ny].point, nus[k % ny].point});
    std::sort(basic.begin(), basic.end());

    return LpSolution{MartingaleCoupling(std::move(weights), mu, nu), sol->objective,
                      std::move(basic)};
}

MartingaleCoupling gen_binomial(const DiscreteMeasure& mu,
                                const std::map<Rational, std::pair<Rational, Rational>>& spreads) {
    std::vector<WeightedPath> weights;
    std::map<Rational, Rational> nu_mass;
    for (const auto& atom : mu.atoms()) {
        auto it = spreads.find(atom.point);
        if (it == spreads.end())
            throw Error("spread-violation", "no spread for atom " + atom.point.str());
        const auto& [d, u] = it->second;
        if (!(d < atom.point && atom.point < u))
            throw Error("spread-violation", "need d < x < u at x = " + atom.point.str());
        Rational q_up = (atom.point - d) / (u - d);
        Rational q_down = Rational(1) - q_up;
        weights.push_back({{atom.point, d}, q_down * atom.mass});
        weights.push_back({{atom.point, u}, q_up * atom.mass});
        nu_mass[d] += q_down * atom.mass;
        nu_mass[u] += q_up * atom.mass;
    }
    std::vector<DiscreteMeasure::Atom> nu_atoms;
    for (const auto& [p, m] : nu_mass) nu_atoms.push_back({p, m});
    return MartingaleCoupling(std::move(weights), mu, DiscreteMeasure(std::move(nu_atoms)));
}

Support gen_hk_trinomial(const HkParams& params) {
    if (!(params.a < params.b)) throw Error("hk-params", "need a < b");
    std::vector<HkParams::Inner> inner = params.inner;
    std::sort(inner.begin(), inner.end(),
              [](const auto& l, const auto& r) { return l.x < r.x; });
    for (size_t i = 0; i < inner.size(); ++i) {
        const auto& atom = inner[i];
        if (atom.x < params.a || atom.x > params.b)
            throw Error("hk-params", "inner atom " + atom.x.str() + " outside [a, b]");
        if (!(atom.p.sign() > 0 && atom.p < params.a))
            throw Error("hk-params", "p(" + atom.x.str() + ") must lie in (0, a)");
        if (!(atom.q > params.b))
            throw Error("hk-params", "q(" + atom.x.str() + ") must lie in (b, inf)");
        if (i > 0) {
            if (inner[i - 1].x == atom.x) throw Error("hk-params", "duplicate inner atom");
            // p and q are strictly decreasing maps
            if (!(atom.p < inner[i - 1].p) || !(atom.q < inner[i - 1].q))
                throw Error("monotonicity-violation", "p and q must be strictly decreasing");
        }
    }
    std::vector<Path> paths;
    for (const auto& atom : inner) {
        paths.push_back({atom.x, atom.p});
        paths.push_back({atom.x, atom.q});
        if (atom.includes_self) paths.push_back({atom.x, atom.x});
    }
    for (const auto& x : params.outer) {
        if (x >= params.a && x <= params.b)
            throw Error("hk-params", "outer atom " + x.str() + " inside [a, b]");
        paths.push_back({x, x});
    }
    if (paths.empty()) throw Error("hk-params", "empty pattern");
    return Support(std::move(paths));
}

namespace {

MonotonicityResult scan_monotone(const Support& s, bool left) {
    const auto& xs = s.x_points();
    for (const auto& x : xs) {
        const auto& sec = s.y_section(x);
        if (sec.size() < 2) continue;
        for (const auto& xp : xs) {
            bool comparable = left ? x < xp : x > xp;
            if (!comparable) continue;
            for (const auto& yp : s.y_section(xp)) {
                // need y- < y' < y+ within Y(x)
                if (!(sec.front() < yp && yp < sec.back())) continue;
                Rational y_minus, y_plus;
                for (const auto& y : sec)
                    if (y < yp) y_minus = y;
                for (auto it = sec.rbegin(); it != sec.rend(); ++it)
                    if (*it > yp) y_plus = *it;
                MonotonicityResult r;
                r.monotone = false;
                r.violation = {x, y_minus, y_plus, xp, yp};
                return r;
            }
        }
    }
    return {};
}

} // namespace

MonotonicityResult check_left_monotone(const Support& s) { return scan_monotone(s, true); }
MonotonicityResult check_right_monotone(const Support& s) { return scan_monotone(s, false); }

std::pair<DiscreteMeasure, DiscreteMeasure> gen_random_instance(uint64_t seed, size_t n_mu,
                                                                size_t n_nu) {
    if (n_mu < 1 || n_mu > n_nu || n_nu > 12)
        throw Error("params", "need 1 <= n_mu <= n_nu <= 12");
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);

    // distinct integer abscissas scaled by a small common denominator
    uint64_t den = 1ull << rng.below(3);
    std::set<uint64_t> picked;
    while (picked.size() < n_nu) picked.insert(1 + rng.below(6 * n_nu));
    std::vector<Rational> points;
    for (uint64_t k : picked) points.push_back(Rational(static_cast<long>(k), static_cast<long>(den)));

    std::vector<Rational> masses;
    Rational total;
    for (size_t i = 0; i < n_nu; ++i) {
        Rational w(static_cast<long>(1 + rng.below(9)));
        masses.push_back(w);
        total += w;
    }
    std::vector<DiscreteMeasure::Atom> nu_atoms;
    for (size_t i = 0; i < n_nu; ++i) nu_atoms.push_back({points[i], masses[i] / total});
    DiscreteMeasure nu(nu_atoms);

    // contiguous partition: n_mu - 1 distinct cut positions between atoms
    std::set<size_t> cuts;
    while (cuts.size() < n_mu - 1) cuts.insert(1 + rng.below(n_nu - 1));
    std::vector<size_t> bounds(cuts.begin(), cuts.end());
    bounds.push_back(n_nu);

    std::vector<DiscreteMeasure::Atom> mu_atoms;
    size_t lo = 0;
    for (size_t hi : bounds) {
        Rational group_mass, group_moment;
        for (size_t i = lo; i < hi; ++i) {
            group_mass += nu.atoms()[i].mass;
            group_moment += nu.atoms()[i].point * nu.atoms()[i].mass;
        }
        mu_atoms.push_back({group_moment / group_mass, group_mass});
        lo = hi;
    }
    return {DiscreteMeasure(std::move(mu_atoms)), std::move(nu)};
}

std::optional<MartingaleCoupling> canonical_coupling(const Support& s) {
    if (s.empty()) return std::nullopt;
    const auto& xs = s.x_points();
    Rational mu_mass = Rational(1) / Rational(static_cast<long>(xs.size()));

    std::vector<WeightedPath> weights;
    std::map<Rational, Rational> nu_mass;
    for (const auto& x : xs) {
        const auto& sec = s.y_section(x);
        std::map<Rational, Rational> kernel;
        if (sec.size() == 1) {
            if (sec[0] != x) return std::nullopt; // singleton section must sit at x
            kernel[x] = Rational(1);
        } else {
            const Rational &lo = sec.front(), &hi = sec.back();
            if (!(lo < x && x < hi)) return std::nullopt; // x outside the open hull
            Rational bary;
            for (const auto& y : sec) bary += y;
            bary /= Rational(static_cast<long>(sec.size()));
            // mix weight s keeps the two-point remainder inside (lo, hi)
            Rational cap1 = (x - lo) / (bary - lo);
            Rational cap2 = (hi - x) / (hi - bary);
            Rational mix = std::min(std::min(cap1, cap2), Rational(1)) / Rational(2);
            Rational rest = Rational(1) - mix;
            Rational target = (x - mix * bary) / rest; // barycenter for the two-point part
            Rational share = Rational(1) / Rational(static_cast<long>(sec.size()));
            for (const auto& y : sec) kernel[y] += mix * share;
            kernel[lo] += rest * (hi - target) / (hi - lo);
            kernel[hi] += rest * (target - lo) / (hi - lo);
        }
        for (const auto& [y, w] : kernel) {
            weights.push_back({{x, y}, w * mu_mass});
            nu_mass[y] += w * mu_mass;
        }
    }

    std::vector<DiscreteMeasure::Atom> mu_atoms, nu_atoms;
    for (const auto& x : xs) mu_atoms.push_back({x, mu_mass});
    for (const auto& [y, m] : nu_mass) nu_atoms.push_back({y, m});
    return MartingaleCoupling(std::move(weights), DiscreteMeasure(std::move(mu_atoms)),
                              DiscreteMeasure(std::move(nu_atoms)));
}

} // namespace martex
