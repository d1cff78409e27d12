#include "martex/measure.hpp"

#include "martex/error.hpp"

#include <algorithm>
#include <map>

namespace martex {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
    if (atoms.empty()) throw Error("measure", "a measure needs at least one atom");
    std::map<Rational, Rational> merged;
    for (const auto& a : atoms) {
        if (a.point.sign() <= 0) throw Error("measure", "atom point must be > 0, got " + a.point.str());
        if (a.mass.sign() <= 0) throw Error("measure", "atom mass must be > 0, got " + a.mass.str());
        merged[a.point] += a.mass;
    }
    Rational total;
    for (const auto& [p, w] : merged) {
        atoms_.push_back({p, w});
        total += w;
    }
    if (total != Rational(1))
        throw Error("measure", "total mass must be exactly 1, got " + total.str());
}

Rational DiscreteMeasure::mass_at(const Rational& point) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), point,
                               [](const Atom& a, const Rational& p) { return a.point < p; });
    if (it != atoms_.end() && it->point == point) return it->mass;
    return Rational(0);
}

Rational mean(const DiscreteMeasure& m) {
    Rational s;
    for (const auto& a : m.atoms()) s += a.point * a.mass;
    return s;
}

Rational call_price(const DiscreteMeasure& m, const Rational& strike) {
    Rational s;
    for (const auto& a : m.atoms())
        if (a.point > strike) s += (a.point - strike) * a.mass;
    return s;
}

ConvexOrderResult check_convex_order(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    ConvexOrderResult r;
    if (mean(mu) != mean(nu)) {
        r.mean_mismatch = true;
        return r;
    }
    // strikes: union of both atom sets
    std::vector<Rational> strikes;
    for (const auto& a : mu.atoms()) strikes.push_back(a.point);
    for (const auto& a : nu.atoms()) strikes.push_back(a.point);
    std::sort(strikes.begin(), strikes.end());
    strikes.erase(std::unique(strikes.begin(), strikes.end()), strikes.end());
    for (const auto& k : strikes) {
        if (call_price(mu, k) > call_price(nu, k)) {
            r.witness = k;
            return r;
        }
    }
    r.holds = true;
    return r;
}

} // namespace martex
