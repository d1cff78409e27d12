#pragma once

#include "martex/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace martex {

/// Finite positive-atom probability measure on (0, infinity).
/// Atoms are kept sorted by point; duplicate points are merged on
/// construction; total mass must be exactly 1.
class DiscreteMeasure {
public:
    struct Atom {
        Rational point;
        Rational mass;
        friend bool operator==(const Atom&, const Atom&) = default;
    };

    /// Canonicalizes: sorts, merges duplicate points, rejects nonpositive
    /// points or masses and any total mass != 1.
    explicit DiscreteMeasure(std::vector<Atom> atoms);

    static DiscreteMeasure point_mass(const Rational& x) {
        return DiscreteMeasure({{x, Rational(1)}});
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    size_t size() const { return atoms_.size(); }

    /// Mass at a point (zero if the point is not an atom).
    Rational mass_at(const Rational& point) const;

    friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

private:
    std::vector<Atom> atoms_;
};

/// Barycenter: sum of point * mass.
Rational mean(const DiscreteMeasure& m);

/// European call value sum of (point - strike)^+ * mass.
Rational call_price(const DiscreteMeasure& m, const Rational& strike);

struct ConvexOrderResult {
    bool holds = false;
    /// On failure, the violating strike, or nullopt with
    /// mean_mismatch = true when already the means differ.
    std::optional<Rational> witness;
    bool mean_mismatch = false;
};

/// Decides mu <= nu in the convex order. For finite measures it is enough
/// to compare means and call prices at every atom of either measure: the
/// call functions are piecewise linear with kinks only at atoms.
ConvexOrderResult check_convex_order(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

} // namespace martex
