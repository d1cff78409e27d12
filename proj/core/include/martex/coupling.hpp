#pragma once

#include "martex/measure.hpp"
#include "martex/support.hpp"

#include <string>
#include <vector>

namespace martex {

struct WeightedPath {
    Path path;
    Rational weight;
    friend bool operator==(const WeightedPath&, const WeightedPath&) = default;
};

struct CouplingViolation {
    enum class Kind { MuMarginal, NuMarginal, Martingale };
    Kind kind;
    Rational location; // the x (mu/martingale rows) or y (nu rows) where it fails
    Rational lhs;      // value computed from the weights
    Rational rhs;      // value required by the marginals / kernel condition
};

std::string to_string(CouplingViolation::Kind k);

struct ValidationResult {
    bool ok = true;
    std::vector<CouplingViolation> violations;
};

/// A candidate element of M(mu, nu): strictly positive rational weights on a
/// finite path set, together with the prescribed marginals. Construction
/// enforces only structural sanity (positivity, no duplicates); whether the
/// weights actually reproduce mu, nu and the martingale kernel condition is
/// the job of validate().
class MartingaleCoupling {
public:
    MartingaleCoupling(std::vector<WeightedPath> weights, DiscreteMeasure mu, DiscreteMeasure nu);

    const Support& support() const { return support_; }
    const std::vector<WeightedPath>& weights() const { return weights_; } // sorted by path
    const DiscreteMeasure& mu() const { return mu_; }
    const DiscreteMeasure& nu() const { return nu_; }

    Rational weight_at(const Path& p) const; // zero off support

    /// Conditional kernel q(x, .). Throws unknown-x off S_X.
    std::vector<std::pair<Rational, Rational>> kernel_row(const Rational& x) const;

private:
    std::vector<WeightedPath> weights_;
    Support support_;
    DiscreteMeasure mu_;
    DiscreteMeasure nu_;
};

/// Checks the three constraint families exactly: row sums reproduce mu,
/// column sums reproduce nu, and every x-row has barycenter x. Violations
/// are data (with exact lhs/rhs), not errors.
ValidationResult validate_coupling(const MartingaleCoupling& q);

} // namespace martex
