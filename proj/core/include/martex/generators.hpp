#pragma once

#include "martex/coupling.hpp"
#include "martex/measure.hpp"
#include "martex/simplex.hpp"
#include "martex/support.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace martex {

/// Transport payoff f(x, y), from the preset list or a custom table. Total
/// and exact on the instance grid.
class CostFunction {
public:
    enum class Kind { ForwardDiff1, ForwardDiff2, ForwardDiff3, AbsDiff, NegAbsDiff, Table };

    static CostFunction preset(Kind k);
    static CostFunction table(std::map<Path, Rational> values);
    /// Preset names: fd1 fd2 fd3 abs negabs.
    static std::optional<CostFunction> from_name(const std::string& name);

    Rational operator()(const Rational& x, const Rational& y) const;
    Kind kind() const { return kind_; }
    std::string name() const;

private:
    Kind kind_ = Kind::ForwardDiff1;
    std::map<Path, Rational> table_;
};

struct LpSolution {
    MartingaleCoupling coupling;
    Rational objective;
    std::vector<Path> basic_paths; // basis of the optimal vertex, sorted
};

/// Exact-rational simplex over the full grid atoms(mu) x atoms(nu) with the
/// marginal and martingale equality rows. The optimum is a vertex of
/// M(mu, nu), hence an extremal coupling. Requires mu <= nu in convex order
/// (throws Error("convex-order-violated") otherwise); a simplex
/// infeasibility after that check would be a bug and throws
/// Error("internal").
LpSolution solve_mot_lp(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                        const CostFunction& cost, Sense sense);

/// One-step binomial coupling: each atom x of mu maps onto its spread
/// {d, u} with the unique martingale split; nu is induced. Requires
/// d < x < u for every atom (Error("spread-violation")).
MartingaleCoupling gen_binomial(const DiscreteMeasure& mu,
                                const std::map<Rational, std::pair<Rational, Rational>>& spreads);

/// Trinomial support pattern: inner atoms on [a, b] map to {p(x), x, q(x)}
/// (or {p(x), q(x)} when the atom does not carry itself), outer atoms are
/// fixed points. p maps into (0, a) and q into (b, inf), both strictly
/// decreasing (Error("monotonicity-violation") otherwise).
struct HkParams {
    Rational a;
    Rational b;
    struct Inner {
        Rational x;
        bool includes_self = true;
        Rational p;
        Rational q;
    };
    std::vector<Inner> inner;
    std::vector<Rational> outer; // atoms with x < a or x > b, Y(x) = {x}
};

Support gen_hk_trinomial(const HkParams& params);

struct MonotonicityResult {
    bool monotone = true;
    struct Violation {
        Rational x, y_minus, y_plus, x_prime, y_prime;
    };
    std::optional<Violation> violation;
};

/// Forbidden pattern (x,y-),(x,y+),(x',y') with x < x' and y- < y' < y+.
MonotonicityResult check_left_monotone(const Support& s);
/// Mirrored pattern with x > x'.
MonotonicityResult check_right_monotone(const Support& s);

/// Deterministic convex-ordered pair: draws nu, partitions its atoms into
/// n_mu contiguous groups and places each mu atom at the group barycenter
/// with the group mass (a martingale coarsening, so mu <= nu by
/// construction). 1 <= n_mu <= n_nu <= 12.
std::pair<DiscreteMeasure, DiscreteMeasure> gen_random_instance(uint64_t seed, size_t n_mu,
                                                                size_t n_nu);

/// A strictly positive coupling carried by exactly the given support, when
/// one exists: per x the kernel mixes a uniform spread with the extreme
/// two-point split, mu is uniform on S_X and nu is induced. Exists iff
/// every section either equals {x} or straddles x strictly.
std::optional<MartingaleCoupling> canonical_coupling(const Support& s);

/// splitmix64; the seed determinism of every generator rests on it.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
};

} // namespace martex
