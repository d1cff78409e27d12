#pragma once

#include "martex/affine.hpp"
#include "martex/matrix.hpp"
#include "martex/support.hpp"

#include <map>
#include <optional>
#include <variant>

namespace martex {

/// A function on the paths of a support.
using PathFunction = std::map<Path, Rational>;

/// Replication triple: f(x,y) = phi(x) + h(x)(y - x) - psi(y) on the
/// target support, exactly.
struct WepDecomposition {
    std::map<Rational, Rational> phi;
    std::map<Rational, Rational> h;
    std::map<Rational, Rational> psi;
};

/// Exact residual f - (phi + h (y-x) - psi) per path; all-zero iff the
/// triple replicates f.
PathFunction decomposition_residual(const Support& s, const PathFunction& f,
                                    const WepDecomposition& d);

/// The replication operator T(phi, h, psi)(x,y) = phi(x) + h(x)(y-x) - psi(y)
/// as an |S| x (2|S_X| + |S_Y|) exact matrix. Row order: sorted paths.
/// Column order: phi block, h block (both over sorted S_X), psi block
/// (over sorted S_Y).
Matrix wep_operator(const Support& s);

struct WepResult {
    bool holds = false;
    /// When the rank is deficient: a function on S outside the image of the
    /// operator. It is a left-kernel vector z, so it annihilates the image
    /// while pairing strictly positively with itself.
    std::optional<PathFunction> cokernel_witness;
    size_t rank = 0;
};

/// Decides the weak exact predictable representation property by exact
/// rank: every f on S decomposes iff rank(T) = |S|.
WepResult wep_holds(const Support& s);

/// Dual infeasibility certificate for a specific payoff: z annihilates
/// every column of the operator and pairs nonzero with f.
struct WepInfeasibility {
    PathFunction dual;
    Rational pairing; // <dual, f> != 0
};

using WepDecomposeResult = std::variant<WepDecomposition, WepInfeasibility>;

/// Computes an exact decomposition of f on S, or a dual certificate that
/// none exists. When a 2-link ordering exists the inductive construction is
/// used (the two free psi values at the head mesh are pinned to 0);
/// otherwise the dense linear system is solved.
WepDecomposeResult wep_decompose(const Support& s, const PathFunction& f);

struct SaturationReport {
    bool wep = false;
    size_t nets_examined = 0;
    bool all_saturated = true;
    std::optional<TwoNet> non_saturated_net;
    std::vector<Path> missing_paths;
    /// wep && !all_saturated would contradict the saturation theorem and is
    /// a bug; !wep && all_saturated only means the net search missed a
    /// witness, which the best-effort enumeration does not rule out.
    bool theorem_violated = false;
    bool search_incomplete_hint = false;
};

/// Cross-checks the WEP rank oracle against saturation of every net found
/// by grow_2nets. Requires a 1-erased input.
SaturationReport verify_saturation_theorem(const Support& s);

} // namespace martex
