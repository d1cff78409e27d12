#pragma once

#include "martex/coupling.hpp"
#include "martex/support.hpp"

#include <map>
#include <optional>
#include <vector>

namespace martex {

/// A classical cycle in the bipartite path graph, stored as the alternating
/// point sequence x0, y0, x1, y1, ..., x_{n-1}, y_{n-1} closing back at x0.
/// The outgoing path of x_i is (x_i, y_i); the incoming path of x_i is
/// (x_i, y_{i-1 mod n}). All x's are pairwise distinct and so are all y's.
/// A cycle is identified with its support and orientation; the canonical
/// form rotates the smallest x to the front and orients toward the smaller
/// of its two adjacent y points.
struct Cycle {
    std::vector<Rational> xs;
    std::vector<Rational> ys;

    size_t length() const { return xs.size(); }
    /// The 2n paths traversed, in cycle order: out, in, out, in, ...
    std::vector<Path> paths() const;
    /// Sorted distinct path set (for ownership tests).
    std::vector<Path> sorted_paths() const;

    Cycle canonical() const;

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Checks the cycle conditions against S: alternation, closure, pairwise
/// distinct interior points, and membership of every traversed path.
bool verify_cycle(const Support& s, const Cycle& c);

/// Fundamental cycle basis of the bipartite path graph: spanning forest
/// plus one cycle per non-tree edge. Basis size is
/// |S| - |S_X| - |S_Y| + #components.
std::vector<Cycle> cycle_basis(const Support& s);

/// A cycle of 2-meshes: an even cyclic sequence of binomial meshes in which
/// consecutive meshes alternately share the unordered y pair and the x.
struct MeshCycle {
    std::vector<Mesh> meshes;
    friend bool operator==(const MeshCycle&, const MeshCycle&) = default;
};

bool verify_mesh_cycle(const Support& s, const MeshCycle& mc);

/// Finds cycles of 2-meshes through the incidence graph between x points
/// and unordered y pairs (an edge per binomial mesh of S); simple cycles of
/// that graph are exactly the alternating mesh cycles, so the returned
/// fundamental basis is empty iff S contains no cycle of 2-meshes.
std::vector<MeshCycle> find_mesh_cycles(const Support& s);

/// Pool of n free cycles covering exactly n x points, with the balance
/// matrix gamma[i][j] = (outgoing y of x_j in cycle i) - (incoming y of x_j
/// in cycle i), zero when x_j is not visited. Every gamma row sums to zero.
struct CyclePool {
    std::vector<Cycle> cycles;
    std::vector<Rational> x_points;               // sorted union of cycle x sections
    std::vector<std::vector<Rational>> gamma;     // cycles.size() x x_points.size()
};

std::vector<std::vector<Rational>> pool_gamma(const std::vector<Cycle>& cycles,
                                              const std::vector<Rational>& x_points);

/// Checks both pool conditions (x-count and freeness) plus the gamma
/// bookkeeping.
bool verify_pool(const Support& s, const CyclePool& pool);

/// Searches for a free pool among the basis cycles and the elementary
/// cycles recovered from symmetric differences of up to 3 basis elements.
/// Deterministic first hit; examination is capped, so `nullopt` means the
/// search failed, not that no pool exists.
std::optional<CyclePool> find_free_pool(const Support& s, size_t candidate_budget = 10000);

/// A signed perturbation: nonzero weight deltas indexed by path, sorted.
using PerturbationVector = std::vector<std::pair<Path, Rational>>;

struct PerturbationPair {
    MartingaleCoupling q1;
    MartingaleCoupling q2;
    PerturbationVector delta; // what was added to q1 / subtracted from q2
};

struct ExtremalityResult {
    bool extremal = false;
    /// Exact basis of signed perturbations preserving both marginals and
    /// the martingale property, as functions on supp(Q).
    std::vector<PerturbationVector> kernel_basis;
};

/// Extremality oracle: with finite supports and strictly positive weights,
/// Q is extremal iff the homogeneous system {per-y column sums, per-x row
/// sums, per-x y-moments} restricted to supp(Q) has a trivial kernel.
/// Throws Error("invalid-coupling") when validate_coupling fails.
ExtremalityResult extremality_kernel(const MartingaleCoupling& q);

/// True when the signed path function sums to zero in every constraint
/// family on S: per-x mass, per-x y-moment, per-y mass. This is the replay
/// check shared by kernel vectors, cokernel witnesses and dual
/// certificates.
bool annihilates_families(const Support& s, const std::map<Path, Rational>& v);

/// Solves the pool's balance system for a nonzero parameter vector, applies
/// the alternating-sign perturbation of each cycle, and returns the pair
/// Q +/- scale * delta, both re-validated. Without an explicit scale, half
/// of the minimum ratio Q(path)/|delta(path)| over perturbed paths is used,
/// which keeps both outputs strictly positive with margin.
PerturbationPair build_pool_perturbation(const MartingaleCoupling& q, const CyclePool& pool,
                                         std::optional<Rational> scale = std::nullopt);

} // namespace martex
