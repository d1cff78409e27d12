#pragma once

#include "martex/coupling.hpp"
#include "martex/instance.hpp"
#include "martex/support.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace martex {

/// Fixed enumeration grid: y points 1..max_y, x points at half-integers
/// 3/2, 5/2, ... so every x straddles part of the y grid and never
/// coincides with it.
struct GridSpec {
    std::vector<Rational> xs;
    std::vector<Rational> ys;
};

GridSpec default_grid(size_t max_x, size_t max_y);

/// All 1-erased supports over the grid that admit a strictly positive
/// martingale coupling (every used section straddles its x). Rows may be
/// empty, so |S_X| ranges over 1..|grid.xs|. Deterministic order.
void enumerate_supports(const GridSpec& grid, const std::function<void(const Support&)>& fn);

/// Number of supports enumerate_supports will visit.
uint64_t count_supports(const GridSpec& grid);

struct FuzzConfig {
    size_t max_x = 3;
    size_t max_y = 4;
    bool exhaustive = false;  // bounds capped at (4, 6)
    uint64_t budget = 0;      // sampled instances when not exhaustive
    uint64_t seed = 0;
    size_t threads = 1;
    bool with_saturation = true;     // cross-check the saturation theorem
    size_t saturation_max_paths = 14; // skip the net closure on larger supports
};

struct FuzzSummary {
    uint64_t instances = 0;
    uint64_t two_link = 0;
    uint64_t fully_erasable = 0;
    uint64_t wep = 0;
    uint64_t extremal = 0;
    uint64_t mesh_cyclic = 0;
    uint64_t pools_found = 0;
    uint64_t decompose_replays = 0;
    /// Implication failures; any entry is a bug in the tool.
    std::vector<std::string> violations;
    /// Non-extremal instances where the bounded pool search found nothing:
    /// data for the open converse, one replayable instance per entry.
    std::vector<InstanceFile> conjecture_log;
};

/// Enumerates (or samples) supports on the grid, attaches the canonical
/// strictly positive coupling, asserts the implication chain
/// 2-link => fully erasable => WEP => extremal, the finite equivalences
/// (2-link <=> fully erasable; WEP <=> fully erasable when |S_Y| <= 5; WEP
/// <=> extremal), the necessary-condition screens, and pool soundness; the
/// two built-in fixtures (shared triple, free-cycle pattern) are always
/// included. Deterministic for a given config, including under threads.
FuzzSummary run_fuzz(const FuzzConfig& config);

/// The 2x3 shared-triple coupling (x = 3/2, 2 over y = 1, 2, 3): the
/// smallest non-extremal pattern, with a 1-dimensional perturbation kernel.
MartingaleCoupling shared_triple_fixture();

/// The 10-path erased pattern carried by three free cycles on 3 x points
/// and 5 y points; it fails the WEP, contains no cycle of 2-meshes, and is
/// its own erasure fixpoint.
MartingaleCoupling free_cycle_fixture();

/// One stable JSONL line per conjecture-log entry.
std::string conjecture_log_line(const InstanceFile& instance);

} // namespace martex
