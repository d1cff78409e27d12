#pragma once

#include "martex/support.hpp"

#include <optional>
#include <string>
#include <vector>

namespace martex {

/// The three erasure operators of the path calculus:
///   E1x removes paths whose y has a single preimage (|X(y)| == 1),
///   E1y removes paths at an x with a singleton section (|Y(x)| == 1),
///   E2y removes paths at an x with a binomial section (|Y(x)| == 2).
enum class EraseOp { E1x, E1y, E2y };

std::string to_string(EraseOp op);
std::optional<EraseOp> erase_op_from_string(const std::string& name);

/// Applies one operator, evaluating its predicate against the input set
/// (simultaneous removal, not sequential within the application).
Support erase_once(const Support& s, EraseOp op);

struct ErasureStep {
    EraseOp op;
    std::vector<Path> removed; // sorted
};

/// Replayable record of iterating the composite E = E2y . E1y . E1x to its
/// fixpoint. fully_erasable iff the fixpoint is empty.
struct ErasureTrace {
    std::vector<ErasureStep> steps;
    Support fixpoint;
    bool fully_erasable = false;
    size_t rounds = 0; // number of composite applications until stable
};

ErasureTrace erasure_fixpoint(const Support& s);

/// Replays a trace against `start`: applies the recorded operators in order
/// and checks that each recorded removal matches the operator's predicate
/// exactly, ending at the recorded fixpoint (which E must leave unchanged).
bool replay_erasure(const Support& start, const ErasureTrace& trace);

/// k = 1 tests |Y(x)| >= 2 for all x in S_X; k = 2 tests |Y(x)| >= 3.
bool is_k_erased(const Support& s, int k);

struct TwoLinkOrdering {
    std::vector<Rational> order; // numbering of S_X
};

/// Direct recount of the defining condition: every x meets the union of the
/// earlier sections in at most 2 points, and the order covers S_X exactly.
bool verify_2link_ordering(const Support& s, const TwoLinkOrdering& ordering);

/// Reverse greedy peeling: repeatedly remove any x whose section meets the
/// union of the remaining other sections in <= 2 points (smallest such x
/// first), then reverse the removal order. Removing other x's only shrinks
/// the union, so a removable x stays removable and stalling is definitive.
std::optional<TwoLinkOrdering> find_2link_ordering(const Support& s);

} // namespace martex
