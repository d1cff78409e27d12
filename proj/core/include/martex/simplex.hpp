#pragma once

#include "martex/matrix.hpp"
#include "martex/rational.hpp"

#include <optional>
#include <vector>

namespace martex {

enum class Sense { Min, Max };

struct SimplexSolution {
    std::vector<Rational> x;
    Rational objective;          // in the requested sense
    std::vector<size_t> basis;   // basic column indices, sorted
};

/// Exact-rational two-phase primal simplex with Bland's rule over
///   optimize c.x  subject to  A x = b, x >= 0.
/// Bland's rule guarantees termination; the arithmetic is exact so the
/// returned point is a true vertex (basic feasible solution). Returns
/// nullopt when infeasible. Throws Error("unbounded") on an unbounded
/// direction, which cannot happen on transport polytopes.
std::optional<SimplexSolution> simplex_solve(const Matrix& a, const std::vector<Rational>& b,
                                             const std::vector<Rational>& c, Sense sense);

} // namespace martex
