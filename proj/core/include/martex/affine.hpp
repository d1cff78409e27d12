#pragma once

#include "martex/support.hpp"

#include <map>
#include <optional>
#include <vector>

namespace martex {

/// A function on S_Y, represented on the sorted y points of the ambient
/// support the basis was computed for.
using YFunction = std::map<Rational, Rational>;

/// Exact basis of the space of S-affine functions: functions psi on S_Y
/// that restrict to an affine function on every section Y(x). The per-x
/// slope/intercept are recoverable from any two section points.
struct AffineBasis {
    std::vector<YFunction> basis;
    size_t dim = 0;
};

/// Solves the homogeneous collinearity system over the unknowns psi(y).
/// For each x and each consecutive triple y1 < y2 < y3 of its section the
/// constraint is (psi(y2)-psi(y1))(y3-y1) = (psi(y3)-psi(y1))(y2-y1);
/// consecutive triples span the same constraints as all triples.
/// Requires a 1-erased input; throws Error("not-1-erased") otherwise.
AffineBasis s_affine_space(const Support& s);

/// Slope and intercept of psi on the section Y(x), from its first two
/// points: h = (psi(y1)-psi(y2))/(y1-y2) and the matching intercept value
/// phi with psi(y) = phi + h (y - x) on the section.
struct SectionAffine {
    Rational phi;
    Rational h;
};
SectionAffine section_affine_params(const Support& s, const Rational& x, const YFunction& psi);

/// True when the function is affine across the whole sorted point list
/// (all consecutive triples collinear).
bool globally_affine(const std::vector<Rational>& points, const YFunction& f);

/// A 1-erased subset on which every A-affine function is globally affine.
struct TwoNet {
    Support paths;
    friend bool operator==(const TwoNet&, const TwoNet&) = default;
};

/// Decides the 2-net property by checking that every basis element of
/// Aff(A) is globally affine on A_Y. Requires 1-erased input.
bool is_2net(const Support& a);

/// Best-effort enumeration of the 2-nets of S: seeds every binomial
/// sub-mesh and every full mesh (both are 2-nets), then closes the
/// collection under the union rule "two nets sharing >= 2 y points merge
/// into a net". The result is deduplicated and merge-closed. It is NOT
/// guaranteed to contain every 2-net of S; the WEP rank oracle, not this
/// search, is the ground truth.
std::vector<TwoNet> grow_2nets(const Support& s, size_t budget = 10000);

struct SaturationResult {
    bool saturated = true;
    std::vector<Path> missing; // paths of S inside A_X x A_Y but outside A
};

/// A is saturated in S when every path of S with both endpoints in A's
/// projections already belongs to A.
SaturationResult check_saturated(const TwoNet& a, const Support& s);

} // namespace martex
