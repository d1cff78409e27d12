#pragma once

#include "martex/rational.hpp"

#include <vector>

namespace martex {

/// One path (x, y) of the product space. Ordered lexicographically so path
/// sets have a canonical enumeration order.
struct Path {
    Rational x;
    Rational y;

    friend bool operator==(const Path&, const Path&) = default;
    friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

/// A mesh {x} x ys. |ys| == 2 makes it a binomial (2-)mesh.
struct Mesh {
    Rational x;
    std::vector<Rational> ys; // sorted, distinct, nonempty

    bool is_binomial() const { return ys.size() == 2; }
    friend bool operator==(const Mesh&, const Mesh&) = default;
    friend std::strong_ordering operator<=>(const Mesh&, const Mesh&) = default;
};

/// Finite set of paths S with section accessors. Paths are stored sorted
/// and deduplicated; two supports are equal iff their path sets over values
/// are equal. The projections cover exactly the points referenced by at
/// least one path.
class Support {
public:
    Support() = default;
    explicit Support(std::vector<Path> paths);

    const std::vector<Path>& paths() const { return paths_; }
    size_t size() const { return paths_.size(); }
    bool empty() const { return paths_.empty(); }

    const std::vector<Rational>& x_points() const { return xs_; }
    const std::vector<Rational>& y_points() const { return ys_; }

    bool contains(const Path& p) const;
    bool contains_x(const Rational& x) const;
    bool contains_y(const Rational& y) const;

    /// Y_S(x); throws Error("unknown-x") when x is not in S_X.
    const std::vector<Rational>& y_section(const Rational& x) const;
    /// X_S(y); throws Error("unknown-y") when y is not in S_Y.
    const std::vector<Rational>& x_section(const Rational& y) const;

    /// The full mesh {x} x Y_S(x).
    Mesh mesh_at(const Rational& x) const;

    Support minus(const std::vector<Path>& removed) const;

    friend bool operator==(const Support&, const Support&) = default;

private:
    std::vector<Path> paths_;                        // sorted
    std::vector<Rational> xs_, ys_;                  // sorted projections
    std::vector<std::vector<Rational>> y_sections_;  // by index into xs_
    std::vector<std::vector<Rational>> x_sections_;  // by index into ys_
};

/// Partition of the paths of S under the transitive closure of the
/// neighbour relation (two paths are neighbours when they share the x or
/// the y point). Classes are ordered by their smallest path, and each class
/// lists its paths sorted.
std::vector<std::vector<Path>> connected_subclasses(const Support& s);

struct IntersectionViolation {
    Rational x1, x2;                // x1 < x2
    std::vector<Rational> shared_ys; // |.| >= 3, sorted
};

/// Lists every unordered pair x1 < x2 whose sections share at least three
/// y points. A nonempty list rules out both the WEP and extremality.
std::vector<IntersectionViolation> intersection_screen(const Support& s);

} // namespace martex
