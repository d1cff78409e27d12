#include "martex/support.hpp"

#include "martex/error.hpp"

#include <algorithm>
#include <numeric>

namespace martex {

namespace {

size_t index_of(const std::vector<Rational>& sorted, const Rational& v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v) return sorted.size();
    return static_cast<size_t>(it - sorted.begin());
}

} // namespace

Support::Support(std::vector<Path> paths) {
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    paths_ = std::move(paths);
    for (const auto& p : paths_) {
        if (p.x.sign() <= 0 || p.y.sign() <= 0)
            throw Error("support", "path points must be > 0");
        xs_.push_back(p.x);
        ys_.push_back(p.y);
    }
    std::sort(xs_.begin(), xs_.end());
    xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
    std::sort(ys_.begin(), ys_.end());
    ys_.erase(std::unique(ys_.begin(), ys_.end()), ys_.end());

    y_sections_.resize(xs_.size());
    x_sections_.resize(ys_.size());
    for (const auto& p : paths_) {
        y_sections_[index_of(xs_, p.x)].push_back(p.y);
        x_sections_[index_of(ys_, p.y)].push_back(p.x);
    }
    for (auto& sec : y_sections_) std::sort(sec.begin(), sec.end());
    for (auto& sec : x_sections_) std::sort(sec.begin(), sec.end());
}

bool Support::contains(const Path& p) const {
    return std::binary_search(paths_.begin(), paths_.end(), p);
}

bool Support::contains_x(const Rational& x) const {
    return index_of(xs_, x) < xs_.size();
}

bool Support::contains_y(const Rational& y) const {
    return index_of(ys_, y) < ys_.size();
}

const std::vector<Rational>& Support::y_section(const Rational& x) const {
    size_t i = index_of(xs_, x);
    if (i == xs_.size()) throw Error("unknown-x", "no path with x = " + x.str());
    return y_sections_[i];
}

const std::vector<Rational>& Support::x_section(const Rational& y) const {
    size_t i = index_of(ys_, y);
    if (i == ys_.size()) throw Error("unknown-y", "no path with y = " + y.str());
    return x_sections_[i];
}

Mesh Support::mesh_at(const Rational& x) const {
    return Mesh{x, y_section(x)};
}

Support Support::minus(const std::vector<Path>& removed) const {
    std::vector<Path> rm = removed;
    std::sort(rm.begin(), rm.end());
    std::vector<Path> kept;
    kept.reserve(paths_.size());
    for (const auto& p : paths_)
        if (!std::binary_search(rm.begin(), rm.end(), p)) kept.push_back(p);
    return Support(std::move(kept));
}

std::vector<std::vector<Path>> connected_subclasses(const Support& s) {
    const auto& paths = s.paths();
    const size_t n = paths.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](size_t a, size_t b) {
        a = find(a); b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    // link consecutive paths sharing an x (paths are sorted by x first),
    // and all paths sharing a y
    for (size_t i = 0; i + 1 < n; ++i)
        if (paths[i].x == paths[i + 1].x) unite(i, i + 1);
    for (const auto& y : s.y_points()) {
        const auto& col = s.x_section(y);
        size_t first = n;
        for (size_t i = 0; i < n; ++i) {
            if (paths[i].y != y) continue;
            if (first == n) first = i; else unite(first, i);
        }
        (void)col;
    }

    std::vector<std::vector<Path>> classes;
    std::vector<size_t> root_to_class(n, n);
    for (size_t i = 0; i < n; ++i) {
        size_t r = find(i);
        if (root_to_class[r] == n) {
            root_to_class[r] = classes.size();
            classes.emplace_back();
        }
        classes[root_to_class[r]].push_back(paths[i]);
    }
    // paths are visited in sorted order, so classes are already ordered by
    // their smallest path and internally sorted
    return classes;
}

std::vector<IntersectionViolation> intersection_screen(const Support& s) {
    std::vector<IntersectionViolation> out;
    const auto& xs = s.x_points();
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = i + 1; j < xs.size(); ++j) {
            const auto& a = s.y_section(xs[i]);
            const auto& b = s.y_section(xs[j]);
            std::vector<Rational> shared;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(shared));
            if (shared.size() >= 3)
                out.push_back({xs[i], xs[j], std::move(shared)});
        }
    }
    return out;
}

} // namespace martex
