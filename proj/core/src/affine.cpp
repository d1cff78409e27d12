#include "martex/affine.hpp"

#include "martex/error.hpp"
#include "martex/erasure.hpp"
#include "martex/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>

namespace martex {

namespace {

void require_1erased(const Support& s) {
    if (!is_k_erased(s, 1))
        throw Error("not-1-erased", "operation needs |Y(x)| >= 2 for every x");
}

size_t y_index(const std::vector<Rational>& ys, const Rational& y) {
    return static_cast<size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
}

} // namespace

AffineBasis s_affine_space(const Support& s) {
    require_1erased(s);
    const auto& ys = s.y_points();
    const size_t n = ys.size();

    std::vector<std::vector<Rational>> rows;
    for (const auto& x : s.x_points()) {
        const auto& sec = s.y_section(x);
        for (size_t i = 0; i + 2 < sec.size(); ++i) {
            const Rational &y1 = sec[i], &y2 = sec[i + 1], &y3 = sec[i + 2];
            std::vector<Rational> row(n);
            // (psi2 - psi1)(y3 - y1) - (psi3 - psi1)(y2 - y1) = 0
            row[y_index(ys, y1)] += y2 - y3;
            row[y_index(ys, y2)] += y3 - y1;
            row[y_index(ys, y3)] += y1 - y2;
            rows.push_back(std::move(row));
        }
    }

    AffineBasis out;
    if (rows.empty()) {
        // no section has three points: all of R^{S_Y} is S-affine
        for (size_t j = 0; j < n; ++j) {
            YFunction f;
            for (size_t k = 0; k < n; ++k) f[ys[k]] = Rational(k == j ? 1 : 0);
            out.basis.push_back(std::move(f));
        }
        out.dim = n;
        return out;
    }

    Matrix a(rows.size(), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < n; ++c) a.at(r, c) = rows[r][c];
    for (const auto& v : a.kernel_basis()) {
        YFunction f;
        for (size_t k = 0; k < n; ++k) f[ys[k]] = v[k];
        out.basis.push_back(std::move(f));
    }
    out.dim = out.basis.size();
    return out;
}

SectionAffine section_affine_params(const Support& s, const Rational& x, const YFunction& psi) {
    const auto& sec = s.y_section(x);
    if (sec.size() < 2) throw Error("not-1-erased", "section at " + x.str() + " has fewer than 2 points");
    const Rational &y1 = sec[0], &y2 = sec[1];
    const Rational p1 = psi.at(y1), p2 = psi.at(y2);
    SectionAffine out;
    out.h = (p1 - p2) / (y1 - y2);
    out.phi = p1 - out.h * (y1 - x); // psi(y) = phi + h (y - x)
    return out;
}

bool globally_affine(const std::vector<Rational>& points, const YFunction& f) {
    for (size_t i = 0; i + 2 < points.size(); ++i) {
        const Rational &y1 = points[i], &y2 = points[i + 1], &y3 = points[i + 2];
        if ((f.at(y2) - f.at(y1)) * (y3 - y1) != (f.at(y3) - f.at(y1)) * (y2 - y1))
            return false;
    }
    return true;
}

bool is_2net(const Support& a) {
    require_1erased(a);
    if (a.empty()) return false;
    AffineBasis basis = s_affine_space(a);
    for (const auto& f : basis.basis)
        if (!globally_affine(a.y_points(), f)) return false;
    return true;
}

namespace {

// packed path-index set for the merge closure
struct NetMask {
    std::vector<uint64_t> paths; // over path indices of S
    std::vector<uint64_t> ys;    // over y indices of S_Y

    void set_path(size_t i) { paths[i / 64] |= uint64_t(1) << (i % 64); }
    void set_y(size_t i) { ys[i / 64] |= uint64_t(1) << (i % 64); }
};

size_t shared_y_count_capped(const NetMask& a, const NetMask& b) {
    size_t shared = 0;
    for (size_t w = 0; w < a.ys.size() && shared < 2; ++w)
        shared += static_cast<size_t>(__builtin_popcountll(a.ys[w] & b.ys[w]));
    return shared;
}

struct WordsHash {
    size_t operator()(const std::vector<uint64_t>& words) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : words) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace

std::vector<TwoNet> grow_2nets(const Support& s, size_t budget) {
    require_1erased(s);
    const auto& all = s.paths();
    const auto& ys = s.y_points();
    const size_t path_words = (all.size() + 63) / 64;
    const size_t y_words = (ys.size() + 63) / 64;

    auto y_index = [&](const Rational& y) {
        return static_cast<size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
    };

    std::unordered_set<std::vector<uint64_t>, WordsHash> seen;
    std::vector<NetMask> nets;
    auto push = [&](NetMask net) {
        if (!seen.insert(net.paths).second) return;
        nets.push_back(std::move(net));
    };

    // seeds: every binomial sub-mesh and every full mesh
    for (size_t k = 0; k < all.size(); ++k) {
        for (size_t l = k + 1; l < all.size() && all[l].x == all[k].x; ++l) {
            NetMask net{std::vector<uint64_t>(path_words), std::vector<uint64_t>(y_words)};
            net.set_path(k);
            net.set_path(l);
            net.set_y(y_index(all[k].y));
            net.set_y(y_index(all[l].y));
            push(std::move(net));
        }
        if ((k == 0 || all[k - 1].x != all[k].x) && s.y_section(all[k].x).size() > 2) {
            NetMask net{std::vector<uint64_t>(path_words), std::vector<uint64_t>(y_words)};
            for (size_t l = k; l < all.size() && all[l].x == all[k].x; ++l) {
                net.set_path(l);
                net.set_y(y_index(all[l].y));
            }
            push(std::move(net));
        }
    }

    // merge closure: nets sharing >= 2 y points union into a net
    for (size_t i = 0; i < nets.size() && nets.size() < budget; ++i) {
        for (size_t j = 0; j < i && nets.size() < budget; ++j) {
            if (shared_y_count_capped(nets[i], nets[j]) < 2) continue;
            NetMask merged = nets[i];
            for (size_t w = 0; w < path_words; ++w) merged.paths[w] |= nets[j].paths[w];
            for (size_t w = 0; w < y_words; ++w) merged.ys[w] |= nets[j].ys[w];
            push(std::move(merged));
        }
    }

    std::vector<TwoNet> out;
    out.reserve(nets.size());
    for (const auto& net : nets) {
        std::vector<Path> paths;
        for (size_t k = 0; k < all.size(); ++k)
            if (net.paths[k / 64] & (uint64_t(1) << (k % 64))) paths.push_back(all[k]);
        out.push_back(TwoNet{Support(std::move(paths))});
    }
    std::sort(out.begin(), out.end(), [](const TwoNet& a, const TwoNet& b) {
        return a.paths.paths() < b.paths.paths();
    });
    return out;
}

SaturationResult check_saturated(const TwoNet& a, const Support& s) {
    SaturationResult r;
    for (const auto& p : s.paths()) {
        if (!a.paths.contains_x(p.x) || !a.paths.contains_y(p.y)) continue;
        if (!a.paths.contains(p)) {
            r.saturated = false;
            r.missing.push_back(p);
        }
    }
    return r;
}

} // namespace martex
