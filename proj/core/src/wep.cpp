#include "martex/wep.hpp"

#include "martex/erasure.hpp"
#include "martex/error.hpp"

#include <algorithm>
#include <set>

namespace martex {

namespace {

size_t index_of(const std::vector<Rational>& sorted, const Rational& v) {
    return static_cast<size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

} // namespace

PathFunction decomposition_residual(const Support& s, const PathFunction& f,
                                    const WepDecomposition& d) {
    PathFunction r;
    for (const auto& p : s.paths()) {
        Rational model = d.phi.at(p.x) + d.h.at(p.x) * (p.y - p.x) - d.psi.at(p.y);
        r[p] = f.at(p) - model;
    }
    return r;
}

Matrix wep_operator(const Support& s) {
    const auto& xs = s.x_points();
    const auto& ys = s.y_points();
    const size_t nx = xs.size(), ny = ys.size();
    Matrix t(s.size(), 2 * nx + ny);
    size_t row = 0;
    for (const auto& p : s.paths()) {
        size_t xi = index_of(xs, p.x);
        size_t yi = index_of(ys, p.y);
        t.at(row, xi) = Rational(1);             // phi(x)
        t.at(row, nx + xi) = p.y - p.x;          // h(x) (y - x)
        t.at(row, 2 * nx + yi) = Rational(-1);   // -psi(y)
        ++row;
    }
    return t;
}

WepResult wep_holds(const Support& s) {
    WepResult r;
    if (s.empty()) {
        r.holds = true;
        return r;
    }
    Matrix t = wep_operator(s);
    r.rank = t.rank();
    if (r.rank == s.size()) {
        r.holds = true;
        return r;
    }
    auto left = t.left_kernel_basis();
    // a left-kernel vector, read as a payoff, lies outside the image:
    // it annihilates every T(phi,h,psi) but pairs with itself as a sum
    // of squares
    PathFunction witness;
    const auto& paths = s.paths();
    for (size_t i = 0; i < paths.size(); ++i) witness[paths[i]] = left.front()[i];
    r.cokernel_witness = std::move(witness);
    return r;
}

namespace {

WepDecomposeResult decompose_by_ordering(const Support& s, const PathFunction& f,
                                         const TwoLinkOrdering& ordering) {
    WepDecomposition d;
    std::set<Rational> known; // y points with decided psi
    for (const auto& x : ordering.order) {
        const auto& sec = s.y_section(x);
        std::vector<Rational> anchors;
        for (const auto& y : sec)
            if (known.count(y)) anchors.push_back(y);
        // pin free psi values at 0 until two anchors are available
        for (const auto& y : sec) {
            if (anchors.size() >= 2) break;
            if (known.count(y)) continue;
            d.psi[y] = Rational(0);
            known.insert(y);
            anchors.push_back(y);
        }
        if (anchors.size() == 1) {
            // singleton section: flat hedge, phi soaks up the value
            const Rational& y1 = anchors[0];
            d.h[x] = Rational(0);
            d.phi[x] = f.at({x, y1}) + d.psi[y1];
        } else {
            const Rational &y1 = anchors[0], &y2 = anchors[1];
            d.h[x] = (f.at({x, y2}) - f.at({x, y1}) + d.psi[y2] - d.psi[y1]) / (y2 - y1);
            d.phi[x] = f.at({x, y1}) - d.h[x] * (y1 - x) + d.psi[y1];
        }
        for (const auto& y : sec) {
            if (known.count(y)) continue;
            d.psi[y] = d.phi[x] + d.h[x] * (y - x) - f.at({x, y});
            known.insert(y);
        }
    }
    return d;
}

WepDecomposeResult decompose_dense(const Support& s, const PathFunction& f) {
    Matrix t = wep_operator(s);
    std::vector<Rational> b;
    for (const auto& p : s.paths()) b.push_back(f.at(p));
    LinearSolveResult solved = solve_exact(t, b);
    if (solved.solution) {
        const auto& xs = s.x_points();
        const auto& ys = s.y_points();
        const auto& v = *solved.solution;
        WepDecomposition d;
        for (size_t i = 0; i < xs.size(); ++i) {
            d.phi[xs[i]] = v[i];
            d.h[xs[i]] = v[xs.size() + i];
        }
        for (size_t j = 0; j < ys.size(); ++j) d.psi[ys[j]] = v[2 * xs.size() + j];
        return d;
    }
    WepInfeasibility cert;
    const auto& z = *solved.infeasibility;
    const auto& paths = s.paths();
    Rational pairing;
    for (size_t i = 0; i < paths.size(); ++i) {
        cert.dual[paths[i]] = z[i];
        pairing += z[i] * b[i];
    }
    cert.pairing = pairing;
    return cert;
}

} // namespace

WepDecomposeResult wep_decompose(const Support& s, const PathFunction& f) {
    for (const auto& p : s.paths())
        if (!f.count(p)) throw Error("payoff-domain-mismatch",
                                     "payoff missing at (" + p.x.str() + ", " + p.y.str() + ")");
    if (s.empty()) return WepDecomposition{};
    if (auto ordering = find_2link_ordering(s))
        return decompose_by_ordering(s, f, *ordering);
    return decompose_dense(s, f);
}

SaturationReport verify_saturation_theorem(const Support& s) {
    if (!is_k_erased(s, 1))
        throw Error("not-1-erased", "saturation analysis needs a 1-erased set");
    SaturationReport report;
    report.wep = wep_holds(s).holds;
    for (const auto& net : grow_2nets(s)) {
        ++report.nets_examined;
        auto sat = check_saturated(net, s);
        if (sat.saturated) continue;
        report.all_saturated = false;
        if (!report.non_saturated_net) {
            report.non_saturated_net = net;
            report.missing_paths = sat.missing;
        }
    }
    if (report.wep && !report.all_saturated) report.theorem_violated = true;
    if (!report.wep && report.all_saturated) report.search_incomplete_hint = true;
    return report;
}

} // namespace martex
