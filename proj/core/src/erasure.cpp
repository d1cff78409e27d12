#include "martex/erasure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace martex {

std::string to_string(EraseOp op) {
    switch (op) {
        case EraseOp::E1x: return "E1x";
        case EraseOp::E1y: return "E1y";
        case EraseOp::E2y: return "E2y";
    }
    return "?";
}

std::optional<EraseOp> erase_op_from_string(const std::string& name) {
    if (name == "E1x") return EraseOp::E1x;
    if (name == "E1y") return EraseOp::E1y;
    if (name == "E2y") return EraseOp::E2y;
    return std::nullopt;
}

namespace {

std::vector<Path> matches(const Support& s, EraseOp op) {
    std::vector<Path> out;
    for (const auto& p : s.paths()) {
        bool hit = false;
        switch (op) {
            case EraseOp::E1x: hit = s.x_section(p.y).size() == 1; break;
            case EraseOp::E1y: hit = s.y_section(p.x).size() == 1; break;
            case EraseOp::E2y: hit = s.y_section(p.x).size() == 2; break;
        }
        if (hit) out.push_back(p);
    }
    return out;
}

} // namespace

Support erase_once(const Support& s, EraseOp op) {
    return s.minus(matches(s, op));
}

ErasureTrace erasure_fixpoint(const Support& s) {
    ErasureTrace trace;
    Support cur = s;
    const EraseOp composite[] = {EraseOp::E1x, EraseOp::E1y, EraseOp::E2y};
    for (;;) {
        size_t before = cur.size();
        for (EraseOp op : composite) {
            auto removed = matches(cur, op);
            if (removed.empty()) continue;
            cur = cur.minus(removed);
            trace.steps.push_back({op, std::move(removed)});
        }
        ++trace.rounds;
        if (cur.size() == before) break;
    }
    trace.fixpoint = cur;
    trace.fully_erasable = cur.empty();
    return trace;
}

bool replay_erasure(const Support& start, const ErasureTrace& trace) {
    Support cur = start;
    for (const auto& step : trace.steps) {
        auto expected = matches(cur, step.op);
        if (expected != step.removed) return false;
        cur = cur.minus(expected);
    }
    if (!(cur == trace.fixpoint)) return false;
    for (EraseOp op : {EraseOp::E1x, EraseOp::E1y, EraseOp::E2y})
        if (!matches(cur, op).empty()) return false;
    return trace.fully_erasable == cur.empty();
}

bool is_k_erased(const Support& s, int k) {
    size_t need = k == 1 ? 2 : 3;
    for (const auto& x : s.x_points())
        if (s.y_section(x).size() < need) return false;
    return true;
}

bool verify_2link_ordering(const Support& s, const TwoLinkOrdering& ordering) {
    std::vector<Rational> sorted = ordering.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != s.x_points()) return false;
    std::set<Rational> seen;
    for (const auto& x : ordering.order) {
        size_t hits = 0;
        for (const auto& y : s.y_section(x))
            if (seen.count(y)) ++hits;
        if (hits > 2) return false;
        for (const auto& y : s.y_section(x)) seen.insert(y);
    }
    return true;
}

std::optional<TwoLinkOrdering> find_2link_ordering(const Support& s) {
    std::vector<Rational> remaining = s.x_points();
    std::vector<Rational> removal;
    // y -> how many remaining sections contain it
    std::map<Rational, size_t> cover;
    for (const auto& x : remaining)
        for (const auto& y : s.y_section(x)) ++cover[y];

    while (!remaining.empty()) {
        size_t chosen = remaining.size();
        for (size_t i = 0; i < remaining.size(); ++i) {
            size_t shared = 0;
            for (const auto& y : s.y_section(remaining[i]))
                if (cover[y] >= 2) ++shared;
            if (shared <= 2) { chosen = i; break; } // remaining is sorted: smallest wins
        }
        if (chosen == remaining.size()) return std::nullopt; // peeling stalled
        const Rational x = remaining[chosen];
        for (const auto& y : s.y_section(x)) --cover[y];
        removal.push_back(x);
        remaining.erase(remaining.begin() + static_cast<long>(chosen));
    }
    std::reverse(removal.begin(), removal.end());
    return TwoLinkOrdering{std::move(removal)};
}

} // namespace martex
