#include "martex/simplex.hpp"

#include "martex/error.hpp"

#include <algorithm>

namespace martex {

namespace {

/// Tableau with explicit basis bookkeeping. Column layout: structural
/// variables, then artificials, then the rhs.
struct Tableau {
    size_t m, n_struct, n_total;
    std::vector<std::vector<Rational>> rows; // m x (n_total + 1)
    std::vector<Rational> cost;              // reduced cost row, n_total + 1
    std::vector<size_t> basis;               // basic column per row

    Rational& rhs(size_t r) { return rows[r][n_total]; }

    void pivot(size_t r, size_t c) {
        Rational inv = Rational(1) / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            for (size_t j = 0; j <= n_total; ++j) rows[i][j] -= f * rows[r][j];
        }
        if (!cost[c].is_zero()) {
            Rational f = cost[c];
            for (size_t j = 0; j <= n_total; ++j) cost[j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    // Bland: entering = smallest column with negative reduced cost;
    // leaving = min ratio, ties broken by smallest basic variable index.
    // Returns false when optimal; throws on an unbounded column.
    bool step(size_t col_limit) {
        size_t enter = n_total;
        for (size_t j = 0; j < col_limit; ++j) {
            if (cost[j].sign() < 0) { enter = j; break; }
        }
        if (enter == n_total) return false;
        size_t leave = m;
        for (size_t i = 0; i < m; ++i) {
            if (rows[i][enter].sign() <= 0) continue;
            if (leave == m) { leave = i; continue; }
            Rational lhs = rhs(i) * rows[leave][enter];
            Rational rhsv = rhs(leave) * rows[i][enter];
            if (lhs < rhsv || (lhs == rhsv && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) throw Error("unbounded", "unbounded improving direction");
        pivot(leave, enter);
        return true;
    }
};

} // namespace

std::optional<SimplexSolution> simplex_solve(const Matrix& a, const std::vector<Rational>& b,
                                             const std::vector<Rational>& c, Sense sense) {
    const size_t m = a.rows(), n = a.cols();
    if (b.size() != m || c.size() != n) throw Error("linalg", "simplex dimension mismatch");

    Tableau t;
    t.m = m;
    t.n_struct = n;
    t.n_total = n + m; // one artificial per row
    t.rows.assign(m, std::vector<Rational>(t.n_total + 1));
    t.basis.resize(m);
    for (size_t i = 0; i < m; ++i) {
        int flip = b[i].sign() < 0 ? -1 : 1;
        for (size_t j = 0; j < n; ++j) t.rows[i][j] = Rational(flip) * a.at(i, j);
        t.rows[i][n + i] = Rational(1);
        t.rows[i][t.n_total] = Rational(flip) * b[i];
        t.basis[i] = n + i;
    }

    // phase 1: minimize the sum of artificials
    t.cost.assign(t.n_total + 1, Rational(0));
    for (size_t i = 0; i < m; ++i) t.cost[n + i] = Rational(1);
    for (size_t i = 0; i < m; ++i) {
        // make the cost row consistent with the artificial basis
        for (size_t j = 0; j <= t.n_total; ++j) t.cost[j] -= t.rows[i][j];
    }
    while (t.step(t.n_total)) {}
    // the cost cell carries minus the phase-1 objective; nonzero = infeasible
    if (!t.cost[t.n_total].is_zero()) return std::nullopt;

    // drive surviving zero-level artificials out of the basis
    std::vector<bool> drop_row(m, false);
    for (size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        size_t col = n;
        for (size_t j = 0; j < n; ++j)
            if (!t.rows[i][j].is_zero()) { col = j; break; }
        if (col == n) {
            drop_row[i] = true; // redundant constraint
        } else {
            t.pivot(i, col);
        }
    }
    if (std::any_of(drop_row.begin(), drop_row.end(), [](bool v) { return v; })) {
        Tableau compact;
        compact.m = 0;
        compact.n_struct = t.n_struct;
        compact.n_total = t.n_total;
        for (size_t i = 0; i < m; ++i) {
            if (drop_row[i]) continue;
            compact.rows.push_back(t.rows[i]);
            compact.basis.push_back(t.basis[i]);
            ++compact.m;
        }
        compact.cost = t.cost;
        t = std::move(compact);
    }

    // phase 2 on the structural columns only
    t.cost.assign(t.n_total + 1, Rational(0));
    for (size_t j = 0; j < n; ++j) t.cost[j] = sense == Sense::Min ? c[j] : -c[j];
    for (size_t i = 0; i < t.m; ++i) {
        if (t.cost[t.basis[i]].is_zero()) continue;
        Rational f = t.cost[t.basis[i]];
        for (size_t j = 0; j <= t.n_total; ++j) t.cost[j] -= f * t.rows[i][j];
    }
    while (t.step(n)) {}

    SimplexSolution sol;
    sol.x.assign(n, Rational(0));
    for (size_t i = 0; i < t.m; ++i)
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.rhs(i);
    Rational obj;
    for (size_t j = 0; j < n; ++j) obj += c[j] * sol.x[j];
    sol.objective = obj;
    for (size_t i = 0; i < t.m; ++i)
        if (t.basis[i] < n) sol.basis.push_back(t.basis[i]);
    std::sort(sol.basis.begin(), sol.basis.end());
    return sol;
}

} // namespace martex
