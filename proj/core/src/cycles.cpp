#include "martex/cycles.hpp"

#include "martex/error.hpp"
#include "martex/matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace martex {

std::vector<Path> Cycle::paths() const {
    std::vector<Path> out;
    const size_t n = xs.size();
    for (size_t i = 0; i < n; ++i) {
        out.push_back({xs[i], ys[i]});                 // outgoing from xs[i]
        out.push_back({xs[(i + 1) % n], ys[i]});       // incoming to the next x
    }
    return out;
}

std::vector<Path> Cycle::sorted_paths() const {
    auto p = paths();
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

Cycle Cycle::canonical() const {
    const size_t n = xs.size();
    size_t lead = 0;
    for (size_t i = 1; i < n; ++i)
        if (xs[i] < xs[lead]) lead = i;

    auto rotate = [&](const Cycle& c, size_t k) {
        Cycle r;
        for (size_t i = 0; i < n; ++i) {
            r.xs.push_back(c.xs[(k + i) % n]);
            r.ys.push_back(c.ys[(k + i) % n]);
        }
        return r;
    };

    Cycle fwd = rotate(*this, lead);
    // reversed orientation: x0, y_{n-1}, x_{n-1}, y_{n-2}, ..., x_1, y_0
    Cycle bwd;
    bwd.xs.push_back(fwd.xs[0]);
    for (size_t i = n - 1; i >= 1; --i) bwd.xs.push_back(fwd.xs[i]);
    for (size_t i = n; i >= 1; --i) bwd.ys.push_back(fwd.ys[i - 1]);
    // orient toward the smaller adjacent y of the leading x
    return fwd.ys[0] < bwd.ys[0] ? fwd : bwd;
}

bool verify_cycle(const Support& s, const Cycle& c) {
    const size_t n = c.xs.size();
    if (n < 2 || c.ys.size() != n) return false;
    std::set<Rational> xset(c.xs.begin(), c.xs.end());
    std::set<Rational> yset(c.ys.begin(), c.ys.end());
    if (xset.size() != n || yset.size() != n) return false;
    for (size_t i = 0; i < n; ++i) {
        if (!s.contains({c.xs[i], c.ys[i]})) return false;
        if (!s.contains({c.xs[(i + 1) % n], c.ys[i]})) return false;
    }
    return true;
}

namespace {

// bipartite graph on x points (side 0) and y points (side 1)
struct PathGraph {
    std::vector<Rational> xs, ys;
    // adjacency by vertex id: x ids are [0, nx), y ids are [nx, nx+ny)
    std::vector<std::vector<size_t>> adj;
    std::vector<Path> edges; // sorted path list; edge k joins ids of its endpoints
    size_t nx = 0;

    size_t x_id(const Rational& x) const {
        return static_cast<size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
    }
    size_t y_id(const Rational& y) const {
        return nx + static_cast<size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
    }

    explicit PathGraph(const Support& s) {
        xs = s.x_points();
        ys = s.y_points();
        nx = xs.size();
        adj.resize(nx + ys.size());
        edges = s.paths();
        for (size_t k = 0; k < edges.size(); ++k) {
            adj[x_id(edges[k].x)].push_back(k);
            adj[y_id(edges[k].y)].push_back(k);
        }
    }

    size_t other_end(size_t edge, size_t vertex) const {
        size_t a = x_id(edges[edge].x), b = y_id(edges[edge].y);
        return vertex == a ? b : a;
    }
};

// Builds the vertex sequence of the fundamental cycle closed by `extra`
// over the given rooted forest (parent edge per vertex, root = SIZE_MAX).
std::vector<size_t> fundamental_cycle_vertices(const PathGraph& g,
                                               const std::vector<size_t>& parent_edge,
                                               const std::vector<size_t>& parent_vertex,
                                               size_t extra) {
    size_t u = g.x_id(g.edges[extra].x);
    size_t v = g.y_id(g.edges[extra].y);
    // climb to root collecting ancestors
    std::vector<size_t> up_u{u}, up_v{v};
    for (size_t w = u; parent_edge[w] != SIZE_MAX; w = parent_vertex[w]) up_u.push_back(parent_vertex[w]);
    for (size_t w = v; parent_edge[w] != SIZE_MAX; w = parent_vertex[w]) up_v.push_back(parent_vertex[w]);
    std::set<size_t> on_u(up_u.begin(), up_u.end());
    size_t lca = SIZE_MAX;
    for (size_t w : up_v)
        if (on_u.count(w)) { lca = w; break; }
    std::vector<size_t> seq;
    for (size_t w : up_u) {
        seq.push_back(w);
        if (w == lca) break;
    }
    std::vector<size_t> tail;
    for (size_t w : up_v) {
        if (w == lca) break;
        tail.push_back(w);
    }
    std::reverse(tail.begin(), tail.end());
    seq.insert(seq.end(), tail.begin(), tail.end());
    return seq; // u ... lca ... v; closing edge (v, u) is `extra`
}

Cycle cycle_from_vertices(const PathGraph& g, std::vector<size_t> seq) {
    // seq alternates sides and has even length; rotate so an x vertex leads
    if (seq[0] >= g.nx) {
        std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    }
    Cycle c;
    for (size_t i = 0; i < seq.size(); i += 2) {
        c.xs.push_back(g.xs[seq[i]]);
        c.ys.push_back(g.ys[seq[i + 1] - g.nx]);
    }
    return c.canonical();
}

} // namespace

std::vector<Cycle> cycle_basis(const Support& s) {
    if (s.empty()) return {};
    PathGraph g(s);
    const size_t nv = g.adj.size();
    std::vector<size_t> parent_edge(nv, SIZE_MAX), parent_vertex(nv, SIZE_MAX);
    std::vector<bool> visited(nv, false);
    std::vector<bool> tree_edge(g.edges.size(), false);

    for (size_t root = 0; root < nv; ++root) {
        if (visited[root]) continue;
        std::vector<size_t> stack{root};
        visited[root] = true;
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (size_t e : g.adj[u]) {
                size_t w = g.other_end(e, u);
                if (visited[w]) continue;
                visited[w] = true;
                parent_edge[w] = e;
                parent_vertex[w] = u;
                tree_edge[e] = true;
                stack.push_back(w);
            }
        }
    }

    std::vector<Cycle> basis;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (tree_edge[e]) continue;
        basis.push_back(cycle_from_vertices(g, fundamental_cycle_vertices(g, parent_edge, parent_vertex, e)));
    }
    std::sort(basis.begin(), basis.end(), [](const Cycle& a, const Cycle& b) {
        return std::pair(a.xs, a.ys) < std::pair(b.xs, b.ys);
    });
    return basis;
}

namespace {

using YPair = std::pair<Rational, Rational>; // ordered y < y'

} // namespace

bool verify_mesh_cycle(const Support& s, const MeshCycle& mc) {
    const size_t m = mc.meshes.size();
    if (m < 4 || m % 2 != 0) return false;
    std::vector<YPair> pairs;
    std::vector<Rational> xs;
    for (const auto& mesh : mc.meshes) {
        if (!mesh.is_binomial()) return false;
        for (const auto& y : mesh.ys)
            if (!s.contains({mesh.x, y})) return false;
        pairs.emplace_back(mesh.ys[0], mesh.ys[1]);
        xs.push_back(mesh.x);
    }
    // alternation: meshes 2i, 2i+1 share the pair across distinct x's;
    // meshes 2i+1, 2i+2 share the x across distinct pairs
    for (size_t i = 0; i < m; i += 2) {
        if (pairs[i] != pairs[i + 1] || xs[i] == xs[i + 1]) return false;
        if (xs[(i + 1) % m] != xs[(i + 2) % m] || pairs[(i + 1) % m] == pairs[(i + 2) % m]) return false;
    }
    // pairwise distinct x's and pairs along the cycle
    std::set<Rational> xset;
    std::set<YPair> pset;
    for (size_t i = 0; i < m; i += 2) {
        if (!pset.insert(pairs[i]).second) return false;
        if (!xset.insert(xs[i + 1]).second) return false;
    }
    return true;
}

std::vector<MeshCycle> find_mesh_cycles(const Support& s) {
    // incidence graph: one side the x points, the other side the y pairs
    // occurring inside some section; an edge per binomial mesh of S
    std::vector<Rational> xs = s.x_points();
    std::vector<YPair> pairs;
    struct MeshEdge { size_t x_idx; size_t pair_idx; };
    std::vector<MeshEdge> edges;

    std::map<YPair, size_t> pair_idx;
    for (size_t xi = 0; xi < xs.size(); ++xi) {
        const auto& sec = s.y_section(xs[xi]);
        for (size_t i = 0; i < sec.size(); ++i) {
            for (size_t j = i + 1; j < sec.size(); ++j) {
                YPair p{sec[i], sec[j]};
                auto [it, inserted] = pair_idx.try_emplace(p, pairs.size());
                if (inserted) pairs.push_back(p);
                edges.push_back({xi, it->second});
            }
        }
    }

    const size_t nx = xs.size();
    const size_t nv = nx + pairs.size();
    std::vector<std::vector<size_t>> adj(nv);
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].x_idx].push_back(e);
        adj[nx + edges[e].pair_idx].push_back(e);
    }
    auto other = [&](size_t e, size_t v) {
        return v == edges[e].x_idx ? nx + edges[e].pair_idx : edges[e].x_idx;
    };

    std::vector<size_t> parent_edge(nv, SIZE_MAX), parent_vertex(nv, SIZE_MAX);
    std::vector<bool> visited(nv, false);
    std::vector<bool> tree_edge(edges.size(), false);
    for (size_t root = 0; root < nv; ++root) {
        if (visited[root]) continue;
        std::vector<size_t> stack{root};
        visited[root] = true;
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (size_t e : adj[u]) {
                size_t w = other(e, u);
                if (visited[w]) continue;
                visited[w] = true;
                parent_edge[w] = e;
                parent_vertex[w] = u;
                tree_edge[e] = true;
                stack.push_back(w);
            }
        }
    }

    std::vector<MeshCycle> out;
    for (size_t e = 0; e < edges.size(); ++e) {
        if (tree_edge[e]) continue;
        // fundamental cycle vertex sequence
        size_t u = edges[e].x_idx, v = nx + edges[e].pair_idx;
        std::vector<size_t> up_u{u}, up_v{v};
        for (size_t w = u; parent_edge[w] != SIZE_MAX; w = parent_vertex[w]) up_u.push_back(parent_vertex[w]);
        for (size_t w = v; parent_edge[w] != SIZE_MAX; w = parent_vertex[w]) up_v.push_back(parent_vertex[w]);
        std::set<size_t> on_u(up_u.begin(), up_u.end());
        size_t lca = SIZE_MAX;
        for (size_t w : up_v)
            if (on_u.count(w)) { lca = w; break; }
        std::vector<size_t> seq;
        for (size_t w : up_u) {
            seq.push_back(w);
            if (w == lca) break;
        }
        std::vector<size_t> tail;
        for (size_t w : up_v) {
            if (w == lca) break;
            tail.push_back(w);
        }
        std::reverse(tail.begin(), tail.end());
        seq.insert(seq.end(), tail.begin(), tail.end());
        if (seq[0] >= nx) std::rotate(seq.begin(), seq.begin() + 1, seq.end());

        // vertex cycle x0, P0, x1, P1, ... -> mesh sequence
        MeshCycle mc;
        const size_t m = seq.size();
        for (size_t i = 0; i < m; i += 2) {
            size_t x_here = seq[i];
            size_t p_here = seq[i + 1] - nx;
            size_t x_next = seq[(i + 2) % m];
            mc.meshes.push_back(Mesh{xs[x_here], {pairs[p_here].first, pairs[p_here].second}});
            mc.meshes.push_back(Mesh{xs[x_next], {pairs[p_here].first, pairs[p_here].second}});
        }
        out.push_back(std::move(mc));
    }
    return out;
}

std::vector<std::vector<Rational>> pool_gamma(const std::vector<Cycle>& cycles,
                                              const std::vector<Rational>& x_points) {
    std::vector<std::vector<Rational>> gamma(cycles.size(),
                                             std::vector<Rational>(x_points.size()));
    for (size_t i = 0; i < cycles.size(); ++i) {
        const auto& c = cycles[i];
        const size_t n = c.xs.size();
        for (size_t k = 0; k < n; ++k) {
            const Rational& out_y = c.ys[k];
            const Rational& in_y = c.ys[(k + n - 1) % n];
            auto it = std::lower_bound(x_points.begin(), x_points.end(), c.xs[k]);
            gamma[i][static_cast<size_t>(it - x_points.begin())] = out_y - in_y;
        }
    }
    return gamma;
}

bool verify_pool(const Support& s, const CyclePool& pool) {
    const size_t n = pool.cycles.size();
    if (n < 2) return false;
    std::set<Rational> xs;
    for (const auto& c : pool.cycles) {
        if (!verify_cycle(s, c)) return false;
        xs.insert(c.xs.begin(), c.xs.end());
    }
    if (xs.size() != n) return false;
    std::vector<Rational> sorted_xs(xs.begin(), xs.end());
    if (sorted_xs != pool.x_points) return false;

    // freeness: each cycle owns a path used by no other cycle
    std::vector<std::vector<Path>> owned;
    for (const auto& c : pool.cycles) owned.push_back(c.sorted_paths());
    for (size_t i = 0; i < n; ++i) {
        bool has_private = false;
        for (const auto& p : owned[i]) {
            bool shared = false;
            for (size_t j = 0; j < n && !shared; ++j)
                if (j != i && std::binary_search(owned[j].begin(), owned[j].end(), p)) shared = true;
            if (!shared) { has_private = true; break; }
        }
        if (!has_private) return false;
    }

    auto gamma = pool_gamma(pool.cycles, pool.x_points);
    if (gamma != pool.gamma) return false;
    for (const auto& row : gamma) {
        Rational sum;
        for (const auto& v : row) sum += v;
        if (!sum.is_zero()) return false;
    }
    return true;
}

namespace {

/// Nonzero alpha solving sum_i alpha_i gamma[i][j] = 0 for every x but the
/// largest (that equation is implied by the row-sum identity). Returns
/// nullopt only if the reduced system has a trivial kernel, which a valid
/// pool never produces.
std::optional<std::vector<Rational>> solve_pool_alpha(const CyclePool& pool) {
    const size_t n = pool.cycles.size();
    if (n == 0) return std::nullopt;
    const size_t m = pool.x_points.size();
    Matrix sys(m > 0 ? m - 1 : 0, n); // drop the equation of the largest x
    for (size_t j = 0; j + 1 < m; ++j)
        for (size_t i = 0; i < n; ++i) sys.at(j, i) = pool.gamma[i][j];
    auto kernel = sys.kernel_basis();
    if (kernel.empty()) return std::nullopt;
    // normalize: clear denominators, gcd 1, first nonzero positive
    std::vector<Rational> alpha = kernel.front();
    mpz_class lcm = 1;
    for (const auto& a : alpha)
        if (!a.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.den().get_mpz_t());
    for (auto& a : alpha) a *= Rational(mpq_class(lcm));
    mpz_class g = 0;
    for (const auto& a : alpha) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.num().get_mpz_t());
    if (g > 1)
        for (auto& a : alpha) a /= Rational(mpq_class(g));
    for (const auto& a : alpha) {
        if (a.is_zero()) continue;
        if (a.sign() < 0)
            for (auto& b : alpha) b = -b;
        break;
    }
    return alpha;
}

std::map<Path, Rational> pool_delta(const CyclePool& pool, const std::vector<Rational>& alpha) {
    std::map<Path, Rational> delta;
    for (size_t i = 0; i < pool.cycles.size(); ++i) {
        const auto& c = pool.cycles[i];
        const size_t n = c.xs.size();
        for (size_t k = 0; k < n; ++k) {
            delta[{c.xs[k], c.ys[k]}] += alpha[i];
            delta[{c.xs[(k + 1) % n], c.ys[k]}] -= alpha[i];
        }
    }
    std::erase_if(delta, [](const auto& kv) { return kv.second.is_zero(); });
    return delta;
}

// extracts edge-disjoint simple cycles from an even-degree edge set
std::vector<Cycle> split_into_simple_cycles(const Support& universe, std::set<Path> edge_set) {
    std::vector<Cycle> found;
    while (!edge_set.empty()) {
        // walk from the smallest remaining edge, always taking the smallest
        // unused incident edge; record the vertex trail and cut a simple
        // cycle as soon as a vertex repeats
        std::vector<Path> trail_edges;
        std::vector<std::pair<bool, Rational>> trail_vertices; // (is_x, value)
        Path start = *edge_set.begin();
        trail_vertices.push_back({true, start.x});
        bool at_x = true;
        Rational here = start.x;

        auto next_edge = [&](bool from_x, const Rational& v) -> std::optional<Path> {
            std::optional<Path> best;
            for (const auto& e : edge_set) {
                if (from_x ? (e.x == v) : (e.y == v)) {
                    if (!best || e < *best) best = e;
                }
            }
            return best;
        };

        bool made_cycle = false;
        while (!made_cycle) {
            auto e = next_edge(at_x, here);
            if (!e) break; // dead end: stray edges, drop the trail
            edge_set.erase(*e);
            trail_edges.push_back(*e);
            at_x = !at_x;
            here = at_x ? e->x : e->y;
            for (size_t i = 0; i < trail_vertices.size(); ++i) {
                if (trail_vertices[i] == std::pair(at_x, here)) {
                    // vertices i..end + the new edge close a simple cycle;
                    // edges walked before the repeat point go back to the pool
                    for (size_t k = 0; k < i; ++k) edge_set.insert(trail_edges[k]);
                    std::vector<std::pair<bool, Rational>> cyc(trail_vertices.begin() + static_cast<long>(i),
                                                               trail_vertices.end());
                    if (cyc.size() >= 4) {
                        if (!cyc[0].first) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
                        Cycle c;
                        for (size_t k = 0; k < cyc.size(); k += 2) {
                            c.xs.push_back(cyc[k].second);
                            c.ys.push_back(cyc[k + 1].second);
                        }
                        if (verify_cycle(universe, c)) found.push_back(c.canonical());
                    }
                    made_cycle = true;
                    break;
                }
            }
            if (!made_cycle) trail_vertices.push_back({at_x, here});
        }
    }
    return found;
}

} // namespace

std::optional<CyclePool> find_free_pool(const Support& s, size_t candidate_budget) {
    std::vector<Cycle> basis = cycle_basis(s);
    if (basis.empty()) return std::nullopt;

    // candidate cycles: the basis plus elementary cycles recovered from
    // symmetric differences of pairs and triples of basis elements
    std::vector<Cycle> candidates = basis;
    auto add_candidate = [&](const Cycle& c) {
        for (const auto& have : candidates)
            if (have == c) return;
        candidates.push_back(c);
    };
    auto symdiff_cycles = [&](std::vector<size_t> idxs) {
        std::set<Path> edges;
        for (size_t i : idxs)
            for (const auto& p : basis[i].sorted_paths()) {
                auto it = edges.find(p);
                if (it == edges.end()) edges.insert(p);
                else edges.erase(it);
            }
        for (const auto& c : split_into_simple_cycles(s, std::move(edges))) add_candidate(c);
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) symdiff_cycles({i, j});
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            for (size_t k = j + 1; k < basis.size(); ++k) symdiff_cycles({i, j, k});

    std::sort(candidates.begin(), candidates.end(), [](const Cycle& a, const Cycle& b) {
        return std::pair(a.xs, a.ys) < std::pair(b.xs, b.ys);
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // deterministic subset scan by increasing size
    size_t examined = 0;
    const size_t max_n = std::min(candidates.size(), s.x_points().size());
    std::vector<size_t> pick;
    std::optional<CyclePool> result;

    auto try_pool = [&](const std::vector<size_t>& sel) -> bool {
        ++examined;
        std::set<Rational> xs;
        for (size_t i : sel) xs.insert(candidates[i].xs.begin(), candidates[i].xs.end());
        if (xs.size() != sel.size()) return false;
        CyclePool pool;
        for (size_t i : sel) pool.cycles.push_back(candidates[i]);
        pool.x_points.assign(xs.begin(), xs.end());
        pool.gamma = pool_gamma(pool.cycles, pool.x_points);
        if (!verify_pool(s, pool)) return false;
        auto alpha = solve_pool_alpha(pool);
        if (!alpha) return false;
        if (pool_delta(pool, *alpha).empty()) return false;
        result = std::move(pool);
        return true;
    };

    std::function<bool(size_t, size_t)> combine = [&](size_t start, size_t remaining) -> bool {
        if (examined >= candidate_budget) return false;
        if (remaining == 0) return try_pool(pick);
        for (size_t i = start; i + remaining <= candidates.size(); ++i) {
            pick.push_back(i);
            if (combine(i + 1, remaining - 1)) return true;
            pick.pop_back();
            if (examined >= candidate_budget) return false;
        }
        return false;
    };

    for (size_t n = 2; n <= max_n; ++n) {
        pick.clear();
        if (combine(0, n)) return result;
        if (examined >= candidate_budget) break;
    }
    return std::nullopt;
}

bool annihilates_families(const Support& s, const std::map<Path, Rational>& v) {
    for (const auto& [p, val] : v)
        if (!s.contains(p)) return false;
    for (const auto& x : s.x_points()) {
        Rational mass, moment;
        for (const auto& y : s.y_section(x)) {
            auto it = v.find({x, y});
            if (it == v.end()) continue;
            mass += it->second;
            moment += it->second * y;
        }
        if (!mass.is_zero() || !moment.is_zero()) return false;
    }
    for (const auto& y : s.y_points()) {
        Rational col;
        for (const auto& x : s.x_section(y)) {
            auto it = v.find({x, y});
            if (it != v.end()) col += it->second;
        }
        if (!col.is_zero()) return false;
    }
    return true;
}

ExtremalityResult extremality_kernel(const MartingaleCoupling& q) {
    auto validation = validate_coupling(q);
    if (!validation.ok) throw Error("invalid-coupling", "coupling fails validation");

    const Support& s = q.support();
    const auto& paths = s.paths();
    const auto& xs = s.x_points();
    const auto& ys = s.y_points();

    // rows: per-y column sums, per-x row sums, per-x y-moments
    Matrix m(ys.size() + 2 * xs.size(), paths.size());
    auto xrow = [&](const Rational& x) {
        return static_cast<size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
    };
    auto yrow = [&](const Rational& y) {
        return static_cast<size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
    };
    for (size_t k = 0; k < paths.size(); ++k) {
        m.at(yrow(paths[k].y), k) = Rational(1);
        m.at(ys.size() + xrow(paths[k].x), k) = Rational(1);
        m.at(ys.size() + xs.size() + xrow(paths[k].x), k) = paths[k].y;
    }

    ExtremalityResult r;
    auto kernel = m.kernel_basis();
    r.extremal = kernel.empty();
    for (const auto& v : kernel) {
        PerturbationVector pv;
        for (size_t k = 0; k < paths.size(); ++k)
            if (!v[k].is_zero()) pv.emplace_back(paths[k], v[k]);
        r.kernel_basis.push_back(std::move(pv));
    }
    return r;
}

PerturbationPair build_pool_perturbation(const MartingaleCoupling& q, const CyclePool& pool,
                                         std::optional<Rational> scale) {
    if (!verify_pool(q.support(), pool))
        throw Error("degenerate-pool", "pool does not satisfy the free-pool conditions on supp(Q)");
    auto alpha = solve_pool_alpha(pool);
    if (!alpha) throw Error("degenerate-pool", "balance system admits only alpha = 0");
    auto delta = pool_delta(pool, *alpha);
    if (delta.empty()) throw Error("degenerate-pool", "pool perturbation cancels to zero");

    Rational factor;
    if (scale) {
        if (scale->sign() <= 0) throw Error("degenerate-pool", "scale must be > 0");
        factor = *scale;
    } else {
        bool first = true;
        for (const auto& [p, d] : delta) {
            Rational ratio = q.weight_at(p) / d.abs();
            if (first || ratio < factor) factor = ratio;
            first = false;
        }
        factor /= Rational(2);
    }

    auto shifted = [&](int sign) {
        std::vector<WeightedPath> ws;
        for (const auto& w : q.weights()) {
            Rational d;
            if (auto it = delta.find(w.path); it != delta.end()) d = it->second;
            Rational value = w.weight + Rational(sign) * factor * d;
            if (value.sign() <= 0)
                throw Error("degenerate-pool", "scale too large: weight at (" + w.path.x.str() +
                                                   ", " + w.path.y.str() + ") leaves (0, inf)");
            ws.push_back({w.path, value});
        }
        return MartingaleCoupling(std::move(ws), q.mu(), q.nu());
    };

    PerturbationVector dv;
    for (const auto& [p, d] : delta) dv.emplace_back(p, factor * d);

    PerturbationPair pair{shifted(+1), shifted(-1), std::move(dv)};
    if (!validate_coupling(pair.q1).ok || !validate_coupling(pair.q2).ok)
        throw Error("internal", "pool perturbation broke the coupling constraints");
    return pair;
}

} // namespace martex
