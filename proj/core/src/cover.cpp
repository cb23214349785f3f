#include "matchcover/cover.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <set>

#include <json.hpp>

#include "matchcover/errors.hpp"

namespace matchcover {

DisjointPair DisjointPair::of(const Graph& host, Matching a, Matching b) {
    if (!is_matching(host, a.edges()) || !is_matching(host, b.edges()))
        throw PreconditionError("DisjointPair: not matchings of the host");
    for (const Edge& e : b.edges())
        if (a.contains(e))
            throw PreconditionError("DisjointPair: matchings share an edge");
    bool swap_needed = a.size() < b.size() ||
                       (a.size() == b.size() && b.edges() < a.edges());
    DisjointPair p;
    p.h = swap_needed ? std::move(b) : std::move(a);
    p.h_prime = swap_needed ? std::move(a) : std::move(b);
    return p;
}

int default_solver_edge_limit() {
    static int limit = [] {
        if (const char* s = std::getenv("MATCHCOVER_MAX_EDGES")) {
            int x = std::atoi(s);
            if (x > 0) return x;
        }
        return 40;
    }();
    return limit;
}

namespace {

// (edges, h) packed lexicographically; both stay well under 2^20 at desk
// scale.
using Val = long long;
constexpr int kValShift = 20;
constexpr Val kNegInf = LLONG_MIN / 4;

Val pack(int edges, int h) { return (Val(edges) << kValShift) | h; }
int unpack_edges(Val v) { return static_cast<int>(v >> kValShift); }
int unpack_h(Val v) { return static_cast<int>(v & ((Val(1) << kValShift) - 1)); }

struct SubGraph {
    Graph graph;             // local ids 0..k-1
    std::vector<int> to_orig;
};

SubGraph extract(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> local(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0) {
            int a = local[e.u], b = local[e.v];
            edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
        }
    return SubGraph{Graph(static_cast<int>(verts.size()), std::move(edges)), verts};
}

// Per-component result in local vertex ids; assignment indexed like
// graph.edges(): 0 unused, 1 in H, 2 in H'.
struct CompResult {
    int lambda = 0;
    int mu = 0;
    std::vector<int8_t> assign;
};

// --- exact DP on tree components -------------------------------------------
//
// dp[v][s]: best packed (edges, h) over the subtree below v when the edge
// to v's parent is unused (s=0), in H (s=1) or in H' (s=2). The parent
// edge's own contribution is added at the parent; s only occupies one of
// v's two color slots.
struct TreeSolver {
    const Graph& t;
    int n;
    std::vector<int> parent, order;
    std::vector<std::vector<int>> children;
    std::vector<std::array<Val, 3>> dp;

    struct Cell {
        Val v = kNegInf;
        int8_t prev = -1;
        int8_t choice = -1;
    };
    // scan[v][j][s]: best over the first j children of v with child slot
    // usage s (bit0 = H taken, bit1 = H' taken)
    std::vector<std::vector<std::array<Cell, 4>>> scan;
    std::vector<int8_t> assign;
    std::vector<std::vector<int>> child_edge_index;

    explicit TreeSolver(const Graph& tree) : t(tree), n(tree.vertex_count()) {}

    static Val unit(int s) { return s == 1 ? pack(1, 1) : s == 2 ? pack(1, 0) : 0; }

    CompResult solve() {
        parent.assign(n, -1);
        children.assign(n, {});
        order.clear();
        order.reserve(n);
        std::vector<bool> seen(n, false);
        seen[0] = true;
        order.push_back(0);
        for (size_t qi = 0; qi < order.size(); ++qi) {
            int v = order[qi];
            for (int u : t.neighbors(v))
                if (!seen[u]) {
                    seen[u] = true;
                    parent[u] = v;
                    children[v].push_back(u);
                    order.push_back(u);
                }
        }

        // edge index lookup for witness reconstruction
        child_edge_index.assign(n, {});
        for (int v = 0; v < n; ++v) {
            child_edge_index[v].assign(children[v].size(), -1);
            for (size_t j = 0; j < children[v].size(); ++j) {
                Edge e = children[v][j] < v ? Edge{children[v][j], v} : Edge{v, children[v][j]};
                auto it = std::lower_bound(t.edges().begin(), t.edges().end(), e);
                child_edge_index[v][j] = static_cast<int>(it - t.edges().begin());
            }
        }

        dp.assign(n, {kNegInf, kNegInf, kNegInf});
        scan.assign(n, {});
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            size_t k = children[v].size();
            scan[v].assign(k + 1, {});
            scan[v][0][0] = Cell{0, -1, -1};
            for (size_t j = 0; j < k; ++j) {
                int c = children[v][j];
                for (int s = 0; s < 4; ++s) {
                    if (scan[v][j][s].v == kNegInf) continue;
                    for (int choice = 0; choice < 3; ++choice) {
                        if (choice == 1 && (s & 1)) continue;
                        if (choice == 2 && (s & 2)) continue;
                        if (dp[c][choice] == kNegInf) continue;
                        int ns = s | (choice == 1 ? 1 : choice == 2 ? 2 : 0);
                        Val cand = scan[v][j][s].v + dp[c][choice] + unit(choice);
                        if (cand > scan[v][j + 1][ns].v)
                            scan[v][j + 1][ns] =
                                Cell{cand, static_cast<int8_t>(s), static_cast<int8_t>(choice)};
                    }
                }
            }
            for (int s = 0; s < 4; ++s) {
                Val got = scan[v][k][s].v;
                if (got == kNegInf) continue;
                if (got > dp[v][0]) dp[v][0] = got;
                if (!(s & 1) && got > dp[v][1]) dp[v][1] = got;
                if (!(s & 2) && got > dp[v][2]) dp[v][2] = got;
            }
        }

        assign.assign(t.edge_count(), 0);
        reconstruct(0, 0);
        Val best = dp[0][0];
        return CompResult{unpack_edges(best), unpack_h(best), assign};
    }

    void reconstruct(int v, int parent_state) {
        size_t k = children[v].size();
        Val target = dp[v][parent_state];
        int s = -1;
        for (int cand = 0; cand < 4; ++cand) {
            if (parent_state == 1 && (cand & 1)) continue;
            if (parent_state == 2 && (cand & 2)) continue;
            if (scan[v][k][cand].v == target) {
                s = cand;
                break;
            }
        }
        for (size_t j = k; j-- > 0;) {
            const Cell& cell = scan[v][j + 1][s];
            int choice = cell.choice;
            assign[child_edge_index[v][j]] = static_cast<int8_t>(choice);
            reconstruct(children[v][j], choice);
            s = cell.prev;
        }
    }
};

// --- branch and bound on general components ---------------------------------
struct PairBnB {
    const std::vector<Edge>& edges;
    int n, m;
    std::vector<int8_t> used_h, used_hp;
    std::vector<int> remdeg;
    int cap_total_sum = 0, cap_h_sum = 0;
    int total = 0, hcount = 0;
    Val best = -1;
    std::vector<int8_t> assign, best_assign;

    PairBnB(const Graph& g)
        : edges(g.edges()), n(g.vertex_count()), m(g.edge_count()) {
        used_h.assign(n, 0);
        used_hp.assign(n, 0);
        remdeg.assign(n, 0);
        for (const Edge& e : edges) {
            ++remdeg[e.u];
            ++remdeg[e.v];
        }
        for (int v = 0; v < n; ++v) {
            cap_total_sum += cap_total(v);
            cap_h_sum += cap_h(v);
        }
        assign.assign(m, 0);
    }

    int cap_total(int v) const { return std::min(2 - used_h[v] - used_hp[v], remdeg[v]); }
    int cap_h(int v) const { return std::min(1 - used_h[v], remdeg[v]); }

    void adjust(int v, int d_remdeg, int d_h, int d_hp) {
        cap_total_sum -= cap_total(v);
        cap_h_sum -= cap_h(v);
        remdeg[v] += d_remdeg;
        used_h[v] += static_cast<int8_t>(d_h);
        used_hp[v] += static_cast<int8_t>(d_hp);
        cap_total_sum += cap_total(v);
        cap_h_sum += cap_h(v);
    }

    void seed(const std::vector<int8_t>& greedy_assign, int g_total, int g_h) {
        best = pack(g_total, g_h);
        best_assign = greedy_assign;
    }

    void dfs(int i) {
        if (i == m) {
            Val cand = pack(total, hcount);
            if (cand > best) {
                best = cand;
                best_assign = assign;
            }
            return;
        }
        int ub_t = total + std::min(m - i, cap_total_sum / 2);
        int ub_h = hcount + std::min(m - i, cap_h_sum / 2);
        if (pack(ub_t, ub_h) <= best) return;
        const Edge& e = edges[i];
        if (!used_h[e.u] && !used_h[e.v]) {
            adjust(e.u, -1, 1, 0);
            adjust(e.v, -1, 1, 0);
            assign[i] = 1;
            ++total;
            ++hcount;
            dfs(i + 1);
            --hcount;
            --total;
            adjust(e.u, 1, -1, 0);
            adjust(e.v, 1, -1, 0);
        }
        if (!used_hp[e.u] && !used_hp[e.v]) {
            adjust(e.u, -1, 0, 1);
            adjust(e.v, -1, 0, 1);
            assign[i] = 2;
            ++total;
            dfs(i + 1);
            --total;
            adjust(e.u, 1, 0, -1);
            adjust(e.v, 1, 0, -1);
        }
        assign[i] = 0;
        adjust(e.u, -1, 0, 0);
        adjust(e.v, -1, 0, 0);
        dfs(i + 1);
        adjust(e.u, 1, 0, 0);
        adjust(e.v, 1, 0, 0);
    }
};

std::vector<int8_t> greedy_assignment(const Graph& g, int& out_total, int& out_h) {
    Matching h = max_matching(g);
    std::vector<Edge> rest;
    for (const Edge& e : g.edges())
        if (!h.contains(e)) rest.push_back(e);
    Graph remainder(g.vertex_count(), std::move(rest));
    Matching hp = max_matching(remainder);
    std::vector<int8_t> assign(g.edge_count(), 0);
    const auto& es = g.edges();
    for (int i = 0; i < g.edge_count(); ++i) {
        if (h.contains(es[i]))
            assign[i] = 1;
        else if (hp.contains(es[i]))
            assign[i] = 2;
    }
    out_total = h.size() + hp.size();
    out_h = h.size();
    return assign;
}

CompResult solve_component(const Graph& local) {
    bool tree = local.edge_count() == local.vertex_count() - 1;
    if (tree) return TreeSolver(local).solve();
    PairBnB bnb(local);
    int g_total = 0, g_h = 0;
    auto greedy = greedy_assignment(local, g_total, g_h);
    bnb.seed(greedy, g_total, g_h);
    bnb.dfs(0);
    return CompResult{unpack_edges(bnb.best), unpack_h(bnb.best), bnb.best_assign};
}

} // namespace

ParamsReport lambda_mu(const Graph& g, int max_edges) {
    int limit = max_edges < 0 ? default_solver_edge_limit() : max_edges;
    if (g.edge_count() > limit)
        throw BoundError("lambda_mu: " + std::to_string(g.edge_count()) +
                         " edges exceed the solver bound " + std::to_string(limit));

    Matching nu_witness = max_matching(g);
    std::vector<Edge> h_edges, hp_edges;
    int lambda = 0, mu = 0;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2) continue;
        SubGraph sub = extract(g, comp);
        if (sub.graph.edge_count() == 0) continue;
        CompResult r = solve_component(sub.graph);
        lambda += r.lambda;
        mu += r.mu;
        const auto& es = sub.graph.edges();
        for (size_t i = 0; i < es.size(); ++i) {
            if (r.assign[i] == 0) continue;
            Edge orig = make_edge(sub.to_orig[es[i].u], sub.to_orig[es[i].v]);
            (r.assign[i] == 1 ? h_edges : hp_edges).push_back(orig);
        }
    }

    ParamsReport rep;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.nu = nu_witness.size();
    rep.lambda = lambda;
    rep.mu = mu;
    rep.mu_prime = lambda - mu;
    rep.max_matching_witness = std::move(nu_witness);
    rep.lambda_witness = DisjointPair::of(g, Matching::of(g, std::move(h_edges)),
                                          Matching::of(g, std::move(hp_edges)));
    if (rep.nu >= 1) rep.ratio = ratio(rep);
    return rep;
}

// --- nu_k --------------------------------------------------------------------

namespace {

struct NuKBnB {
    const std::vector<Edge>& edges;
    int n, m, k;
    int global_cap;
    std::vector<uint8_t> color_mask; // per vertex, bit c-1 = color c used
    std::vector<int> used_count;     // per vertex
    std::vector<int> remdeg;
    int cap_sum = 0;
    int size = 0;
    int max_color_used = 0;
    int best = -1;
    std::vector<int8_t> assign, best_assign;

    NuKBnB(const Graph& g, int colors, int total_cap)
        : edges(g.edges()), n(g.vertex_count()), m(g.edge_count()), k(colors),
          global_cap(total_cap) {
        color_mask.assign(n, 0);
        used_count.assign(n, 0);
        remdeg.assign(n, 0);
        for (const Edge& e : edges) {
            ++remdeg[e.u];
            ++remdeg[e.v];
        }
        for (int v = 0; v < n; ++v) cap_sum += slot_cap(v);
        assign.assign(m, 0);
    }

    int slot_cap(int v) const { return std::min(k - used_count[v], remdeg[v]); }

    void adjust(int v, int d_remdeg, int d_used) {
        cap_sum -= slot_cap(v);
        remdeg[v] += d_remdeg;
        used_count[v] += d_used;
        cap_sum += slot_cap(v);
    }

    void dfs(int i) {
        if (best >= global_cap) return;
        if (i == m) {
            if (size > best) {
                best = size;
                best_assign = assign;
            }
            return;
        }
        int ub = size + std::min({m - i, cap_sum / 2, global_cap - size});
        if (ub <= best) return;
        const Edge& e = edges[i];
        int allowed = std::min(k, max_color_used + 1);
        for (int c = 1; c <= allowed; ++c) {
            uint8_t bit = static_cast<uint8_t>(1u << (c - 1));
            if ((color_mask[e.u] | color_mask[e.v]) & bit) continue;
            adjust(e.u, -1, 1);
            adjust(e.v, -1, 1);
            color_mask[e.u] |= bit;
            color_mask[e.v] |= bit;
            assign[i] = static_cast<int8_t>(c);
            ++size;
            int prev_max = max_color_used;
            max_color_used = std::max(max_color_used, c);
            dfs(i + 1);
            max_color_used = prev_max;
            --size;
            color_mask[e.u] &= static_cast<uint8_t>(~bit);
            color_mask[e.v] &= static_cast<uint8_t>(~bit);
            adjust(e.u, 1, -1);
            adjust(e.v, 1, -1);
        }
        assign[i] = 0;
        adjust(e.u, -1, 0);
        adjust(e.v, -1, 0);
        dfs(i + 1);
        adjust(e.u, 1, 0);
        adjust(e.v, 1, 0);
    }
};

} // namespace

std::pair<int, std::vector<Matching>> nu_k(const Graph& g, int k, int max_edges) {
    if (k < 1 || k > 4)
        throw PreconditionError("nu_k: k must be in 1..4, got " + std::to_string(k));
    int limit = max_edges < 0 ? default_solver_edge_limit() : max_edges;
    if (g.edge_count() > limit)
        throw BoundError("nu_k: " + std::to_string(g.edge_count()) +
                         " edges exceed the solver bound " + std::to_string(limit));
    if (k == 1) {
        Matching m = max_matching(g);
        int sz = m.size();
        return {sz, {std::move(m)}};
    }

    int nu_val = max_matching(g).size();
    int cap = std::min(g.edge_count(), k * nu_val);
    NuKBnB bnb(g, k, cap);

    // greedy seed: k rounds of maximum matching on the shrinking remainder
    {
        std::vector<Edge> remaining = g.edges();
        std::vector<int8_t> assign(g.edge_count(), 0);
        int size = 0;
        for (int c = 1; c <= k; ++c) {
            Graph part(g.vertex_count(), remaining);
            Matching mm = max_matching(part);
            std::vector<Edge> next;
            for (const Edge& e : remaining)
                if (!mm.contains(e)) next.push_back(e);
            for (const Edge& e : mm.edges()) {
                auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
                assign[it - g.edges().begin()] = static_cast<int8_t>(c);
            }
            size += mm.size();
            remaining = std::move(next);
        }
        bnb.best = size;
        bnb.best_assign = std::move(assign);
    }

    bnb.dfs(0);

    std::vector<std::vector<Edge>> classes(k);
    for (int i = 0; i < g.edge_count(); ++i)
        if (bnb.best_assign[i] > 0) classes[bnb.best_assign[i] - 1].push_back(g.edges()[i]);
    std::vector<Matching> cover;
    cover.reserve(k);
    for (auto& cls : classes) cover.push_back(Matching::of(g, std::move(cls)));
    return {bnb.best, std::move(cover)};
}

ParamsReport compute_params(const Graph& g, const std::vector<int>& requested_nu_k,
                            int max_edges) {
    ParamsReport rep = lambda_mu(g, max_edges);
    std::vector<int> ks = requested_nu_k;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int k : ks) rep.nu_k[k] = nu_k(g, k, max_edges).first;
    return rep;
}

// --- enumeration oracle --------------------------------------------------------

namespace {

struct PairEnum {
    const std::vector<Edge>& edges;
    int n, m;
    int lambda, mu;
    bool mu_only;
    std::vector<int8_t> used_h, used_hp;
    std::vector<int> remdeg;
    int cap_total_sum = 0, cap_h_sum = 0;
    int total = 0, hcount = 0;
    std::vector<int8_t> assign;
    std::set<std::pair<std::vector<Edge>, std::vector<Edge>>> out;

    PairEnum(const Graph& g, int lam, int mu_target, bool only)
        : edges(g.edges()), n(g.vertex_count()), m(g.edge_count()),
          lambda(lam), mu(mu_target), mu_only(only) {
        used_h.assign(n, 0);
        used_hp.assign(n, 0);
        remdeg.assign(n, 0);
        for (const Edge& e : edges) {
            ++remdeg[e.u];
            ++remdeg[e.v];
        }
        for (int v = 0; v < n; ++v) {
            cap_total_sum += cap_total(v);
            cap_h_sum += cap_h(v);
        }
        assign.assign(m, 0);
    }

    int cap_total(int v) const { return std::min(2 - used_h[v] - used_hp[v], remdeg[v]); }
    int cap_h(int v) const { return std::min(1 - used_h[v], remdeg[v]); }

    void adjust(int v, int d_remdeg, int d_h, int d_hp) {
        cap_total_sum -= cap_total(v);
        cap_h_sum -= cap_h(v);
        remdeg[v] += d_remdeg;
        used_h[v] += static_cast<int8_t>(d_h);
        used_hp[v] += static_cast<int8_t>(d_hp);
        cap_total_sum += cap_total(v);
        cap_h_sum += cap_h(v);
    }

    void record() {
        if (total != lambda) return;
        std::vector<Edge> h, hp;
        for (int i = 0; i < m; ++i) {
            if (assign[i] == 1) h.push_back(edges[i]);
            if (assign[i] == 2) hp.push_back(edges[i]);
        }
        if (h.size() < hp.size() || (h.size() == hp.size() && hp < h)) std::swap(h, hp);
        if (mu_only && static_cast<int>(h.size()) != mu) return;
        out.emplace(std::move(h), std::move(hp));
    }

    void dfs(int i) {
        if (i == m) {
            record();
            return;
        }
        int ub_t = total + std::min(m - i, cap_total_sum / 2);
        if (ub_t < lambda) return;
        if (mu_only) {
            // sound because the mirror orientation of any pruned pair is
            // explored separately and normalizes to the same pair
            int ub_h = hcount + std::min(m - i, cap_h_sum / 2);
            if (ub_h < mu) return;
        }
        const Edge& e = edges[i];
        if (!used_h[e.u] && !used_h[e.v]) {
            adjust(e.u, -1, 1, 0);
            adjust(e.v, -1, 1, 0);
            assign[i] = 1;
            ++total;
            ++hcount;
            dfs(i + 1);
            --hcount;
            --total;
            adjust(e.u, 1, -1, 0);
            adjust(e.v, 1, -1, 0);
        }
        if (!used_hp[e.u] && !used_hp[e.v]) {
            adjust(e.u, -1, 0, 1);
            adjust(e.v, -1, 0, 1);
            assign[i] = 2;
            ++total;
            dfs(i + 1);
            --total;
            adjust(e.u, 1, 0, -1);
            adjust(e.v, 1, 0, -1);
        }
        assign[i] = 0;
        adjust(e.u, -1, 0, 0);
        adjust(e.v, -1, 0, 0);
        dfs(i + 1);
        adjust(e.u, 1, 0, 0);
        adjust(e.v, 1, 0, 0);
    }
};

} // namespace

std::vector<DisjointPair> enumerate_lambda_pairs(const Graph& g, bool mu_only, int max_edges) {
    if (g.edge_count() > max_edges)
        throw BoundError("enumerate_lambda_pairs: " + std::to_string(g.edge_count()) +
                         " edges exceed the enumeration bound " + std::to_string(max_edges));
    ParamsReport rep = lambda_mu(g, std::max(max_edges, g.edge_count()));
    PairEnum walker(g, rep.lambda, rep.mu, mu_only);
    walker.dfs(0);
    std::vector<DisjointPair> result;
    result.reserve(walker.out.size());
    for (const auto& [h, hp] : walker.out)
        result.push_back(DisjointPair::of(g, Matching::of(g, h), Matching::of(g, hp)));
    return result;
}

std::pair<int, DisjointPair> greedy_two_cover(const Graph& g) {
    Matching h = max_matching(g);
    std::vector<Edge> rest;
    for (const Edge& e : g.edges())
        if (!h.contains(e)) rest.push_back(e);
    Graph remainder(g.vertex_count(), std::move(rest));
    Matching hp_local = max_matching(remainder);
    Matching hp = Matching::of(g, hp_local.edges());
    DisjointPair pair = DisjointPair::of(g, std::move(h), std::move(hp));
    return {pair.total(), std::move(pair)};
}

std::pair<long long, long long> ratio(const ParamsReport& r) {
    if (r.nu < 1)
        throw PreconditionError("ratio undefined: graph has no edges");
    long long g = std::gcd(static_cast<long long>(r.mu), static_cast<long long>(r.nu));
    if (g == 0) g = 1;
    return {r.mu / g, r.nu / g};
}

std::string to_json(const ParamsReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["nu"] = r.nu;
    j["lambda"] = r.lambda;
    j["mu"] = r.mu;
    j["mu_prime"] = r.mu_prime;
    if (r.ratio)
        j["ratio"] = {r.ratio->first, r.ratio->second};
    else
        j["ratio"] = nullptr;
    nlohmann::ordered_json nk = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.nu_k) nk[std::to_string(k)] = v;
    j["nu_k"] = nk;
    auto edges_json = [](const Matching& m) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Edge& e : m.edges()) arr.push_back({e.u, e.v});
        return arr;
    };
    j["witnesses"] = {{"max_matching", edges_json(r.max_matching_witness)},
                      {"H", edges_json(r.lambda_witness.h)},
                      {"H_prime", edges_json(r.lambda_witness.h_prime)}};
    return j.dump();
}

} // namespace matchcover
