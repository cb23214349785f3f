#include "matchcover/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "matchcover/errors.hpp"

namespace matchcover {

Matching Matching::of(const Graph& host, std::vector<Edge> edges) {
    for (Edge& e : edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (!is_matching(host, edges))
        throw PreconditionError("edge set is not a matching of the host graph");
    Matching m;
    m.edges_ = std::move(edges);
    return m;
}

bool Matching::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Matching::saturates(int v) const {
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) return true;
    return false;
}

// --- Edmonds blossom --------------------------------------------------------

namespace {

// Augmenting-path search with blossom contraction. Vertices are scanned in
// increasing order and neighbor lists are sorted, so the result is
// deterministic.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : g_(g),
          n_(g.vertex_count()),
          match_(n_, -1),
          parent_(n_, -1),
          base_(n_),
          used_(n_, false),
          in_blossom_(n_, false) {}

    std::vector<int> solve() {
        // greedy seed along sorted edges
        for (const Edge& e : g_.edges())
            if (match_[e.u] == -1 && match_[e.v] == -1) {
                match_[e.u] = e.v;
                match_[e.v] = e.u;
            }
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) {
                int leaf = find_path(v);
                while (leaf != -1) {
                    int pv = parent_[leaf];
                    int next = match_[pv];
                    match_[leaf] = pv;
                    match_[pv] = leaf;
                    leaf = next;
                }
            }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        int cur = a;
        while (true) {
            cur = base_[cur];
            seen[cur] = true;
            if (match_[cur] == -1) break;
            cur = parent_[match_[cur]];
        }
        cur = b;
        while (!seen[base_[cur]]) cur = parent_[match_[base_[cur]]];
        return base_[cur];
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    // BFS from root over even vertices; returns an unmatched leaf of an
    // augmenting path, or -1.
    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

} // namespace

Matching max_matching(const Graph& g) {
    std::vector<int> mate = BlossomSolver(g).solve();
    std::vector<Edge> edges;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) edges.push_back(Edge{v, mate[v]});
    return Matching::of(g, std::move(edges));
}

// --- lexicographic weights and exact weighted search -------------------------

namespace {

std::vector<Edge> normalized_sorted(std::span<const Edge> es) {
    std::vector<Edge> out(es.begin(), es.end());
    for (Edge& e : out)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<long long> lexicographic_edge_weights(const Graph& g,
                                                  std::span<const Edge> a,
                                                  std::span<const Edge> b) {
    const long long k = 2LL * g.edge_count() + 3;
    std::vector<Edge> an = normalized_sorted(a);
    std::vector<Edge> bn = normalized_sorted(b);
    std::vector<long long> w;
    w.reserve(g.edges().size());
    auto in = [](const std::vector<Edge>& set, const Edge& e) {
        return std::binary_search(set.begin(), set.end(), e);
    };
    for (const Edge& e : g.edges())
        w.push_back(k * k + k * (in(an, e) ? 1 : 0) + (in(bn, e) ? 1 : 0));
    return w;
}

namespace {

struct LexSearch {
    const std::vector<Edge>& edges;
    const std::vector<long long>& w;
    long long k;
    int nu;
    std::vector<int> suffix_total, suffix_a, suffix_b;
    std::vector<bool> used;
    long long best = -1;
    std::vector<Edge> best_edges;
    std::vector<Edge> cur;

    void run(size_t i, long long cur_w) {
        if (i == edges.size()) {
            if (cur_w > best) {
                best = cur_w;
                best_edges = cur;
            }
            return;
        }
        long long room = nu - static_cast<long long>(cur.size());
        long long ub = cur_w + k * k * std::min<long long>(room, suffix_total[i]) +
                       k * std::min<long long>(room, suffix_a[i]) +
                       std::min<long long>(room, suffix_b[i]);
        if (ub <= best) return;
        const Edge& e = edges[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = true;
            cur.push_back(e);
            run(i + 1, cur_w + w[i]);
            cur.pop_back();
            used[e.u] = used[e.v] = false;
        }
        run(i + 1, cur_w);
    }
};

} // namespace

Matching max_matching_lex(const Graph& g, std::span<const Edge> a, std::span<const Edge> b) {
    std::vector<Edge> an = normalized_sorted(a);
    std::vector<Edge> bn = normalized_sorted(b);
    for (const Edge& e : an)
        if (!g.has_edge(e.u, e.v))
            throw PreconditionError("a is not a subset of E(g)");
    for (const Edge& e : bn)
        if (!std::binary_search(an.begin(), an.end(), e))
            throw PreconditionError("b is not a subset of a");

    const auto& edges = g.edges();
    auto w = lexicographic_edge_weights(g, an, bn);
    const long long k = 2LL * g.edge_count() + 3;
    int m = static_cast<int>(edges.size());

    LexSearch s{edges, w, k, max_matching(g).size(), {}, {}, {}, {}, -1, {}, {}};
    s.suffix_total.assign(m + 1, 0);
    s.suffix_a.assign(m + 1, 0);
    s.suffix_b.assign(m + 1, 0);
    for (int i = m - 1; i >= 0; --i) {
        long long tier = w[i] - k * k;
        s.suffix_total[i] = s.suffix_total[i + 1] + 1;
        s.suffix_a[i] = s.suffix_a[i + 1] + (tier >= k ? 1 : 0);
        s.suffix_b[i] = s.suffix_b[i + 1] + (tier % k != 0 ? 1 : 0);
    }
    s.used.assign(g.vertex_count(), false);
    s.run(0, 0);
    return Matching::of(g, std::move(s.best_edges));
}

// --- exhaustive oracle --------------------------------------------------------

namespace {

void brute_rec(const std::vector<Edge>& edges, size_t i, std::vector<bool>& used,
               std::vector<Edge>& cur, std::vector<Edge>& best) {
    if (i == edges.size()) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    const Edge& e = edges[i];
    if (!used[e.u] && !used[e.v]) {
        used[e.u] = used[e.v] = true;
        cur.push_back(e);
        brute_rec(edges, i + 1, used, cur, best);
        cur.pop_back();
        used[e.u] = used[e.v] = false;
    }
    brute_rec(edges, i + 1, used, cur, best);
}

} // namespace

Matching brute_force_matching(const Graph& g, int max_edges) {
    if (g.edge_count() > max_edges)
        throw BoundError("brute_force_matching: " + std::to_string(g.edge_count()) +
                         " edges exceed the bound " + std::to_string(max_edges));
    std::vector<bool> used(g.vertex_count(), false);
    std::vector<Edge> cur, best;
    brute_rec(g.edges(), 0, used, cur, best);
    return Matching::of(g, std::move(best));
}

} // namespace matchcover
