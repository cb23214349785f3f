#ifndef MATCHCOVER_MATCHING_HPP
#define MATCHCOVER_MATCHING_HPP

#include <span>
#include <vector>

#include "matchcover/graph.hpp"

namespace matchcover {

/// Set of pairwise non-adjacent edges of a host graph. Validated against
/// the host at construction; edges are kept sorted.
class Matching {
public:
    Matching() = default;

    /// Throws PreconditionError unless edges form a matching of host.
    static Matching of(const Graph& host, std::vector<Edge> edges);

    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool contains(const Edge& e) const;
    bool saturates(int v) const;
    bool empty() const { return edges_.empty(); }

    auto operator<=>(const Matching&) const = default;

private:
    std::vector<Edge> edges_;
};

/// Maximum-cardinality matching (Edmonds blossom, O(V^3)); nu(g) is its
/// size. Deterministic: fixed vertex and neighbor scan order.
Matching max_matching(const Graph& g);

/// Among maximum-cardinality matchings, maximizes |M ∩ a|, then |M ∩ b|.
/// Requires b ⊆ a ⊆ E(g) (PreconditionError otherwise). Exact search with
/// lexicographic integer weights; intended for desk-scale graphs.
Matching max_matching_lex(const Graph& g, std::span<const Edge> a, std::span<const Edge> b);

/// Exhaustive subset-search oracle. Enforces edge_count <= max_edges
/// (BoundError). Independent of the blossom implementation.
Matching brute_force_matching(const Graph& g, int max_edges = 24);

/// Per-edge weights w(e) = K^2 + K*[e in a] + [e in b] with K = 2*|E|+3,
/// indexed like g.edges(). K makes the three tiers strictly lexicographic:
/// no sum of lower-tier weights can reach one unit of a higher tier.
std::vector<long long> lexicographic_edge_weights(const Graph& g,
                                                  std::span<const Edge> a,
                                                  std::span<const Edge> b);

} // namespace matchcover

#endif
