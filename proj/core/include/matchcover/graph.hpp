#ifndef MATCHCOVER_GRAPH_HPP
#define MATCHCOVER_GRAPH_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace matchcover {

/// Undirected edge, stored normalized with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Normalizes endpoint order. Throws PreconditionError on a loop (u == v).
Edge make_edge(int u, int v);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// No loops, no multi-edges. The edge list is kept sorted and adjacency
/// lists are derived from it at construction, so values compare by
/// (vertex count, edge set).
class Graph {
public:
    Graph() = default;

    /// Throws PreconditionError on loops or endpoints outside 0..n-1.
    /// Duplicate edges collapse to one.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// New graph with one extra edge; this graph is unchanged.
    Graph with_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// --- text formats ------------------------------------------------------

/// Parses the edge-list format: lines "u v", an optional first line
/// "n <count>", '#' comments, blank lines ignored. Duplicate edge lines
/// collapse. Without a header, n = 1 + max vertex id (0 for no edges).
/// Throws ParseError (with line number) on loops, ids >= declared n, or
/// malformed tokens.
Graph parse_edge_list(std::string_view text);

/// Emits "n <count>" followed by one sorted "u v" line per edge.
/// parse_edge_list(serialize_edge_list(g)) == g.
std::string serialize_edge_list(const Graph& g);

/// Parses one graph6 line (6-bit chunks offset by 63, upper-triangle
/// column order). Throws ParseError on characters outside 63..126, a
/// truncated bit stream, trailing data, or nonzero padding bits.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding (shortest size prefix, zero padding).
std::string serialize_graph6(const Graph& g);

/// Edge subset drawn with an attribute color.
struct EdgeHighlight {
    std::vector<Edge> edges;
    std::string color;
};

/// DOT export; vertex ids are the node labels, highlighted edges get a
/// color attribute.
std::string to_dot(const Graph& g, const std::vector<EdgeHighlight>& highlights = {});

// --- predicates ---------------------------------------------------------

/// True iff edges is a subset of E(g) and pairwise vertex-disjoint.
/// Non-host edges make it false, they do not raise.
bool is_matching(const Graph& g, std::span<const Edge> edges);

/// n = 0 counts as connected.
bool is_connected(const Graph& g);

/// Vertex sets of connected components, each sorted, ordered by smallest
/// vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_bipartite(const Graph& g);

/// Exact check by dynamic programming over vertex subsets. Throws
/// BoundError when vertex_count exceeds max_vertices, never silently
/// guesses.
bool has_hamiltonian_path(const Graph& g, int max_vertices = 20);

} // namespace matchcover

#endif
