#include "matchcover/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "matchcover/errors.hpp"

namespace matchcover {

Edge make_edge(int u, int v) {
    if (u == v)
        throw PreconditionError("loop edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    return Edge{u, v};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    for (Edge& e : edges) {
        if (e.u == e.v)
            throw PreconditionError("loop edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    " outside vertex range 0.." + std::to_string(n - 1));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_edge(int u, int v) const {
    Edge e = make_edge(u, v);
    if (e.v >= n_ || e.u < 0)
        throw PreconditionError("edge endpoint outside vertex range");
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return Graph(n_, std::move(es));
}

// --- edge-list format ----------------------------------------------------

namespace {

int parse_nonneg(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError("malformed token '" + std::string(tok) + "'", line_no);
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int declared_n = -1;
    int max_id = -1;
    int line_no = 0;
    size_t pos = 0;
    bool first_content_line = true;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (first_content_line && toks.size() == 2 && toks[0] == "n") {
            declared_n = parse_nonneg(toks[1], line_no);
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        if (toks.size() != 2)
            throw ParseError("expected 'u v'", line_no);
        int u = parse_nonneg(toks[0], line_no);
        int v = parse_nonneg(toks[1], line_no);
        if (u == v)
            throw ParseError("loop edge " + std::to_string(u) + " " + std::to_string(v), line_no);
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
            throw ParseError("vertex id " + std::to_string(std::max(u, v)) +
                                 " >= declared n " + std::to_string(declared_n),
                             line_no);
        max_id = std::max({max_id, u, v});
        edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
    }
    int n = declared_n >= 0 ? declared_n : max_id + 1;
    return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// --- graph6 ---------------------------------------------------------------

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

class BitReader {
public:
    BitReader(std::string_view s, size_t start) : s_(s), byte_(start) {}

    int next() {
        if (byte_ >= s_.size()) throw ParseError("graph6: truncated bit stream");
        int c = static_cast<unsigned char>(s_[byte_]);
        int bit = ((c - kG6Lo) >> (5 - shift_)) & 1;
        if (++shift_ == 6) {
            shift_ = 0;
            ++byte_;
        }
        return bit;
    }

    void finish() {
        // Remaining padding bits in the current byte must be zero and no
        // bytes may follow.
        if (shift_ != 0) {
            int c = static_cast<unsigned char>(s_[byte_]) - kG6Lo;
            if ((c & ((1 << (6 - shift_)) - 1)) != 0)
                throw ParseError("graph6: nonzero padding bits");
            ++byte_;
        }
        if (byte_ != s_.size()) throw ParseError("graph6: trailing data");
    }

private:
    std::string_view s_;
    size_t byte_;
    int shift_ = 0;
};

} // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("graph6: truncated (empty string)");
    for (char ch : line) {
        int c = static_cast<unsigned char>(ch);
        if (c < kG6Lo || c > kG6Hi)
            throw ParseError("graph6: character out of range 63..126");
    }
    size_t pos = 0;
    auto take = [&]() -> long long {
        if (pos >= line.size()) throw ParseError("graph6: truncated size prefix");
        return static_cast<unsigned char>(line[pos++]) - kG6Lo;
    };
    long long n;
    long long c0 = take();
    if (c0 < 126) {
        n = c0;
    } else {
        long long c1 = take();
        if (c1 < 126) {
            n = (c1 << 12) | (take() << 6) | take();
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | take();
        }
    }
    if (n > 1'000'000) throw ParseError("graph6: vertex count too large");
    BitReader bits(line, pos);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bits.next()) edges.push_back(Edge{u, v});
    bits.finish();
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Lo + n));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(kG6Lo + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kG6Lo + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kG6Lo + (n & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int i = 5; i >= 0; --i)
            out.push_back(static_cast<char>(kG6Lo + ((n >> (6 * i)) & 63)));
    }
    int acc = 0, nbits = 0;
    auto push_bit = [&](int b) {
        acc = (acc << 1) | b;
        if (++nbits == 6) {
            out.push_back(static_cast<char>(kG6Lo + acc));
            acc = 0;
            nbits = 0;
        }
    };
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            push_bit(g.has_edge(u, v) ? 1 : 0);
    if (nbits > 0) out.push_back(static_cast<char>(kG6Lo + (acc << (6 - nbits))));
    return out;
}

// --- DOT -------------------------------------------------------------------

std::string to_dot(const Graph& g, const std::vector<EdgeHighlight>& highlights) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << " [label=\"" << v << "\"];\n";
    for (const Edge& e : g.edges()) {
        os << "  " << e.u << " -- " << e.v;
        for (const auto& h : highlights) {
            if (std::find(h.edges.begin(), h.edges.end(), e) != h.edges.end()) {
                os << " [color=\"" << h.color << "\"]";
                break;
            }
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

// --- predicates -------------------------------------------------------------

bool is_matching(const Graph& g, std::span<const Edge> edges) {
    std::vector<bool> used(g.vertex_count(), false);
    for (const Edge& e : edges) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = true;
    }
    return true;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int u : g.neighbors(v))
                if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[u] < 0) {
                    color[u] = color[v] ^ 1;
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool has_hamiltonian_path(const Graph& g, int max_vertices) {
    int n = g.vertex_count();
    if (n > max_vertices)
        throw BoundError("graph too large for exact Hamiltonian path search (" +
                         std::to_string(n) + " > " + std::to_string(max_vertices) + " vertices)");
    if (n <= 1) return true;
    std::vector<uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= uint32_t{1} << e.v;
        adj[e.v] |= uint32_t{1} << e.u;
    }
    // ends[mask] = set of vertices at which some path covering exactly mask can end
    std::vector<uint32_t> ends(size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) ends[uint32_t{1} << v] = uint32_t{1} << v;
    uint32_t full = (uint32_t{1} << n) - 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        uint32_t e = ends[mask];
        if (!e) continue;
        if (mask == full) return true;
        for (int v = 0; v < n; ++v) {
            if (!(e & (uint32_t{1} << v))) continue;
            uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (uint32_t{1} << u)] |= uint32_t{1} << u;
            }
        }
    }
    return false;
}

} // namespace matchcover
