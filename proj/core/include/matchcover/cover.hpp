#ifndef MATCHCOVER_COVER_HPP
#define MATCHCOVER_COVER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchcover/graph.hpp"
#include "matchcover/matching.hpp"

namespace matchcover {

/// Pair of edge-disjoint matchings of one host, normalized so that
/// |h| >= |h_prime| (ties broken by lexicographic edge lists).
struct DisjointPair {
    Matching h;
    Matching h_prime;

    /// Validates both matchings against host and edge-disjointness,
    /// then normalizes the order.
    static DisjointPair of(const Graph& host, Matching a, Matching b);

    int total() const { return h.size() + h_prime.size(); }
    auto operator<=>(const DisjointPair&) const = default;
};

/// Exact integer parameters of one graph with witnesses.
/// mu + mu_prime == lambda, mu_prime <= mu <= nu, and ratio is the pair
/// (mu, nu) reduced to lowest terms (absent for edgeless graphs).
struct ParamsReport {
    int n = 0;
    int m = 0;
    int nu = 0;
    int lambda = 0;
    int mu = 0;
    int mu_prime = 0;
    std::map<int, int> nu_k; // only the explicitly requested k
    std::optional<std::pair<long long, long long>> ratio;
    Matching max_matching_witness;
    DisjointPair lambda_witness;
};

/// Default edge bound for the exact solvers (40). The environment
/// variable MATCHCOVER_MAX_EDGES overrides it at first use.
int default_solver_edge_limit();

/// Maximum number of edges coverable by k pairwise-disjoint matchings,
/// with a witness cover of exactly k matchings (some possibly empty).
/// Requires 1 <= k <= 4; enforces the edge bound (BoundError).
/// nu_k(g,1) is the matching number, nu_k(g,2) equals lambda.
std::pair<int, std::vector<Matching>> nu_k(const Graph& g, int k, int max_edges = -1);

/// Exact lambda, mu, mu_prime with a witness pair attaining both lambda
/// and mu. Tree components are solved by dynamic programming; the rest by
/// depth-first branch-and-bound over per-edge states {unused, H, H'} with
/// capacity pruning. max_edges < 0 uses default_solver_edge_limit().
ParamsReport lambda_mu(const Graph& g, int max_edges = -1);

/// lambda_mu plus nu_k entries for each requested k (deduplicated).
ParamsReport compute_params(const Graph& g, const std::vector<int>& requested_nu_k,
                            int max_edges = -1);

/// All pairs achieving |H|+|H'| = lambda(g), deduplicated as unordered
/// normalized pairs, in deterministic order. With mu_only, only pairs
/// whose larger matching has size mu(g). Enumeration oracle; enforces
/// max_edges (default 20).
std::vector<DisjointPair> enumerate_lambda_pairs(const Graph& g, bool mu_only = false,
                                                 int max_edges = 20);

/// H = maximum matching, H' = maximum matching of g minus H's edges.
/// total = |H| + |H'| <= lambda(g); equality is not guaranteed.
std::pair<int, DisjointPair> greedy_two_cover(const Graph& g);

/// (mu, nu) reduced to lowest terms. PreconditionError when the graph has
/// no edges (nu = 0).
std::pair<long long, long long> ratio(const ParamsReport& r);

/// Stable JSON object:
/// {"n","m","nu","lambda","mu","mu_prime","ratio":[p,q],"nu_k":{...},
///  "witnesses":{"max_matching":[[u,v],...],"H":[...],"H_prime":[...]}}
std::string to_json(const ParamsReport& r);

} // namespace matchcover

#endif
