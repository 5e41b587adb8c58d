#pragma once

#include <cstdint>

#include "hcl/hypergraph.hpp"

namespace hcl {

/// Index of the pair {i, j} (i < j) of [n] in lexicographic order:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
int pair_index(int i, int j, int n);
std::pair<int, int> pair_from_index(int index, int n);

/// Vertex set E(K_n), one edge per copy of K_{r+1}: the binom(r+1,2)-uniform
/// hypergraph whose independent sets are the K_{r+1}-free subgraphs of K_n.
Multihypergraph clique_hypergraph(int n, int r);

/// Arithmetic-progression lines of slope M/h through the n x n grid
/// (n = m*M, M prime), grouped by h. Every stored line meets the grid in
/// exactly m points; lines within one slope class are pairwise disjoint.
struct GridLineFamily {
    int m = 0;
    int big_m = 0;  // M
    int n = 0;      // m * M
    int h_max = 0;
    std::vector<std::vector<VertexSet>> lines_by_h;  // index h-1

    std::vector<VertexSet> all_lines() const;
};

/// Point (x, y) of [n]^2 (1-based) -> vertex index, row-major:
/// index = (x-1)*n + (y-1).
int grid_point_index(int x, int y, int n);

/// The s-uniform hypergraph on the grid whose edges are all line-collinear
/// s-element subsets, one edge per (line, s-subset of its m points). The
/// default h_max = floor(n/(10m)) can be overridden for small instances
/// where the formula gives zero.
std::pair<GridLineFamily, Multihypergraph> grid_lines_hypergraph(int m, int big_m, int s,
                                                                 int h_max_override = 0);

/// Vertex set E(K_N) x [k] (colour-major slices); one binom(n,2)-uniform
/// edge per (copy of K_n, colour). Independent sets are exactly the
/// k-colourings of subgraphs of K_N without a monochromatic K_n.
Multihypergraph folkman_hypergraph(int big_n, int n, int k);

/// Small simple graph input for the induced-Ramsey construction.
struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Vertex set E(K_N) x {0..k}; one edge per injection image
///   (phi(E(H)) x {i}) u (phi(E(K_n) \ E(H)) x {0}),  i in [k].
/// By default injections with identical images are merged to multiplicity 1;
/// set keep_multiplicities to count every injection instead.
Multihypergraph induced_ramsey_hypergraph(int big_n, const SimpleGraph& h_graph, int k,
                                          bool keep_multiplicities = false);

/// Deterministic seeded sample of `edge_count` distinct s-sets, multiplicity 1.
Multihypergraph random_hypergraph(int v, int s, int edge_count, std::uint64_t seed);

bool is_prime(int n);

}  // namespace hcl
