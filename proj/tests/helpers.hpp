#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "hcl/generators.hpp"
#include "hcl/hypergraph.hpp"
#include "hcl/measures.hpp"

namespace testutil {

using hcl::BigInt;
using hcl::Multihypergraph;
using hcl::Rational;
using hcl::VertexSet;

/// Independent triangle oracle for clique_hypergraph(n, 2): lists every
/// triangle of K_n as a sorted triple of pair indices, bypassing the
/// generator's subset machinery.
inline std::vector<VertexSet> triangle_edge_sets(int n) {
    std::vector<VertexSet> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                VertexSet t{hcl::pair_index(a, b, n), hcl::pair_index(a, c, n),
                            hcl::pair_index(b, c, n)};
                std::sort(t.begin(), t.end());
                out.push_back(std::move(t));
            }
    return out;
}

/// Brute-force degree of T in an explicit edge list (all multiplicities 1).
inline int list_degree(const std::vector<VertexSet>& edges, const VertexSet& t) {
    int d = 0;
    for (const auto& e : edges)
        if (hcl::is_subset(t, e)) ++d;
    return d;
}

/// Complete s-uniform hypergraph with a fixed multiplicity.
inline Multihypergraph complete_uniform(int n, int s, const BigInt& mult = 1) {
    Multihypergraph h(s, n);
    hcl::for_each_subset(hcl::full_vertex_set(n), s,
                         [&](const VertexSet& e) { h.add_edge(e, mult); });
    return h;
}

/// Seeded corpus instance: random uniformity/size within the given bounds,
/// occasionally with multiplicities above 1. `max_edges` caps the total
/// edge count including multiplicities.
inline Multihypergraph corpus_instance(std::mt19937_64& rng, int max_s, int max_v,
                                       int max_edges) {
    std::uniform_int_distribution<int> pick_s(2, max_s);
    const int s = pick_s(rng);
    std::uniform_int_distribution<int> pick_v(s + 1, max_v);
    const int v = pick_v(rng);
    long max_sets = 1;
    for (int i = 0; i < s; ++i) max_sets = max_sets * (v - i) / (i + 1);
    std::uniform_int_distribution<int> pick_e(1, static_cast<int>(std::min<long>(max_edges, max_sets)));
    const int edges = pick_e(rng);
    Multihypergraph base = hcl::random_hypergraph(v, s, edges, rng());
    if (rng() % 3 != 0) return base;
    Multihypergraph h(s, v);
    std::uniform_int_distribution<int> pick_mult(1, 4);
    long budget = max_edges;
    for (const auto& [edge, mult] : base.edges()) {
        if (budget <= 0) break;
        const long m = std::min<long>(pick_mult(rng), budget);
        h.add_edge(edge, m);
        budget -= m;
    }
    return h;
}

/// Uniformly random nonempty sub-multihypergraph (unit-level subsets).
inline Multihypergraph random_subhypergraph(const Multihypergraph& h, std::mt19937_64& rng) {
    while (true) {
        Multihypergraph sub(h.uniformity(), h.vertex_count());
        bool any = false;
        for (const auto& [edge, mult] : h.edges()) {
            BigInt keep = 0;
            for (BigInt unit = 0; unit < mult; ++unit)
                if (rng() % 2 == 0) ++keep;
            if (keep > 0) {
                sub.add_edge(edge, keep);
                any = true;
            }
        }
        if (any) return sub;
    }
}

inline VertexSet random_subset(int n, std::mt19937_64& rng, double p = 0.5) {
    VertexSet out;
    std::bernoulli_distribution keep(p);
    for (int v = 0; v < n; ++v)
        if (keep(rng)) out.push_back(v);
    return out;
}

/// Greedy maximal independent extension of `base` in H, scanning vertices in
/// a seeded random order.
inline VertexSet random_maximal_independent(const Multihypergraph& h, std::mt19937_64& rng,
                                            VertexSet base = {}) {
    std::vector<int> order(static_cast<std::size_t>(h.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet current = base;
    std::sort(current.begin(), current.end());
    for (int v : order) {
        if (std::binary_search(current.begin(), current.end(), v)) continue;
        VertexSet candidate = hcl::set_union(current, VertexSet{v});
        if (hcl::is_independent(h, candidate)) current = std::move(candidate);
    }
    return current;
}

}  // namespace testutil
