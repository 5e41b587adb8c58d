#pragma once

#include "hcl/hypergraph.hpp"

namespace hcl {

/// Brute-force ground truth. Everything here is deliberately naive and kept
/// independent of the main code paths: separate subset logic, separate
/// degree counting. Small instances only.

struct EnumerationCap {
    std::size_t limit = 1u << 20;
};

struct IndependentSets {
    std::vector<VertexSet> sets;
    bool complete = true;  // false when the cap truncated the output
};

/// Exact enumeration of independent (or inclusion-maximal independent) sets
/// by include/exclude branch and bound over the edge list.
IndependentSets enumerate_independent_sets(const Multihypergraph& h, bool maximal_only,
                                           const EnumerationCap& cap = {});

struct CoverReport {
    std::size_t total_maximal = 0;
    std::size_t covered = 0;
    std::vector<VertexSet> uncovered;  // bounded sample of witnesses
    std::size_t container_count = 0;
    bool complete = true;

    bool full_cover() const { return complete && covered == total_maximal; }
};

/// Checks that every maximal independent set lies inside some container.
/// Maximality suffices: independence is downward closed.
CoverReport verify_cover(const std::vector<VertexSet>& containers, const Multihypergraph& h,
                         const EnumerationCap& cap = {});

/// Exact counts for a complete colouring of E(K_N) with colours 1..k+1:
/// how many edges carry colour k+1, and how many copies of K_n are
/// monochromatic in one of the colours 1..k.
struct MonoCliqueCounts {
    BigInt special_colour_edges;  // edges coloured k+1
    BigInt monochromatic_cliques;
};

MonoCliqueCounts count_mono_cliques(int big_n, int n, int k,
                                    const std::vector<int>& edge_colours);

/// Exact minimum hitting set of the ranges with at least eps*|X| elements,
/// by branch and bound; returns the optimum size and one witness net.
struct EpsNetResult {
    std::size_t size = 0;
    VertexSet net;
};

EpsNetResult min_eps_net(const VertexSet& points, const std::vector<VertexSet>& ranges,
                         const Rational& eps);

}  // namespace hcl
