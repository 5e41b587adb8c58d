#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hcl/rational.hpp"

namespace hcl {

/// Sorted, duplicate-free vertex indices.
using VertexSet = std::vector<int>;

/// Sorts and deduplicates in place, checking the 0..vertex_count-1 range.
VertexSet make_vertex_set(std::vector<int> vertices, int vertex_count);

bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet full_vertex_set(int vertex_count);

/// Calls fn(subset) for every k-element subset of `base`, in lexicographic
/// order. `base` must be sorted.
void for_each_subset(const VertexSet& base, int k,
                     const std::function<void(const VertexSet&)>& fn);

/// Uniform hypergraph with positive integer edge multiplicities. Edges are
/// keyed by their (sorted) vertex set, so adding a duplicate set merges by
/// multiplicity addition. Iteration over edges is lexicographic, which makes
/// every canonical choice downstream deterministic.
///
/// Values are immutable once built; all operations below are pure functions
/// returning new values, safe to call from concurrent readers.
class Multihypergraph {
public:
    using EdgeMap = std::map<VertexSet, BigInt>;

    Multihypergraph(int uniformity, int vertex_count);

    /// Merges by multiplicity addition when the set is already present.
    void add_edge(VertexSet edge, BigInt multiplicity = 1);

    int uniformity() const { return uniformity_; }
    int vertex_count() const { return vertex_count_; }
    const EdgeMap& edges() const { return edges_; }
    bool empty() const { return edges_.empty(); }
    /// e(H): total multiplicity.
    const BigInt& edge_count() const { return edge_count_; }
    /// Number of distinct stored edge sets.
    std::size_t edge_set_count() const { return edges_.size(); }

    friend bool operator==(const Multihypergraph& a, const Multihypergraph& b) {
        return a.uniformity_ == b.uniformity_ && a.vertex_count_ == b.vertex_count_ &&
               a.edges_ == b.edges_;
    }

private:
    int uniformity_;
    int vertex_count_;
    EdgeMap edges_;
    BigInt edge_count_;
};

/// deg_H(T): total multiplicity of edges containing T. degree(H, {}) = e(H).
BigInt degree(const Multihypergraph& h, const VertexSet& t);

/// Per-vertex degrees of all of V(H) in one pass.
std::vector<BigInt> vertex_degrees(const Multihypergraph& h);

/// Delta_t(H): maximum degree over t-subsets; only t-subsets of stored edges
/// are scanned (everything else has degree zero).
BigInt max_degree_t(const Multihypergraph& h, int t);

/// Link hypergraph of v: (s-1)-uniform on the same vertex set, one edge
/// A \ {v} per edge A containing v, multiplicities kept.
Multihypergraph link(const Multihypergraph& h, int v);

/// Induced subhypergraph on W. The vertex universe is kept fixed (vertices
/// outside W become isolated), so nested calls share one coordinate system.
Multihypergraph restrict_to(const Multihypergraph& h, const VertexSet& w);

/// Edge-wise k1*H1 + k2*H2 on a common vertex set and uniformity.
Multihypergraph union_scale(const Multihypergraph& h1, const Multihypergraph& h2,
                            const BigInt& k1, const BigInt& k2);

/// True iff no edge set is contained in I.
bool is_independent(const Multihypergraph& h, const VertexSet& independent_set);

/// hat-Delta_1(H) = s * e(H) * |sigma^(1)|^2 = sum_v deg(v)^2 / (s * e(H)).
/// Lives here (not in measures) so the pruning routines have no upward
/// dependency; the measures module exposes the general hat_delta.
Rational hat_delta_1(const Multihypergraph& h);

/// Removes every edge meeting X = {v : deg(v) > R * hat-Delta_1(H)}.
/// The result H' satisfies e(H') > (1 - s/R) * e(H) and
/// Delta_1(H') <= R * hat-Delta_1(H). Requires R >= uniformity.
Multihypergraph prune_max_degree(const Multihypergraph& h, const Rational& max_degree_ratio);

/// Iteratively deletes all edges containing a vertex of current degree below
/// beta * e(H) / |V|, with the threshold fixed from the input's edge count.
/// The result keeps more than a (1 - beta) fraction of the edges and every
/// surviving vertex has degree 0 or at least the threshold.
Multihypergraph prune_min_degree(const Multihypergraph& h, const Rational& beta);

/// Greedy capped subhypergraph extraction: admits edges in lexicographic
/// order, multiplicity unit by unit, subject to the per-vertex degree cap
/// ceil(s * min_edges / (beta * |domain|)). On success the result has at
/// least `min_edges` edges and Delta_1 <= ceil((s/beta) * e(H') / |domain|).
/// On failure the complement of the capped vertices is a sparsity witness:
/// |witness| >= (1 - beta) * |domain| and e(H[witness]) < min_edges.
struct SupersaturationResult {
    Multihypergraph extracted;
    bool succeeded;
    /// Only meaningful on failure: domain minus the vertices at the cap.
    VertexSet witness;
};

SupersaturationResult delta1_supersaturate_on(const Multihypergraph& h, const Rational& beta,
                                              const BigInt& min_edges, const VertexSet& domain);

/// Domain = all of V(H). Throws std::runtime_error when the result has fewer
/// than `min_edges` edges, which certifies the robust-density precondition
/// fails.
Multihypergraph delta1_supersaturate(const Multihypergraph& h, const Rational& beta,
                                     const BigInt& min_edges);

/// Hypergraph JSON:
///   {"uniformity": s, "vertex_count": n,
///    "edges": [{"set": [ints], "mult": int-or-string}, ...]}
/// Sets must be sorted ascending; duplicate sets are rejected on load.
std::string to_json(const Multihypergraph& h);
Multihypergraph hypergraph_from_json(const std::string& text);

}  // namespace hcl
