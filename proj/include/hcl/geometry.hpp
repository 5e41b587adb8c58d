#pragma once

#include "hcl/measures.hpp"

namespace hcl {

/// Input of the direction-selection step: vectors nu_1..nu_k with convex
/// weights lambda (summing to exactly 1), a current vector mu, and step
/// sizes xs with 0 < xs[i] <= x. All coordinates nonnegative.
struct WeightedVectors {
    std::vector<std::vector<Rational>> nus;
    std::vector<Rational> lambda;
    std::vector<Rational> mu;
    Rational x;
    std::vector<Rational> xs;

    void validate() const;
    std::size_t dimension() const { return mu.size(); }
    std::size_t count() const { return nus.size(); }
};

Rational vector_norm_sq(const std::vector<Rational>& v);

/// The blended vector (1 - xs[i]*lambda[i]) * mu + xs[i]*lambda[i] * nus[i].
std::vector<Rational> blend(const WeightedVectors& w, std::size_t i);

/// Returns the index i with lambda[i] > 0 minimizing
/// (|mu_i|^2 - |mu|^2) / (lambda[i] * xs[i]), ties broken by smallest index.
/// The averaging argument guarantees the returned index also satisfies the
/// norm-growth bound checked by `direction_bound_holds`.
std::size_t select_direction(const WeightedVectors& w);

/// Exact check of
///   |mu_i|^2 <= |mu|^2 + lambda_i x_i ((2|nu|/|mu| - 2 + x|lambda|^2)|mu|^2
///                                      + x sum_j lambda_j^2 |nu_j|^2)
/// in the multiplied-out form that avoids dividing by |mu|.
bool direction_bound_holds(const WeightedVectors& w, std::size_t i);

/// Exact check of the averaging bound: the minimum over lambda_i > 0 of
/// (|mu_i|^2 - |mu|^2)/(lambda_i x_i) is at most
/// 2(|nu||mu| - |mu|^2) + x(|lambda|^2 |mu|^2 + sum_j lambda_j^2 |nu_j|^2).
bool direction_average_bound_holds(const WeightedVectors& w);

/// Read-only view of the growing r-uniform accumulator used during a round:
/// its edge count, its alpha-weighted norm, and the same two quantities for
/// the union with a candidate link (given as r-uniform edges).
class NormOracle {
public:
    virtual ~NormOracle() = default;
    virtual BigInt edge_count() const = 0;
    virtual Rational alpha_norm_sq() const = 0;
    virtual std::pair<BigInt, Rational> peek_union(
        const std::vector<std::pair<VertexSet, BigInt>>& link_edges) const = 0;
};

/// Among vertices with nonzero degree in A, returns the one minimizing
///   e(G* u A_v) * (|sigma_alpha(G* u A_v)|^2 - target_sq),
/// ties broken by smallest index. `a` must be (r+1)-uniform and nonempty.
int select_vertex(const Multihypergraph& a, const NormOracle& accumulator,
                  const Rational& target_sq);

/// Collects the r-uniform link edges of v in A (each edge through v, minus v).
std::vector<std::pair<VertexSet, BigInt>> link_edges_of(const Multihypergraph& a, int v);

/// Exact existence check: some vertex v with nonzero A-degree satisfies
///   |sa(G*^v)|^2 <= |sa(G*)|^2 + deg_A(v)/e(G*^v) *
///       ((2|sa(A)|/|sa(G*)| - 2 + hatD1(A)/e(G*)) |sa(G*)|^2 + hatDalpha(A)/e(G*))
/// where sa = sigma_alpha and G*^v = G* u A_v. `gstar` is materialized.
bool vertex_bound_exists(const Multihypergraph& a, const Multihypergraph& gstar,
                         const AlphaWeights& alpha);

}  // namespace hcl
