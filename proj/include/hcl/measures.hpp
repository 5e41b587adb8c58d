#pragma once

#include "hcl/hypergraph.hpp"

namespace hcl {

/// t-degree measure sigma^(t): probability distribution on t-subsets with
/// entry(T) = deg(T) / (binom(s, t) * e(H)). Only nonzero entries are stored
/// (the support is contained in the t-subsets of stored edges); everything
/// absent is zero. Entries always sum to exactly 1.
struct DegreeMeasure {
    int t = 0;
    int host_uniformity = 0;
    std::map<VertexSet, Rational> entries;

    Rational at(const VertexSet& subset) const {
        auto it = entries.find(subset);
        return it == entries.end() ? Rational(0) : it->second;
    }
};

/// Nonnegative weight vector (alpha_1, ..., alpha_r) for the weighted norm
/// |sigma_alpha(K)|^2 = sum_t alpha_t * |sigma^(t)|^2.
struct AlphaWeights {
    std::vector<Rational> weights;

    int r() const { return static_cast<int>(weights.size()); }
    const Rational& at(int t) const { return weights.at(static_cast<std::size_t>(t - 1)); }
};

DegreeMeasure sigma_t(const Multihypergraph& h, int t);

/// Exact sum of squared entries.
Rational norm_sq(const DegreeMeasure& mu);

/// |sigma_H^(t)|^2 without materializing the measure.
Rational sigma_norm_sq(const Multihypergraph& h, int t);

/// hat-Delta_t(H) = (s/t) * e(H) * |sigma^(t)|^2, the robust analogue of the
/// maximum t-degree; always at most Delta_t for t = 1.
Rational hat_delta(const Multihypergraph& h, int t);

Rational alpha_norm_sq(const Multihypergraph& h, const AlphaWeights& alpha);

/// hat-Delta_alpha(A) = sum_t alpha_t * hat-Delta_{t+1}(A) for an
/// (r+1)-uniform A with r = alpha.r().
Rational hat_delta_alpha(const Multihypergraph& a, const AlphaWeights& alpha);

/// alpha* = (1+eps)^10 * (alpha, 0) + (50(r+1) / (eps^2 p)) * (0, alpha).
/// Requires eps in (0, 1/(9r)) and p in (0, 1).
AlphaWeights alpha_star(const AlphaWeights& alpha, const Rational& eps, const Rational& p);

/// The round-r weight schedule
///   alpha^(r)_t = binom(r-1, t-1) * (1+eps)^{10(r-t)} * (Gamma/p)^{t-1}
/// with eps = 1/(10s) and Gamma = 50s/eps^2 = 5000 s^3.
AlphaWeights alpha_schedule(int s, const Rational& p, int r);

/// eps = 1/(10s), the fixed parameter used by the multi-round engine.
Rational schedule_eps(int s);

}  // namespace hcl
