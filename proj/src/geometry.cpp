#include "hcl/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcl {

void WeightedVectors::validate() const {
    if (nus.empty()) throw std::invalid_argument("WeightedVectors: no vectors");
    if (lambda.size() != nus.size() || xs.size() != nus.size())
        throw std::invalid_argument("WeightedVectors: inconsistent counts");
    Rational lambda_sum(0);
    for (const auto& l : lambda) {
        if (l.is_negative()) throw std::invalid_argument("WeightedVectors: negative lambda");
        lambda_sum += l;
    }
    if (lambda_sum != Rational(1))
        throw std::invalid_argument("WeightedVectors: lambda must sum to exactly 1");
    if (!(x > Rational(0))) throw std::invalid_argument("WeightedVectors: x must be positive");
    for (const auto& xi : xs)
        if (!(xi > Rational(0)) || xi > x)
            throw std::invalid_argument("WeightedVectors: step sizes must lie in (0, x]");
    for (const auto& nu : nus) {
        if (nu.size() != mu.size())
            throw std::invalid_argument("WeightedVectors: dimension mismatch");
        for (const auto& c : nu)
            if (c.is_negative()) throw std::invalid_argument("WeightedVectors: negative coordinate");
    }
    for (const auto& c : mu)
        if (c.is_negative()) throw std::invalid_argument("WeightedVectors: negative coordinate");
}

Rational vector_norm_sq(const std::vector<Rational>& v) {
    Rational sum(0);
    for (const auto& c : v) sum += c * c;
    return sum;
}

std::vector<Rational> blend(const WeightedVectors& w, std::size_t i) {
    const Rational step = w.xs[i] * w.lambda[i];
    const Rational keep = Rational(1) - step;
    std::vector<Rational> out(w.dimension());
    for (std::size_t d = 0; d < w.dimension(); ++d)
        out[d] = keep * w.mu[d] + step * w.nus[i][d];
    return out;
}

std::size_t select_direction(const WeightedVectors& w) {
    w.validate();
    const Rational mu_sq = vector_norm_sq(w.mu);
    bool found = false;
    std::size_t best = 0;
    Rational best_key(0);
    for (std::size_t i = 0; i < w.count(); ++i) {
        if (w.lambda[i].is_zero()) continue;
        const Rational key = (vector_norm_sq(blend(w, i)) - mu_sq) / (w.lambda[i] * w.xs[i]);
        if (!found || key < best_key) {
            found = true;
            best = i;
            best_key = key;
        }
    }
    if (!found) throw std::domain_error("select_direction: all lambda entries are zero");
    return best;
}

namespace {

/// Shared rational pieces of the two direction bounds.
struct DirectionTerms {
    Rational mu_sq;
    Rational nu_sq;
    Rational lambda_sq;
    Rational weighted_nu_sq;  // sum_j lambda_j^2 |nu_j|^2
};

DirectionTerms direction_terms(const WeightedVectors& w) {
    DirectionTerms t;
    t.mu_sq = vector_norm_sq(w.mu);
    std::vector<Rational> nu(w.dimension(), Rational(0));
    for (std::size_t i = 0; i < w.count(); ++i)
        for (std::size_t d = 0; d < w.dimension(); ++d) nu[d] += w.lambda[i] * w.nus[i][d];
    t.nu_sq = vector_norm_sq(nu);
    t.lambda_sq = vector_norm_sq(w.lambda);
    t.weighted_nu_sq = Rational(0);
    for (std::size_t i = 0; i < w.count(); ++i)
        t.weighted_nu_sq += w.lambda[i] * w.lambda[i] * vector_norm_sq(w.nus[i]);
    return t;
}

}  // namespace

bool direction_bound_holds(const WeightedVectors& w, std::size_t i) {
    const DirectionTerms t = direction_terms(w);
    const Rational step = w.lambda[i] * w.xs[i];
    const Rational mu_i_sq = vector_norm_sq(blend(w, i));
    // |mu_i|^2 <= |mu|^2 + step*((x|lambda|^2 - 2)|mu|^2 + x*S) + step*2*sqrt(|nu|^2 |mu|^2)
    const Rational base = t.mu_sq + step * ((w.x * t.lambda_sq - Rational(2)) * t.mu_sq +
                                            w.x * t.weighted_nu_sq);
    return leq_plus_two_sqrt(mu_i_sq, base, step * step * t.nu_sq * t.mu_sq);
}

bool direction_average_bound_holds(const WeightedVectors& w) {
    const DirectionTerms t = direction_terms(w);
    bool found = false;
    Rational min_key(0);
    for (std::size_t i = 0; i < w.count(); ++i) {
        if (w.lambda[i].is_zero()) continue;
        const Rational key =
            (vector_norm_sq(blend(w, i)) - t.mu_sq) / (w.lambda[i] * w.xs[i]);
        if (!found || key < min_key) {
            found = true;
            min_key = key;
        }
    }
    if (!found) throw std::domain_error("direction_average_bound_holds: all lambda zero");
    const Rational base =
        Rational(-2) * t.mu_sq + w.x * (t.lambda_sq * t.mu_sq + t.weighted_nu_sq);
    return leq_plus_two_sqrt(min_key, base, t.nu_sq * t.mu_sq);
}

std::vector<std::pair<VertexSet, BigInt>> link_edges_of(const Multihypergraph& a, int v) {
    std::vector<std::pair<VertexSet, BigInt>> out;
    for (const auto& [edge, mult] : a.edges()) {
        if (!std::binary_search(edge.begin(), edge.end(), v)) continue;
        VertexSet reduced;
        reduced.reserve(edge.size() - 1);
        for (int u : edge)
            if (u != v) reduced.push_back(u);
        out.emplace_back(std::move(reduced), mult);
    }
    return out;
}

int select_vertex(const Multihypergraph& a, const NormOracle& accumulator,
                  const Rational& target_sq) {
    if (a.empty()) throw std::domain_error("select_vertex: empty hypergraph");
    const auto deg = vertex_degrees(a);
    bool found = false;
    int best = -1;
    Rational best_key(0);
    for (int v = 0; v < a.vertex_count(); ++v) {
        if (deg[static_cast<std::size_t>(v)] == 0) continue;
        const auto [count, nsq] = accumulator.peek_union(link_edges_of(a, v));
        const Rational key = Rational(count) * (nsq - target_sq);
        if (!found || key < best_key) {
            found = true;
            best = v;
            best_key = key;
        }
    }
    return best;
}

bool vertex_bound_exists(const Multihypergraph& a, const Multihypergraph& gstar,
                         const AlphaWeights& alpha) {
    if (a.empty() || gstar.empty())
        throw std::domain_error("vertex_bound_exists: empty hypergraph");
    if (a.uniformity() != gstar.uniformity() + 1 || gstar.uniformity() != alpha.r())
        throw std::invalid_argument("vertex_bound_exists: uniformity mismatch");
    const Rational gstar_sq = alpha_norm_sq(gstar, alpha);
    const Rational a_sq = alpha_norm_sq(a, alpha);
    const Rational hat1 = hat_delta(a, 1);
    const Rational hat_alpha = hat_delta_alpha(a, alpha);
    const Rational e_gstar(gstar.edge_count());
    const auto deg = vertex_degrees(a);
    for (int v = 0; v < a.vertex_count(); ++v) {
        const BigInt& d = deg[static_cast<std::size_t>(v)];
        if (d == 0) continue;
        Multihypergraph merged = union_scale(gstar, link(a, v), 1, 1);
        const Rational ratio = Rational(d) / Rational(merged.edge_count());
        const Rational lhs = alpha_norm_sq(merged, alpha);
        const Rational base = gstar_sq + ratio * ((hat1 / e_gstar - Rational(2)) * gstar_sq +
                                                  hat_alpha / e_gstar);
        if (leq_plus_two_sqrt(lhs, base, ratio * ratio * a_sq * gstar_sq)) return true;
    }
    return false;
}

}  // namespace hcl
