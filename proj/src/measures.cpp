#include "hcl/measures.hpp"

#include <stdexcept>

namespace hcl {

DegreeMeasure sigma_t(const Multihypergraph& h, int t) {
    if (h.empty()) throw std::domain_error("sigma_t: measure undefined for empty hypergraph");
    if (t < 1 || t > h.uniformity()) throw std::invalid_argument("sigma_t: t out of range");
    DegreeMeasure mu;
    mu.t = t;
    mu.host_uniformity = h.uniformity();
    std::map<VertexSet, BigInt> deg;
    for (const auto& [edge, mult] : h.edges())
        for_each_subset(edge, t, [&](const VertexSet& sub) { deg[sub] += mult; });
    const BigInt scale = binomial(h.uniformity(), t) * h.edge_count();
    for (auto& [sub, d] : deg) mu.entries.emplace(sub, Rational(d, scale));
    return mu;
}

Rational norm_sq(const DegreeMeasure& mu) {
    Rational sum(0);
    for (const auto& [sub, value] : mu.entries) sum += value * value;
    return sum;
}

Rational sigma_norm_sq(const Multihypergraph& h, int t) {
    if (h.empty()) throw std::domain_error("sigma_norm_sq: empty hypergraph");
    if (t < 1 || t > h.uniformity()) throw std::invalid_argument("sigma_norm_sq: t out of range");
    std::map<VertexSet, BigInt> deg;
    for (const auto& [edge, mult] : h.edges())
        for_each_subset(edge, t, [&](const VertexSet& sub) { deg[sub] += mult; });
    BigInt sum_sq = 0;
    for (const auto& [sub, d] : deg) sum_sq += d * d;
    const BigInt scale = binomial(h.uniformity(), t) * h.edge_count();
    return Rational(sum_sq, scale * scale);
}

Rational hat_delta(const Multihypergraph& h, int t) {
    if (h.empty()) throw std::domain_error("hat_delta: empty hypergraph");
    if (t < 1 || t > h.uniformity()) throw std::invalid_argument("hat_delta: t out of range");
    return Rational(h.uniformity(), t) * Rational(h.edge_count()) * sigma_norm_sq(h, t);
}

Rational alpha_norm_sq(const Multihypergraph& h, const AlphaWeights& alpha) {
    if (h.empty()) throw std::domain_error("alpha_norm_sq: empty hypergraph");
    if (alpha.r() > h.uniformity())
        throw std::invalid_argument("alpha_norm_sq: weight vector longer than uniformity");
    Rational sum(0);
    for (int t = 1; t <= alpha.r(); ++t) {
        if (alpha.at(t).is_zero()) continue;
        sum += alpha.at(t) * sigma_norm_sq(h, t);
    }
    return sum;
}

Rational hat_delta_alpha(const Multihypergraph& a, const AlphaWeights& alpha) {
    if (a.empty()) throw std::domain_error("hat_delta_alpha: empty hypergraph");
    if (a.uniformity() != alpha.r() + 1)
        throw std::invalid_argument("hat_delta_alpha: expects an (r+1)-uniform hypergraph");
    Rational sum(0);
    for (int t = 1; t <= alpha.r(); ++t) {
        if (alpha.at(t).is_zero()) continue;
        sum += alpha.at(t) * hat_delta(a, t + 1);
    }
    return sum;
}

AlphaWeights alpha_star(const AlphaWeights& alpha, const Rational& eps, const Rational& p) {
    const int r = alpha.r();
    if (r < 1) throw std::invalid_argument("alpha_star: empty weight vector");
    if (!(eps > Rational(0)) || !(eps < Rational(1, 9L * r)))
        throw std::invalid_argument("alpha_star: eps out of range (0, 1/(9r))");
    if (!(p > Rational(0)) || !(p < Rational(1)))
        throw std::invalid_argument("alpha_star: p out of range (0, 1)");
    const Rational shift = pow_rational(Rational(1) + eps, 10);
    const Rational lift = Rational(50L * (r + 1)) / (eps * eps * p);
    AlphaWeights result;
    result.weights.resize(static_cast<std::size_t>(r) + 1, Rational(0));
    for (int t = 1; t <= r; ++t) result.weights[static_cast<std::size_t>(t - 1)] = shift * alpha.at(t);
    for (int t = 2; t <= r + 1; ++t)
        result.weights[static_cast<std::size_t>(t - 1)] += lift * alpha.at(t - 1);
    return result;
}

Rational schedule_eps(int s) {
    if (s < 1) throw std::invalid_argument("schedule_eps: s must be positive");
    return Rational(1, 10L * s);
}

AlphaWeights alpha_schedule(int s, const Rational& p, int r) {
    if (r < 1 || r > s) throw std::invalid_argument("alpha_schedule: need 1 <= r <= s");
    if (!(p > Rational(0)) || !(p < Rational(1)))
        throw std::invalid_argument("alpha_schedule: p out of range (0, 1)");
    const Rational eps = schedule_eps(s);
    const Rational gamma = Rational(50L * s) / (eps * eps);  // 5000 s^3
    const Rational shift = pow_rational(Rational(1) + eps, 10);
    AlphaWeights result;
    result.weights.reserve(static_cast<std::size_t>(r));
    for (int t = 1; t <= r; ++t) {
        Rational w(binomial(r - 1, t - 1));
        w *= pow_rational(shift, static_cast<unsigned>(r - t));
        w *= pow_rational(gamma / p, static_cast<unsigned>(t - 1));
        result.weights.push_back(std::move(w));
    }
    return result;
}

}  // namespace hcl
