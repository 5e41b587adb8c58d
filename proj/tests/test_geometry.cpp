#include <doctest.h>

#include "hcl/geometry.hpp"
#include "helpers.hpp"

using namespace hcl;
using testutil::corpus_instance;

namespace {

Rational small_rational(std::mt19937_64& rng, long max_num = 6, long max_den = 6) {
    return Rational(static_cast<long>(rng() % static_cast<unsigned long>(max_num + 1)),
                    1 + static_cast<long>(rng() % static_cast<unsigned long>(max_den)));
}

WeightedVectors random_instance(std::mt19937_64& rng) {
    WeightedVectors w;
    const std::size_t d = 1 + rng() % 8;
    const std::size_t k = 1 + rng() % 8;
    w.mu.resize(d);
    for (auto& c : w.mu) c = small_rational(rng);
    w.nus.resize(k);
    for (auto& nu : w.nus) {
        nu.resize(d);
        for (auto& c : nu) c = small_rational(rng);
    }
    // Random convex weights: draw nonnegative numerators over one denominator.
    std::vector<long> nums(k);
    long total = 0;
    for (auto& x : nums) {
        x = static_cast<long>(rng() % 5);
        total += x;
    }
    if (total == 0) {
        nums[rng() % k] = 1;
        total = 1;
    }
    w.lambda.resize(k);
    for (std::size_t i = 0; i < k; ++i) w.lambda[i] = Rational(nums[i], total);
    w.x = Rational(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
    w.xs.resize(k);
    for (auto& xi : w.xs) {
        xi = Rational(1 + static_cast<long>(rng() % 6), 6) * w.x;  // lands in (0, x]
    }
    return w;
}

/// Independent full-recompute selection used to cross-check select_vertex.
int exhaustive_select(const Multihypergraph& a, const Multihypergraph& gstar,
                      const AlphaWeights& alpha, const Rational& target_sq) {
    int best = -1;
    Rational best_key(0);
    for (int v = 0; v < a.vertex_count(); ++v) {
        if (degree(a, {v}) == 0) continue;
        const auto merged = union_scale(gstar, link(a, v), 1, 1);
        const Rational key =
            Rational(merged.edge_count()) * (alpha_norm_sq(merged, alpha) - target_sq);
        if (best < 0 || key < best_key) {
            best = v;
            best_key = key;
        }
    }
    return best;
}

/// Materialized accumulator view for feeding select_vertex in isolation.
class ExplicitOracle : public NormOracle {
public:
    ExplicitOracle(Multihypergraph gstar, AlphaWeights alpha)
        : gstar_(std::move(gstar)), alpha_(std::move(alpha)) {}

    BigInt edge_count() const override { return gstar_.edge_count(); }
    Rational alpha_norm_sq() const override { return hcl::alpha_norm_sq(gstar_, alpha_); }
    std::pair<BigInt, Rational> peek_union(
        const std::vector<std::pair<VertexSet, BigInt>>& link_edges) const override {
        Multihypergraph merged = gstar_;
        for (const auto& [edge, mult] : link_edges) merged.add_edge(edge, mult);
        return {merged.edge_count(), hcl::alpha_norm_sq(merged, alpha_)};
    }

private:
    Multihypergraph gstar_;
    AlphaWeights alpha_;
};

}  // namespace

TEST_CASE("select_direction degenerate cases") {
    WeightedVectors w;
    w.mu = {Rational(1), Rational(2)};
    w.nus = {w.mu};
    w.lambda = {Rational(1)};
    w.x = Rational(1);
    w.xs = {Rational(1, 2)};
    CHECK(select_direction(w) == 0);
    CHECK(direction_bound_holds(w, 0));

    // Zero-weight entries are never returned.
    WeightedVectors two;
    two.mu = {Rational(1)};
    two.nus = {{Rational(0)}, {Rational(5)}};
    two.lambda = {Rational(0), Rational(1)};
    two.x = Rational(1);
    two.xs = {Rational(1), Rational(1)};
    CHECK(select_direction(two) == 1);

    WeightedVectors bad = two;
    bad.lambda = {Rational(1, 2), Rational(1, 2)};
    bad.xs = {Rational(2), Rational(1)};  // exceeds x
    CHECK_THROWS(select_direction(bad));
}

TEST_CASE("select_direction satisfies the norm-growth bound") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        const auto w = random_instance(rng);
        const std::size_t i = select_direction(w);
        CHECK(w.lambda[i] > Rational(0));
        CHECK(direction_bound_holds(w, i));
        CHECK(direction_average_bound_holds(w));
    }
}

TEST_CASE("select_direction minimizes the normalized growth") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const auto w = random_instance(rng);
        const std::size_t chosen = select_direction(w);
        const Rational mu_sq = vector_norm_sq(w.mu);
        const Rational chosen_key =
            (vector_norm_sq(blend(w, chosen)) - mu_sq) / (w.lambda[chosen] * w.xs[chosen]);
        for (std::size_t i = 0; i < w.count(); ++i) {
            if (w.lambda[i].is_zero()) continue;
            const Rational key =
                (vector_norm_sq(blend(w, i)) - mu_sq) / (w.lambda[i] * w.xs[i]);
            CHECK(chosen_key <= key);
            if (key == chosen_key) CHECK(chosen <= i);
        }
    }
}

TEST_CASE("select_vertex basics") {
    // Single positive-degree vertex wins outright.
    Multihypergraph a(2, 4);
    a.add_edge({2, 3});
    Multihypergraph gstar(1, 4);
    gstar.add_edge({0});
    AlphaWeights alpha{{Rational(1)}};
    ExplicitOracle oracle(gstar, alpha);
    // The two candidates tie by symmetry; the smaller index wins.
    CHECK(select_vertex(a, oracle, Rational(1, 2)) == 2);

    // Vertex-transitive instance: the tie-break picks the smallest index.
    Multihypergraph cycle(2, 4);
    cycle.add_edge({0, 1});
    cycle.add_edge({1, 2});
    cycle.add_edge({2, 3});
    cycle.add_edge({0, 3});
    Multihypergraph seed(1, 4);
    for (int u = 0; u < 4; ++u) seed.add_edge({u}, 3);
    ExplicitOracle symmetric(seed, alpha);
    CHECK(select_vertex(cycle, symmetric, Rational(0)) == 0);
}

TEST_CASE("select_vertex matches the exhaustive scan") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = corpus_instance(rng, 3, 10, 15);
        const int r = a.uniformity() - 1;
        AlphaWeights alpha;
        for (int t = 1; t <= r; ++t)
            alpha.weights.emplace_back(1 + static_cast<long>(rng() % 4), 2);
        Multihypergraph gstar = testutil::complete_uniform(a.vertex_count(), r,
                                                           1 + static_cast<long>(rng() % 3));
        const Rational target = Rational(static_cast<long>(rng() % 3), 7);
        ExplicitOracle oracle(gstar, alpha);
        CHECK(select_vertex(a, oracle, target) == exhaustive_select(a, gstar, alpha, target));
    }
}

TEST_CASE("some vertex always satisfies the norm-change bound") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = corpus_instance(rng, 3, 9, 12);
        const int r = a.uniformity() - 1;
        AlphaWeights alpha;
        for (int t = 1; t <= r; ++t)
            alpha.weights.emplace_back(static_cast<long>(rng() % 4), 3);
        Multihypergraph gstar = testutil::complete_uniform(a.vertex_count(), r,
                                                           1 + static_cast<long>(rng() % 2));
        std::mt19937_64 extra(rng());
        // Occasionally grow the accumulator with a random link first.
        if (extra() % 2 == 0) {
            const int v = static_cast<int>(extra() % a.vertex_count());
            if (degree(a, {v}) > 0) gstar = union_scale(gstar, link(a, v), 1, 1);
        }
        CHECK(vertex_bound_exists(a, gstar, alpha));
    }
}
