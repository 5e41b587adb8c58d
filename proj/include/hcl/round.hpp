#pragma once

#include <optional>

#include "hcl/geometry.hpp"

namespace hcl {

/// Answers "is v in I?" for a fixed independent set I. The round reads I
/// only through these queries, so consistency properties are literally
/// statements about query answers.
using MembershipOracle = std::function<bool(int)>;

/// Derived parameters of one round on an (r+1)-uniform G.
struct RoundConfig {
    Rational eps;
    Rational p;
    AlphaWeights alpha;   // length r
    Rational a;           // 25 / eps^2
    BigInt b;             // ceil(2p|V|/eps), the fingerprint budget
    Rational sigma_sq;    // (1-3eps)^{-2} * |sigma_alpha(G)|^2

    /// Validates eps in (0, 1/(9r)), p in (0,1), alpha length r, and fills
    /// in the derived fields from G.
    static RoundConfig make(const Multihypergraph& g, const Rational& eps, const Rational& p,
                            AlphaWeights alpha);
};

/// Smallest k such that scaling all multiplicities of G by k makes an
/// integer m >= 1 fit in m/(2a) * binom(|V|,r) <= hatDelta_1(kG) <= m/a * binom(|V|,r),
/// together with the smallest such m.
struct ScalingChoice {
    BigInt k;
    BigInt m;
};

ScalingChoice choose_scaling(const Multihypergraph& g, const Rational& a);

/// Implicit representation of the seeded accumulator
///   G*^(j) = m * (complete r-uniform on V)  u  explicit links,
/// never materializing the complete part. Degrees and the per-t norms
/// |sigma^(t)|^2 are maintained in closed form:
///   |sigma^(t)|^2 = [Q_t + binom(n,t) * (m c_t)^2] / (binom(r,t) * e)^2,
/// where c_t = binom(n-t, r-t) and Q_t = sum over the explicit support of
/// d_T * (2 m c_t + d_T). All exact.
class SeededAccumulator : public NormOracle {
public:
    SeededAccumulator(int vertex_count, int r, BigInt seed_multiplicity, AlphaWeights alpha);

    BigInt edge_count() const override { return total_; }
    Rational alpha_norm_sq() const override;
    std::pair<BigInt, Rational> peek_union(
        const std::vector<std::pair<VertexSet, BigInt>>& link_edges) const override;

    /// Commits a link into the explicit part.
    void add_link(const std::vector<std::pair<VertexSet, BigInt>>& link_edges);

    Rational sigma_norm_sq_t(int t) const;
    BigInt degree(const VertexSet& t_subset) const;
    BigInt explicit_edge_count() const { return explicit_total_; }
    BigInt seed_edge_count() const { return seed_total_; }
    const BigInt& seed_multiplicity() const { return m_; }
    int uniformity() const { return r_; }

    /// Materializes the explicit part (the accumulator minus its seed).
    Multihypergraph explicit_part() const;

private:
    struct Delta {
        BigInt mass = 0;                 // added edge multiplicity
        std::vector<std::map<VertexSet, BigInt>> by_t;  // per t: T -> added degree
    };
    Delta collect(const std::vector<std::pair<VertexSet, BigInt>>& link_edges) const;
    Rational norm_sq_from(int t, const BigInt& q_t, const BigInt& total) const;

    int n_;
    int r_;
    BigInt m_;
    AlphaWeights alpha_;
    BigInt seed_total_;      // m * binom(n, r)
    BigInt explicit_total_;
    BigInt total_;
    std::vector<std::map<VertexSet, BigInt>> deg_;  // index t-1: explicit degrees
    std::vector<BigInt> q_;                         // index t-1: Q_t
    std::vector<BigInt> c_;                         // index t-1: binom(n-t, r-t)
    std::vector<BigInt> choose_rt_;                 // index t-1: binom(r, t)
    std::vector<BigInt> choose_nt_;                 // index t-1: binom(n, t)
};

struct QueryRecord {
    int vertex;
    bool member;
    BigInt link_mass;  // degree of the vertex in the pruned working graph
};

/// Fingerprint S_I plus the dichotomy branch plus the full query trace.
struct RoundOutcome {
    VertexSet fingerprint;                      // S_I = {v_j : j in L}
    bool pruned = false;
    std::optional<VertexSet> container;         // C(S_I) = V minus queried, when pruned
    std::optional<Multihypergraph> reduced;     // F(S_I), when not pruned (may be empty)
    std::vector<QueryRecord> queries;           // v_0 .. v_{J-1}
    std::vector<long> yes_indices;              // L
    long total_queries = 0;                     // J
    bool hypothesis_satisfied = false;          // |sigma_G|^2 <= eps^3 p / (50(r+1))
    ScalingChoice scaling;
    BigInt seed_edge_count;                     // m * binom(|V|, r)
    AlphaWeights alpha_used;                    // the weight vector the round ran with
};

/// One round of the fingerprint algorithm on a nonempty (r+1)-uniform G,
/// r >= 1. Pure function of (G, cfg, the sequence of membership answers).
/// With `naive` set, every iteration rebuilds the pruned working graph and
/// selects through geometry::select_vertex; the default path maintains the
/// same selection incrementally and produces an identical trace.
RoundOutcome run_round(const Multihypergraph& g, const RoundConfig& cfg,
                       const MembershipOracle& oracle, bool naive = false);

std::string trace_to_json(const RoundOutcome& outcome);

}  // namespace hcl
