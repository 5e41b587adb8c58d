#pragma once

#include "hcl/round.hpp"

namespace hcl {

struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact evaluation of
///   300 s^4 sum_t binom(s-1,t-1) (5000 s^3 / p)^{t-1} |sigma^(t)|^2
///     <= 1/(delta v(H)) <= p/500,
/// with every side carried as a rational.
struct MainHypothesisReport {
    bool satisfied = false;
    Rational weighted_sum;  // left side
    Rational middle;        // 1 / (delta v(H))
    Rational right;         // p / 500
    bool left_ok = false;
    bool right_ok = false;
};

MainHypothesisReport check_hypothesis_main(const Multihypergraph& h, const Rational& p,
                                           const Rational& delta);

/// Exact check of q v(H) >= 10^8 s^6 K and, for every t,
/// Delta_t(H) <= K (q / (10^6 s^5))^{t-1} e(H)/v(H).
struct SimpleHypothesisReport {
    bool satisfied = false;
    Rational size_left;   // q v(H)
    Rational size_right;  // 10^8 s^6 K
    bool size_ok = false;
    std::vector<Rational> degree_left;   // Delta_t
    std::vector<Rational> degree_right;  // per-t bound
    std::vector<bool> degree_ok;
};

SimpleHypothesisReport check_hypothesis_simple(const Multihypergraph& h, const Rational& q,
                                               const Rational& k_param);

/// Output of the multi-round construction: the fingerprint g(I), the
/// complement payload f*(I), and the full per-round traces. Structurally,
/// g(I) is a subset of I and I is contained in g(I) u f*(I), whether or not
/// the quantitative hypothesis held.
struct FingerprintResult {
    VertexSet fingerprint;       // g(I)
    VertexSet f_star;            // f*(I)
    int rounds_used = 0;         // rounds actually executed
    bool stopped_by_prune = false;
    std::vector<RoundOutcome> rounds;
    Rational p;      // derived or passed parameters, recorded for audits
    Rational delta;
    Rational eps;    // 1/(10s)
};

/// Runs rounds r = s-1 down to 1 with eps = 1/(10s) and the alpha schedule.
/// Without `forced`, the main hypothesis must pass. An empty intermediate
/// hypergraph short-circuits the remaining rounds (every subsequent level is
/// empty and the terminal payload is all of V).
FingerprintResult build_fingerprint(const Multihypergraph& h, const Rational& p,
                                    const Rational& delta, const MembershipOracle& oracle,
                                    bool forced);

/// The headline parameterization: p = q/(30 s^2) and delta = (10^3 s^4 K)^{-1}.
FingerprintResult main_simple(const Multihypergraph& h, const Rational& q, const Rational& k_param,
                              const MembershipOracle& oracle, bool forced);

VertexSet container_of(const FingerprintResult& result);

struct ContainerLeaf {
    VertexSet fingerprint;  // g
    VertexSet container;    // g u f*(g)
};

struct EnumerationResult {
    std::vector<ContainerLeaf> leaves;
    bool complete = true;
};

/// Materializes the container family by depth-first exploration of the
/// membership-answer tree. Answers are per vertex (a vertex queried in a
/// later round keeps its earlier answer), "yes" branches that would make the
/// fingerprint dependent are pruned, and every leaf is the run for I = its
/// yes-set. Containers depend only on the fingerprint.
EnumerationResult enumerate_containers(const Multihypergraph& h, const Rational& q,
                                       const Rational& k_param, bool forced,
                                       std::size_t leaf_limit);

struct ContainerNode {
    VertexSet set;
    bool leaf = false;
    bool good = false;  // has a size or sparsity witness
    enum class Witness { none, small, sparse, stalled } witness = Witness::none;
    VertexSet witness_w;  // populated for sparse witnesses
    std::vector<ContainerNode> children;
};

struct PackagedLimits {
    std::size_t max_nodes = 100000;
    std::size_t leaves_per_expansion = 100000;
};

struct ContainerTree {
    ContainerNode root;
    std::size_t node_count = 0;
    Rational alpha, beta, q;
    BigInt min_edges;  // E
    bool params_ok = false;  // both parameter constraints hold
    Rational size_left, size_right;    // alpha beta q v(H) vs 10^9 s^7
    Rational ratio_left, ratio_right;  // 10^4 s^5 q vs beta
};

/// Recursive container family: the root is V(H); a node C that is not yet a
/// good container is expanded through the capped-subhypergraph extraction
/// (domain C, cap from |C|) followed by container enumeration with
/// K = 2s/beta, children being the containers intersected with C. In forced
/// mode a node whose expansion returns C itself becomes a `stalled` leaf;
/// covering is preserved because the node still contains everything below it.
ContainerTree packaged_containers(const Multihypergraph& h, const Rational& alpha,
                                  const Rational& beta, const Rational& q, const BigInt& min_edges,
                                  bool forced, const PackagedLimits& limits);

std::vector<VertexSet> tree_leaves(const ContainerTree& tree);

std::string tree_to_json(const ContainerTree& tree);

}  // namespace hcl
