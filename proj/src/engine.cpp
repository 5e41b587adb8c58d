#include "hcl/engine.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace hcl {

MainHypothesisReport check_hypothesis_main(const Multihypergraph& h, const Rational& p,
                                           const Rational& delta) {
    if (h.empty()) throw std::domain_error("check_hypothesis_main: empty hypergraph");
    const int s = h.uniformity();
    MainHypothesisReport report;
    const Rational gamma_over_p = Rational(5000) * Rational(static_cast<long>(s)) *
                                  Rational(static_cast<long>(s)) * Rational(static_cast<long>(s)) / p;
    Rational sum(0);
    for (int t = 1; t <= s; ++t) {
        sum += Rational(binomial(s - 1, t - 1)) *
               pow_rational(gamma_over_p, static_cast<unsigned>(t - 1)) * sigma_norm_sq(h, t);
    }
    report.weighted_sum = Rational(300) * pow_rational(Rational(static_cast<long>(s)), 4) * sum;
    if (delta.is_zero() || delta.is_negative())
        throw std::invalid_argument("check_hypothesis_main: delta must be positive");
    report.middle = Rational(1) / (delta * Rational(h.vertex_count()));
    report.right = p / Rational(500);
    report.left_ok = report.weighted_sum <= report.middle;
    report.right_ok = report.middle <= report.right;
    report.satisfied = report.left_ok && report.right_ok;
    return report;
}

SimpleHypothesisReport check_hypothesis_simple(const Multihypergraph& h, const Rational& q,
                                               const Rational& k_param) {
    if (h.empty()) throw std::domain_error("check_hypothesis_simple: empty hypergraph");
    const int s = h.uniformity();
    SimpleHypothesisReport report;
    report.size_left = q * Rational(h.vertex_count());
    report.size_right =
        Rational(BigInt(100000000)) * pow_rational(Rational(static_cast<long>(s)), 6) * k_param;
    report.size_ok = report.size_left >= report.size_right;
    report.satisfied = report.size_ok;
    const Rational ratio = q / (Rational(BigInt(1000000)) *
                                pow_rational(Rational(static_cast<long>(s)), 5));
    const Rational density = Rational(h.edge_count()) / Rational(h.vertex_count());
    for (int t = 1; t <= s; ++t) {
        report.degree_left.emplace_back(max_degree_t(h, t));
        report.degree_right.push_back(k_param * pow_rational(ratio, static_cast<unsigned>(t - 1)) *
                                      density);
        report.degree_ok.push_back(report.degree_left.back() <= report.degree_right.back());
        if (!report.degree_ok.back()) report.satisfied = false;
    }
    return report;
}

FingerprintResult build_fingerprint(const Multihypergraph& h, const Rational& p,
                                    const Rational& delta, const MembershipOracle& oracle,
                                    bool forced) {
    if (h.empty()) throw std::domain_error("build_fingerprint: empty hypergraph");
    if (!forced) {
        const auto report = check_hypothesis_main(h, p, delta);
        if (!report.satisfied)
            throw HypothesisError("build_fingerprint: hypothesis fails (run forced to override)");
    }
    const int s = h.uniformity();
    FingerprintResult result;
    result.p = p;
    result.delta = delta;
    result.eps = schedule_eps(s);

    Multihypergraph current = h;
    VertexSet fingerprint;
    for (int r = s - 1; r >= 1; --r) {
        if (current.empty()) break;  // every lower level is empty as well
        const RoundConfig cfg = RoundConfig::make(current, result.eps, p, alpha_schedule(s, p, r));
        RoundOutcome outcome = run_round(current, cfg, oracle);
        fingerprint = set_union(fingerprint, outcome.fingerprint);
        ++result.rounds_used;
        const bool pruned = outcome.pruned;
        if (pruned) {
            result.f_star = *outcome.container;
            result.rounds.push_back(std::move(outcome));
            result.stopped_by_prune = true;
            result.fingerprint = std::move(fingerprint);
            return result;
        }
        Multihypergraph next = std::move(*outcome.reduced);
        outcome.reduced.reset();
        result.rounds.push_back(std::move(outcome));
        current = std::move(next);
    }

    // Terminal payload: the vertices whose singleton is absent from the
    // 1-uniform level (all of V when the chain died out).
    VertexSet support;
    if (!current.empty() && current.uniformity() == 1)
        for (const auto& [edge, mult] : current.edges()) support.push_back(edge.front());
    result.f_star = set_difference(full_vertex_set(h.vertex_count()), support);
    result.fingerprint = std::move(fingerprint);
    return result;
}

FingerprintResult main_simple(const Multihypergraph& h, const Rational& q, const Rational& k_param,
                              const MembershipOracle& oracle, bool forced) {
    if (h.empty()) throw std::domain_error("main_simple: empty hypergraph");
    const int s = h.uniformity();
    const Rational p = q / Rational(30L * s * s);
    const Rational delta =
        Rational(1) / (Rational(1000) * pow_rational(Rational(static_cast<long>(s)), 4) * k_param);
    return build_fingerprint(h, p, delta, oracle, forced);
}

VertexSet container_of(const FingerprintResult& result) {
    return set_union(result.fingerprint, result.f_star);
}

namespace {

/// Membership oracle backed by per-vertex decisions: prescribed answers are
/// replayed in order of first query; everything beyond the script answers
/// "no". Re-queried vertices keep their recorded answer, so every path is
/// consistent with the set of yes-vertices.
struct ScriptedOracle {
    const std::vector<bool>* script;
    std::map<int, bool> decided;
    std::vector<int> fresh_order;  // vertices in order of first query
    VertexSet yes_set;

    bool operator()(int v) {
        auto it = decided.find(v);
        if (it != decided.end()) return it->second;
        const std::size_t index = fresh_order.size();
        fresh_order.push_back(v);
        const bool answer = index < script->size() && (*script)[index];
        decided.emplace(v, answer);
        if (answer) {
            yes_set.push_back(v);
            std::sort(yes_set.begin(), yes_set.end());
        }
        return answer;
    }
};

}  // namespace

EnumerationResult enumerate_containers(const Multihypergraph& h, const Rational& q,
                                       const Rational& k_param, bool forced,
                                       std::size_t leaf_limit) {
    EnumerationResult result;
    std::vector<std::vector<bool>> pending;
    pending.push_back({});
    while (!pending.empty()) {
        const std::vector<bool> script = std::move(pending.back());
        pending.pop_back();
        if (result.leaves.size() >= leaf_limit) {
            result.complete = false;
            break;
        }
        ScriptedOracle oracle{&script, {}, {}, {}};
        FingerprintResult run = main_simple(
            h, q, k_param, [&oracle](int v) { return oracle(v); }, forced);
        result.leaves.push_back({run.fingerprint, container_of(run)});

        // Branch to "yes" at each fresh decision past the script, provided the
        // accumulated yes-set stays independent.
        VertexSet yes = oracle.yes_set;  // yes decisions all lie within the script
        for (std::size_t i = script.size(); i < oracle.fresh_order.size(); ++i) {
            const int v = oracle.fresh_order[i];
            VertexSet candidate = set_union(yes, VertexSet{v});
            if (!is_independent(h, candidate)) continue;
            std::vector<bool> extended(script);
            extended.resize(i, false);
            extended.push_back(true);
            pending.push_back(std::move(extended));
        }
    }
    return result;
}

namespace {

struct PackagedContext {
    const Multihypergraph* h;
    Rational beta;
    Rational q;
    BigInt min_edges;
    bool forced;
    const PackagedLimits* limits;
    Rational small_bound;  // alpha * v(H)
    std::size_t node_count = 0;
};

void expand_node(PackagedContext& ctx, ContainerNode& node) {
    if (++ctx.node_count > ctx.limits->max_nodes)
        throw LimitError("packaged_containers: node limit exceeded");

    if (Rational(static_cast<long>(node.set.size())) <= ctx.small_bound) {
        node.leaf = true;
        node.good = true;
        node.witness = ContainerNode::Witness::small;
        return;
    }

    const Multihypergraph induced = restrict_to(*ctx.h, node.set);
    if (induced.empty()) {
        // No edges at all inside C: C itself witnesses sparsity.
        node.leaf = true;
        node.good = true;
        node.witness = ContainerNode::Witness::sparse;
        node.witness_w = node.set;
        return;
    }
    auto extraction = delta1_supersaturate_on(induced, ctx.beta, ctx.min_edges, node.set);
    if (!extraction.succeeded) {
        node.leaf = true;
        node.good = true;
        node.witness = ContainerNode::Witness::sparse;
        node.witness_w = std::move(extraction.witness);
        return;
    }

    const int s = ctx.h->uniformity();
    const Rational k_param = Rational(2L * s) / ctx.beta;
    EnumerationResult enumeration = enumerate_containers(
        extraction.extracted, ctx.q, k_param, ctx.forced, ctx.limits->leaves_per_expansion);
    if (!enumeration.complete)
        throw LimitError("packaged_containers: leaf limit exceeded while expanding a node");

    std::set<VertexSet> child_sets;
    for (const auto& leaf : enumeration.leaves)
        child_sets.insert(set_intersection(leaf.container, node.set));
    if (child_sets.count(node.set)) {
        // Forced-mode artifact: some run's container does not shrink below C.
        node.leaf = true;
        node.good = false;
        node.witness = ContainerNode::Witness::stalled;
        return;
    }
    for (const auto& child : child_sets) {
        ContainerNode c;
        c.set = child;
        node.children.push_back(std::move(c));
    }
    for (auto& child : node.children) expand_node(ctx, child);
}

void collect_leaves(const ContainerNode& node, std::vector<VertexSet>& out) {
    if (node.leaf) {
        out.push_back(node.set);
        return;
    }
    for (const auto& child : node.children) collect_leaves(child, out);
}

nlohmann::json node_to_json(const ContainerNode& node) {
    nlohmann::json j;
    j["C"] = node.set;
    j["good"] = node.good;
    switch (node.witness) {
        case ContainerNode::Witness::none: j["witness_kind"] = nullptr; break;
        case ContainerNode::Witness::small: j["witness_kind"] = "small"; break;
        case ContainerNode::Witness::sparse: j["witness_kind"] = "sparse"; break;
        case ContainerNode::Witness::stalled: j["witness_kind"] = "stalled"; break;
    }
    if (node.witness == ContainerNode::Witness::sparse)
        j["witness_W"] = node.witness_w;
    else
        j["witness_W"] = nullptr;
    nlohmann::json children = nlohmann::json::array();
    for (const auto& child : node.children) children.push_back(node_to_json(child));
    j["children"] = std::move(children);
    return j;
}

}  // namespace

ContainerTree packaged_containers(const Multihypergraph& h, const Rational& alpha,
                                  const Rational& beta, const Rational& q, const BigInt& min_edges,
                                  bool forced, const PackagedLimits& limits) {
    if (h.empty()) throw std::domain_error("packaged_containers: empty hypergraph");
    if (Rational(min_edges) < Rational(h.vertex_count()))
        throw std::invalid_argument("packaged_containers: E must be at least v(H)");
    const int s = h.uniformity();
    ContainerTree tree;
    tree.alpha = alpha;
    tree.beta = beta;
    tree.q = q;
    tree.min_edges = min_edges;
    tree.size_left = alpha * beta * q * Rational(h.vertex_count());
    tree.size_right =
        Rational(BigInt(1000000000)) * pow_rational(Rational(static_cast<long>(s)), 7);
    tree.ratio_left = Rational(10000) * pow_rational(Rational(static_cast<long>(s)), 5) * q;
    tree.ratio_right = beta;
    tree.params_ok =
        tree.size_left >= tree.size_right && tree.ratio_left <= tree.ratio_right;
    if (!forced && !tree.params_ok)
        throw HypothesisError("packaged_containers: parameter constraints fail");

    PackagedContext ctx{&h, beta, q, min_edges, forced, &limits,
                        alpha * Rational(h.vertex_count()), 0};
    tree.root.set = full_vertex_set(h.vertex_count());
    expand_node(ctx, tree.root);
    tree.node_count = ctx.node_count;
    return tree;
}

std::vector<VertexSet> tree_leaves(const ContainerTree& tree) {
    std::vector<VertexSet> out;
    collect_leaves(tree.root, out);
    return out;
}

std::string tree_to_json(const ContainerTree& tree) {
    nlohmann::json j;
    j["params"] = {{"alpha", tree.alpha.str()},
                   {"beta", tree.beta.str()},
                   {"q", tree.q.str()},
                   {"E", tree.min_edges.get_str()}};
    j["hypothesis"] = {{"params_ok", tree.params_ok},
                       {"size_left", tree.size_left.str()},
                       {"size_right", tree.size_right.str()},
                       {"ratio_left", tree.ratio_left.str()},
                       {"ratio_right", tree.ratio_right.str()}};
    j["node_count"] = tree.node_count;
    j["tree"] = node_to_json(tree.root);
    return j.dump(2) + "\n";
}

}  // namespace hcl
