#include "hcl/round.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include <json.hpp>

namespace hcl {

RoundConfig RoundConfig::make(const Multihypergraph& g, const Rational& eps, const Rational& p,
                              AlphaWeights alpha) {
    if (g.empty()) throw std::domain_error("RoundConfig: empty hypergraph");
    if (g.uniformity() < 2)
        throw std::invalid_argument("RoundConfig: G must be (r+1)-uniform with r >= 1");
    const int r = g.uniformity() - 1;
    if (alpha.r() != r) throw std::invalid_argument("RoundConfig: alpha must have length r");
    if (!(eps > Rational(0)) || !(eps < Rational(1, 9L * r)))
        throw std::invalid_argument("RoundConfig: eps out of range (0, 1/(9r))");
    if (!(p > Rational(0)) || !(p < Rational(1)))
        throw std::invalid_argument("RoundConfig: p out of range (0, 1)");
    RoundConfig cfg;
    cfg.eps = eps;
    cfg.p = p;
    cfg.alpha = std::move(alpha);
    cfg.a = Rational(25) / (eps * eps);
    cfg.b = ceil_rational(Rational(2) * p * Rational(g.vertex_count()) / eps);
    const Rational shrink = Rational(1) - Rational(3) * eps;
    cfg.sigma_sq = alpha_norm_sq(g, cfg.alpha) / (shrink * shrink);
    return cfg;
}

ScalingChoice choose_scaling(const Multihypergraph& g, const Rational& a) {
    if (g.empty()) throw std::domain_error("choose_scaling: empty hypergraph");
    if (g.uniformity() < 2)
        throw std::invalid_argument("choose_scaling: G must be (r+1)-uniform with r >= 1");
    const int r = g.uniformity() - 1;
    const Rational base = a * hat_delta_1(g) / Rational(binomial(g.vertex_count(), r));
    for (BigInt k = 1;; ++k) {
        const Rational lower = base * Rational(k);
        const Rational upper = Rational(2) * lower;
        BigInt m = ceil_rational(lower);
        if (m < 1) m = 1;
        if (Rational(m) <= upper) return {k, m};
    }
}

SeededAccumulator::SeededAccumulator(int vertex_count, int r, BigInt seed_multiplicity,
                                     AlphaWeights alpha)
    : n_(vertex_count), r_(r), m_(std::move(seed_multiplicity)), alpha_(std::move(alpha)) {
    if (r_ < 1) throw std::invalid_argument("SeededAccumulator: r must be >= 1");
    if (n_ < r_) throw std::invalid_argument("SeededAccumulator: vertex count below uniformity");
    if (m_ < 1) throw std::invalid_argument("SeededAccumulator: seed multiplicity must be >= 1");
    if (alpha_.r() != r_) throw std::invalid_argument("SeededAccumulator: alpha must have length r");
    seed_total_ = m_ * binomial(n_, r_);
    explicit_total_ = 0;
    total_ = seed_total_;
    deg_.resize(static_cast<std::size_t>(r_));
    q_.assign(static_cast<std::size_t>(r_), BigInt(0));
    c_.resize(static_cast<std::size_t>(r_));
    choose_rt_.resize(static_cast<std::size_t>(r_));
    choose_nt_.resize(static_cast<std::size_t>(r_));
    for (int t = 1; t <= r_; ++t) {
        c_[static_cast<std::size_t>(t - 1)] = binomial(n_ - t, r_ - t);
        choose_rt_[static_cast<std::size_t>(t - 1)] = binomial(r_, t);
        choose_nt_[static_cast<std::size_t>(t - 1)] = binomial(n_, t);
    }
}

SeededAccumulator::Delta SeededAccumulator::collect(
    const std::vector<std::pair<VertexSet, BigInt>>& link_edges) const {
    Delta delta;
    delta.by_t.resize(static_cast<std::size_t>(r_));
    for (const auto& [edge, mult] : link_edges) {
        if (static_cast<int>(edge.size()) != r_)
            throw std::invalid_argument("SeededAccumulator: link edge has wrong uniformity");
        delta.mass += mult;
        for (int t = 1; t <= r_; ++t) {
            auto& bucket = delta.by_t[static_cast<std::size_t>(t - 1)];
            const BigInt& m = mult;
            for_each_subset(edge, t, [&](const VertexSet& sub) { bucket[sub] += m; });
        }
    }
    return delta;
}

Rational SeededAccumulator::norm_sq_from(int t, const BigInt& q_t, const BigInt& total) const {
    const std::size_t i = static_cast<std::size_t>(t - 1);
    const BigInt seed_entry = m_ * c_[i];
    const BigInt numerator = q_t + choose_nt_[i] * seed_entry * seed_entry;
    const BigInt scale = choose_rt_[i] * total;
    return Rational(numerator, scale * scale);
}

Rational SeededAccumulator::sigma_norm_sq_t(int t) const {
    if (t < 1 || t > r_) throw std::invalid_argument("SeededAccumulator: t out of range");
    return norm_sq_from(t, q_[static_cast<std::size_t>(t - 1)], total_);
}

Rational SeededAccumulator::alpha_norm_sq() const {
    Rational sum(0);
    for (int t = 1; t <= r_; ++t) {
        if (alpha_.at(t).is_zero()) continue;
        sum += alpha_.at(t) * sigma_norm_sq_t(t);
    }
    return sum;
}

std::pair<BigInt, Rational> SeededAccumulator::peek_union(
    const std::vector<std::pair<VertexSet, BigInt>>& link_edges) const {
    const Delta delta = collect(link_edges);
    const BigInt new_total = total_ + delta.mass;
    Rational sum(0);
    for (int t = 1; t <= r_; ++t) {
        if (alpha_.at(t).is_zero()) continue;
        const std::size_t i = static_cast<std::size_t>(t - 1);
        BigInt q = q_[i];
        const BigInt two_seed = 2 * m_ * c_[i];
        const auto& current = deg_[i];
        for (const auto& [sub, added] : delta.by_t[i]) {
            auto it = current.find(sub);
            const BigInt& d = it == current.end() ? BigInt(0) : it->second;
            q += added * (two_seed + 2 * d + added);
        }
        sum += alpha_.at(t) * norm_sq_from(t, q, new_total);
    }
    return {new_total, sum};
}

void SeededAccumulator::add_link(const std::vector<std::pair<VertexSet, BigInt>>& link_edges) {
    Delta delta = collect(link_edges);
    for (int t = 1; t <= r_; ++t) {
        const std::size_t i = static_cast<std::size_t>(t - 1);
        const BigInt two_seed = 2 * m_ * c_[i];
        for (const auto& [sub, added] : delta.by_t[i]) {
            BigInt& d = deg_[i][sub];
            q_[i] += added * (two_seed + 2 * d + added);
            d += added;
        }
    }
    explicit_total_ += delta.mass;
    total_ += delta.mass;
}

BigInt SeededAccumulator::degree(const VertexSet& t_subset) const {
    const int t = static_cast<int>(t_subset.size());
    if (t > r_) throw std::invalid_argument("SeededAccumulator: |T| exceeds uniformity");
    BigInt seed = t == 0 ? seed_total_ : m_ * binomial(n_ - t, r_ - t);
    if (t == 0) return seed + explicit_total_;
    const auto& current = deg_[static_cast<std::size_t>(t - 1)];
    auto it = current.find(t_subset);
    return it == current.end() ? seed : seed + it->second;
}

Multihypergraph SeededAccumulator::explicit_part() const {
    Multihypergraph result(r_, n_);
    // For t = r, the explicit degree map is exactly the explicit edge map.
    for (const auto& [edge, mult] : deg_[static_cast<std::size_t>(r_ - 1)])
        result.add_edge(edge, mult);
    return result;
}

namespace {

/// A^{(j)}: the scaled input graph under vertex-removal, with flat edge
/// storage and incremental degree bookkeeping.
struct WorkingGraph {
    int n = 0;
    std::vector<VertexSet> sets;
    std::vector<BigInt> mult;
    std::vector<bool> alive;
    std::vector<std::vector<int>> incident;
    std::vector<BigInt> deg;
    BigInt total = 0;
    std::map<BigInt, int> degree_hist;  // nonzero degrees only

    void hist_remove(const BigInt& d) {
        if (d == 0) return;
        auto it = degree_hist.find(d);
        if (--(it->second) == 0) degree_hist.erase(it);
    }
    void hist_add(const BigInt& d) {
        if (d == 0) return;
        ++degree_hist[d];
    }

    void init(const Multihypergraph& g, const BigInt& scale) {
        n = g.vertex_count();
        incident.assign(static_cast<std::size_t>(n), {});
        deg.assign(static_cast<std::size_t>(n), BigInt(0));
        for (const auto& [edge, m] : g.edges()) {
            const int idx = static_cast<int>(sets.size());
            sets.push_back(edge);
            mult.push_back(m * scale);
            alive.push_back(true);
            for (int v : edge) {
                incident[static_cast<std::size_t>(v)].push_back(idx);
                deg[static_cast<std::size_t>(v)] += mult.back();
            }
            total += mult.back();
        }
        for (const auto& d : deg) hist_add(d);
    }

    /// Kills every alive edge through v; returns the other endpoints touched.
    std::vector<int> remove_vertex_edges(int v) {
        std::vector<int> touched;
        for (int idx : incident[static_cast<std::size_t>(v)]) {
            if (!alive[static_cast<std::size_t>(idx)]) continue;
            alive[static_cast<std::size_t>(idx)] = false;
            total -= mult[static_cast<std::size_t>(idx)];
            for (int u : sets[static_cast<std::size_t>(idx)]) {
                hist_remove(deg[static_cast<std::size_t>(u)]);
                deg[static_cast<std::size_t>(u)] -= mult[static_cast<std::size_t>(idx)];
                hist_add(deg[static_cast<std::size_t>(u)]);
                if (u != v) touched.push_back(u);
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        return touched;
    }

    /// Smallest nonzero degree, or 0 when there are no edges.
    BigInt min_nonzero_degree() const {
        return degree_hist.empty() ? BigInt(0) : degree_hist.begin()->first;
    }
};

/// The min-degree peel of Fact-style pruning applied to a WorkingGraph,
/// threshold fixed from the graph's current edge count. Produces alive
/// flags and degrees of the pruned view.
struct PrunedView {
    const WorkingGraph* base = nullptr;
    bool identity = true;                 // view == base, no peeling happened
    std::vector<bool> alive;              // used when !identity
    std::vector<BigInt> deg;              // used when !identity

    bool edge_alive(int idx) const {
        return identity ? base->alive[static_cast<std::size_t>(idx)]
                        : alive[static_cast<std::size_t>(idx)];
    }
    const BigInt& degree_of(int v) const {
        return identity ? base->deg[static_cast<std::size_t>(v)]
                        : deg[static_cast<std::size_t>(v)];
    }

    std::vector<std::pair<VertexSet, BigInt>> link_edges(int v) const {
        std::vector<std::pair<VertexSet, BigInt>> out;
        for (int idx : base->incident[static_cast<std::size_t>(v)]) {
            if (!edge_alive(idx)) continue;
            const VertexSet& edge = base->sets[static_cast<std::size_t>(idx)];
            VertexSet reduced;
            reduced.reserve(edge.size() - 1);
            for (int u : edge)
                if (u != v) reduced.push_back(u);
            out.emplace_back(std::move(reduced), base->mult[static_cast<std::size_t>(idx)]);
        }
        return out;
    }
};

PrunedView make_pruned_view(const WorkingGraph& a, const Rational& beta) {
    PrunedView view;
    view.base = &a;
    // Fast path: no vertex falls below beta * e(A) / n, so the peel is empty.
    // min_deg >= beta * e / n  <=>  min_deg * den * n >= num * e.
    const BigInt min_deg = a.min_nonzero_degree();
    if (min_deg * beta.den() * a.n >= beta.num() * a.total) return view;

    view.identity = false;
    view.alive = a.alive;
    view.deg = a.deg;
    const BigInt lhs_scale = beta.den() * a.n;
    const BigInt rhs = beta.num() * a.total;  // threshold from the input's count
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<bool> low(static_cast<std::size_t>(a.n), false);
        for (int v = 0; v < a.n; ++v) {
            const BigInt& d = view.deg[static_cast<std::size_t>(v)];
            if (d > 0 && d * lhs_scale < rhs) low[static_cast<std::size_t>(v)] = true;
        }
        for (std::size_t idx = 0; idx < a.sets.size(); ++idx) {
            if (!view.alive[idx]) continue;
            bool dead = false;
            for (int u : a.sets[idx])
                if (low[static_cast<std::size_t>(u)]) { dead = true; break; }
            if (!dead) continue;
            view.alive[idx] = false;
            changed = true;
            for (int u : a.sets[idx]) view.deg[static_cast<std::size_t>(u)] -= a.mult[idx];
        }
    }
    return view;
}

Multihypergraph materialize(const WorkingGraph& a, const PrunedView& view, int uniformity) {
    Multihypergraph out(uniformity, a.n);
    for (std::size_t idx = 0; idx < a.sets.size(); ++idx)
        if (view.edge_alive(static_cast<int>(idx))) out.add_edge(a.sets[idx], a.mult[idx]);
    return out;
}

struct HeapEntry {
    Rational key;
    int vertex;
    std::uint64_t stamp;
    std::uint64_t epoch;
};

struct HeapOrder {
    // priority_queue keeps the largest on top; invert for a min-heap with
    // smallest (key, vertex) first.
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        if (a.key != b.key) return a.key > b.key;
        return a.vertex > b.vertex;
    }
};

}  // namespace

RoundOutcome run_round(const Multihypergraph& g, const RoundConfig& cfg,
                       const MembershipOracle& oracle, bool naive) {
    if (g.empty()) throw std::domain_error("run_round: empty hypergraph");
    if (g.uniformity() < 2)
        throw std::invalid_argument("run_round: G must be (r+1)-uniform with r >= 1");
    const int r = g.uniformity() - 1;
    const int n = g.vertex_count();
    if (cfg.alpha.r() != r || !(cfg.eps > Rational(0)) || !(cfg.eps < Rational(1, 9L * r)) ||
        !(cfg.p > Rational(0)) || !(cfg.p < Rational(1)) || cfg.b < 1)
        throw std::invalid_argument("run_round: invalid round configuration");

    RoundOutcome outcome;
    outcome.scaling = choose_scaling(g, cfg.a);
    outcome.alpha_used = cfg.alpha;
    const Rational sigma_g_sq = sigma_norm_sq(g, 1);
    outcome.hypothesis_satisfied =
        sigma_g_sq <= cfg.eps * cfg.eps * cfg.eps * cfg.p / Rational(50L * (r + 1));

    WorkingGraph a;
    a.init(g, outcome.scaling.k);
    const BigInt scaled_total = a.total;  // e(G) after scaling

    // Degree cap of the setup prune, applied once: drop all edges meeting
    // X = {v : deg(v) > (r+1)/eps * hatDelta_1(G)}.
    {
        const Rational threshold =
            Rational(r + 1) / cfg.eps * hat_delta_1(g) * Rational(outcome.scaling.k);
        std::vector<int> high;
        for (int v = 0; v < n; ++v)
            if (Rational(a.deg[static_cast<std::size_t>(v)]) > threshold) high.push_back(v);
        for (int v : high) a.remove_vertex_edges(v);
    }

    SeededAccumulator accumulator(n, r, outcome.scaling.m, cfg.alpha);
    outcome.seed_edge_count = accumulator.seed_edge_count();
    const Rational target_sq = (Rational(1) + cfg.eps) * cfg.sigma_sq;

    // Stop when e(A) < (1-2eps) e(G):  e(A) * den < (den - 2 num) * e(G).
    const BigInt stop_lhs_scale = cfg.eps.den();
    const BigInt stop_rhs = (cfg.eps.den() - 2 * cfg.eps.num()) * scaled_total;

    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapOrder> heap;
    std::vector<std::uint64_t> stamp(static_cast<std::size_t>(n), 0);
    std::uint64_t epoch = 0;
    bool rebuild = true;        // full objective rebuild required before selecting
    bool prev_peeled = false;   // last iteration's view differed from A

    const auto objective = [&](const PrunedView& view, int v) {
        const auto [count, nsq] = accumulator.peek_union(view.link_edges(v));
        return Rational(count) * (nsq - target_sq);
    };

    BigInt yes_count = 0;
    long j = 0;
    while (true) {
        if (yes_count == cfg.b || a.total * stop_lhs_scale < stop_rhs) break;

        PrunedView view = make_pruned_view(a, cfg.eps);
        int chosen;
        if (naive) {
            chosen = select_vertex(materialize(a, view, g.uniformity()), accumulator, target_sq);
        } else {
            if (!view.identity || prev_peeled) rebuild = true;
            if (rebuild) {
                ++epoch;
                heap = {};
                for (int v = 0; v < n; ++v) {
                    if (view.degree_of(v) == 0) continue;
                    heap.push({objective(view, v), v, stamp[static_cast<std::size_t>(v)], epoch});
                }
                rebuild = false;
            }
            while (true) {
                if (heap.empty())
                    throw std::logic_error("run_round: selection heap exhausted with edges left");
                const HeapEntry top = heap.top();
                heap.pop();
                if (top.epoch == epoch && top.stamp == stamp[static_cast<std::size_t>(top.vertex)]) {
                    chosen = top.vertex;
                    break;
                }
            }
        }
        prev_peeled = !view.identity;

        const bool member = oracle(chosen);
        outcome.queries.push_back({chosen, member, view.degree_of(chosen)});
        if (member) {
            outcome.yes_indices.push_back(j);
            accumulator.add_link(view.link_edges(chosen));
            ++yes_count;
            rebuild = true;  // every cached objective depends on the accumulator
        }

        const std::vector<int> touched = a.remove_vertex_edges(chosen);
        ++stamp[static_cast<std::size_t>(chosen)];
        for (int u : touched) ++stamp[static_cast<std::size_t>(u)];
        if (!naive && !rebuild && !prev_peeled) {
            // Fast path: only the touched links changed; refresh their entries
            // against the post-removal state, which is next iteration's view.
            PrunedView next;
            next.base = &a;
            for (int u : touched) {
                if (a.deg[static_cast<std::size_t>(u)] == 0) continue;
                heap.push({objective(next, u), u, stamp[static_cast<std::size_t>(u)], epoch});
            }
        }
        ++j;
    }

    outcome.total_queries = j;
    for (long idx : outcome.yes_indices)
        outcome.fingerprint.push_back(outcome.queries[static_cast<std::size_t>(idx)].vertex);
    std::sort(outcome.fingerprint.begin(), outcome.fingerprint.end());

    // Branch selection: pruned iff J >= eps^2/(r+1)^2 * |sigma_G|^{-2}.
    outcome.pruned =
        Rational(j) * Rational(static_cast<long>(r + 1) * (r + 1)) * sigma_g_sq >=
        cfg.eps * cfg.eps;
    if (outcome.pruned) {
        VertexSet queried;
        for (const auto& q : outcome.queries) queried.push_back(q.vertex);
        std::sort(queried.begin(), queried.end());
        outcome.container = set_difference(full_vertex_set(n), queried);
    } else {
        outcome.reduced = accumulator.explicit_part();
    }
    return outcome;
}

std::string trace_to_json(const RoundOutcome& outcome) {
    nlohmann::json j;
    nlohmann::json queries = nlohmann::json::array();
    nlohmann::json answers = nlohmann::json::array();
    nlohmann::json mass = nlohmann::json::array();
    for (const auto& q : outcome.queries) {
        queries.push_back(q.vertex);
        answers.push_back(q.member);
        mass.push_back(q.link_mass.get_str());
    }
    j["queries"] = std::move(queries);
    j["answers"] = std::move(answers);
    j["link_mass"] = std::move(mass);
    j["L"] = outcome.yes_indices;
    j["J"] = outcome.total_queries;
    j["fingerprint"] = outcome.fingerprint;
    j["branch"] = outcome.pruned ? "pruned" : "reduced";
    j["hypothesis"] = outcome.hypothesis_satisfied;
    j["scaling"] = {{"k", outcome.scaling.k.get_str()}, {"m", outcome.scaling.m.get_str()}};
    j["seed_edge_count"] = outcome.seed_edge_count.get_str();
    if (outcome.container) j["container"] = *outcome.container;
    return j.dump(2) + "\n";
}

}  // namespace hcl
