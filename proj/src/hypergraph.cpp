#include "hcl/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace hcl {

VertexSet make_vertex_set(std::vector<int> vertices, int vertex_count) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices) {
        if (v < 0 || v >= vertex_count)
            throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    }
    return vertices;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet full_vertex_set(int vertex_count) {
    VertexSet r(static_cast<std::size_t>(vertex_count));
    for (int i = 0; i < vertex_count; ++i) r[static_cast<std::size_t>(i)] = i;
    return r;
}

void for_each_subset(const VertexSet& base, int k,
                     const std::function<void(const VertexSet&)>& fn) {
    const int n = static_cast<int>(base.size());
    if (k < 0 || k > n) return;
    VertexSet current(static_cast<std::size_t>(k));
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (int i = 0; i < k; ++i)
            current[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        fn(current);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

Multihypergraph::Multihypergraph(int uniformity, int vertex_count)
    : uniformity_(uniformity), vertex_count_(vertex_count), edge_count_(0) {
    if (uniformity < 1) throw std::invalid_argument("uniformity must be positive");
    if (vertex_count < 1) throw std::invalid_argument("vertex_count must be positive");
}

void Multihypergraph::add_edge(VertexSet edge, BigInt multiplicity) {
    if (multiplicity < 1) throw std::invalid_argument("edge multiplicity must be >= 1");
    edge = make_vertex_set(std::move(edge), vertex_count_);
    if (static_cast<int>(edge.size()) != uniformity_)
        throw std::invalid_argument("edge has wrong uniformity");
    edges_[std::move(edge)] += multiplicity;
    edge_count_ += multiplicity;
}

BigInt degree(const Multihypergraph& h, const VertexSet& t) {
    const VertexSet key = make_vertex_set(t, h.vertex_count());
    if (static_cast<int>(key.size()) > h.uniformity())
        throw std::invalid_argument("degree: |T| exceeds uniformity");
    BigInt d = 0;
    for (const auto& [edge, mult] : h.edges())
        if (is_subset(key, edge)) d += mult;
    return d;
}

std::vector<BigInt> vertex_degrees(const Multihypergraph& h) {
    std::vector<BigInt> deg(static_cast<std::size_t>(h.vertex_count()), BigInt(0));
    for (const auto& [edge, mult] : h.edges())
        for (int v : edge) deg[static_cast<std::size_t>(v)] += mult;
    return deg;
}

BigInt max_degree_t(const Multihypergraph& h, int t) {
    if (h.empty()) throw std::domain_error("max_degree_t: empty hypergraph");
    if (t < 1 || t > h.uniformity()) throw std::invalid_argument("max_degree_t: t out of range");
    std::map<VertexSet, BigInt> deg;
    for (const auto& [edge, mult] : h.edges())
        for_each_subset(edge, t, [&](const VertexSet& sub) { deg[sub] += mult; });
    BigInt best = 0;
    for (const auto& [sub, d] : deg)
        if (d > best) best = d;
    return best;
}

Multihypergraph link(const Multihypergraph& h, int v) {
    if (h.uniformity() < 2) throw std::domain_error("link: uniformity must be >= 2");
    if (v < 0 || v >= h.vertex_count()) throw std::out_of_range("link: vertex out of range");
    Multihypergraph result(h.uniformity() - 1, h.vertex_count());
    for (const auto& [edge, mult] : h.edges()) {
        if (!std::binary_search(edge.begin(), edge.end(), v)) continue;
        VertexSet reduced;
        reduced.reserve(edge.size() - 1);
        for (int u : edge)
            if (u != v) reduced.push_back(u);
        result.add_edge(std::move(reduced), mult);
    }
    return result;
}

Multihypergraph restrict_to(const Multihypergraph& h, const VertexSet& w) {
    const VertexSet key = make_vertex_set(w, h.vertex_count());
    Multihypergraph result(h.uniformity(), h.vertex_count());
    for (const auto& [edge, mult] : h.edges())
        if (is_subset(edge, key)) result.add_edge(edge, mult);
    return result;
}

Multihypergraph union_scale(const Multihypergraph& h1, const Multihypergraph& h2,
                            const BigInt& k1, const BigInt& k2) {
    if (h1.uniformity() != h2.uniformity() || h1.vertex_count() != h2.vertex_count())
        throw std::invalid_argument("union_scale: uniformity or vertex_count mismatch");
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("union_scale: factors must be >= 1");
    Multihypergraph result(h1.uniformity(), h1.vertex_count());
    for (const auto& [edge, mult] : h1.edges()) result.add_edge(edge, mult * k1);
    for (const auto& [edge, mult] : h2.edges()) result.add_edge(edge, mult * k2);
    return result;
}

bool is_independent(const Multihypergraph& h, const VertexSet& independent_set) {
    const VertexSet key = make_vertex_set(independent_set, h.vertex_count());
    for (const auto& [edge, mult] : h.edges())
        if (is_subset(edge, key)) return false;
    return true;
}

Rational hat_delta_1(const Multihypergraph& h) {
    if (h.empty()) throw std::domain_error("hat_delta_1: empty hypergraph");
    BigInt sum_sq = 0;
    for (const BigInt& d : vertex_degrees(h)) sum_sq += d * d;
    return Rational(sum_sq, BigInt(h.uniformity()) * h.edge_count());
}

Multihypergraph prune_max_degree(const Multihypergraph& h, const Rational& max_degree_ratio) {
    if (h.empty()) throw std::domain_error("prune_max_degree: empty hypergraph");
    if (max_degree_ratio < Rational(h.uniformity()))
        throw std::invalid_argument("prune_max_degree: ratio below uniformity");
    const Rational threshold = max_degree_ratio * hat_delta_1(h);
    const auto deg = vertex_degrees(h);
    std::vector<bool> high(static_cast<std::size_t>(h.vertex_count()), false);
    for (int v = 0; v < h.vertex_count(); ++v)
        high[static_cast<std::size_t>(v)] = Rational(deg[static_cast<std::size_t>(v)]) > threshold;
    Multihypergraph result(h.uniformity(), h.vertex_count());
    for (const auto& [edge, mult] : h.edges()) {
        bool keep = true;
        for (int v : edge)
            if (high[static_cast<std::size_t>(v)]) { keep = false; break; }
        if (keep) result.add_edge(edge, mult);
    }
    return result;
}

Multihypergraph prune_min_degree(const Multihypergraph& h, const Rational& beta) {
    if (h.empty()) throw std::domain_error("prune_min_degree: empty hypergraph");
    if (!(beta > Rational(0)) || beta > Rational(1))
        throw std::invalid_argument("prune_min_degree: beta must lie in (0, 1]");
    // Threshold fixed from the input's e(H); deg < threshold iff
    // deg * den * |V| < beta_num * e(H) with all factors positive.
    const BigInt lhs_scale = beta.den() * h.vertex_count();
    const BigInt rhs = beta.num() * h.edge_count();

    std::vector<std::pair<VertexSet, BigInt>> alive(h.edges().begin(), h.edges().end());
    std::vector<BigInt> deg = vertex_degrees(h);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<bool> low(static_cast<std::size_t>(h.vertex_count()), false);
        for (int v = 0; v < h.vertex_count(); ++v) {
            const BigInt& d = deg[static_cast<std::size_t>(v)];
            if (d > 0 && d * lhs_scale < rhs) low[static_cast<std::size_t>(v)] = true;
        }
        std::vector<std::pair<VertexSet, BigInt>> next;
        next.reserve(alive.size());
        for (auto& [edge, mult] : alive) {
            bool dead = false;
            for (int v : edge)
                if (low[static_cast<std::size_t>(v)]) { dead = true; break; }
            if (dead) {
                changed = true;
                for (int v : edge) deg[static_cast<std::size_t>(v)] -= mult;
            } else {
                next.emplace_back(std::move(edge), std::move(mult));
            }
        }
        alive = std::move(next);
    }
    Multihypergraph result(h.uniformity(), h.vertex_count());
    for (auto& [edge, mult] : alive) result.add_edge(std::move(edge), std::move(mult));
    return result;
}

SupersaturationResult delta1_supersaturate_on(const Multihypergraph& h, const Rational& beta,
                                              const BigInt& min_edges, const VertexSet& domain) {
    if (beta <= Rational(0)) throw std::invalid_argument("delta1_supersaturate: beta must be positive");
    if (min_edges < 1) throw std::invalid_argument("delta1_supersaturate: min_edges must be >= 1");
    if (domain.empty()) throw std::invalid_argument("delta1_supersaturate: empty domain");
    const BigInt cap =
        ceil_rational(Rational(BigInt(h.uniformity()) * min_edges) /
                      (beta * Rational(static_cast<long>(domain.size()))));

    Multihypergraph extracted(h.uniformity(), h.vertex_count());
    std::vector<BigInt> deg(static_cast<std::size_t>(h.vertex_count()), BigInt(0));
    BigInt total = 0;
    for (const auto& [edge, mult] : h.edges()) {
        if (!is_subset(edge, domain)) continue;
        BigInt room = cap;
        for (int v : edge) {
            const BigInt r = cap - deg[static_cast<std::size_t>(v)];
            if (r < room) room = r;
        }
        if (room <= 0) continue;
        const BigInt admit = room < mult ? room : mult;
        for (int v : edge) deg[static_cast<std::size_t>(v)] += admit;
        extracted.add_edge(edge, admit);
        total += admit;
    }
    SupersaturationResult result{std::move(extracted), total >= min_edges, {}};
    if (!result.succeeded) {
        VertexSet capped;
        for (int v : domain)
            if (deg[static_cast<std::size_t>(v)] == cap) capped.push_back(v);
        result.witness = set_difference(domain, capped);
    }
    return result;
}

Multihypergraph delta1_supersaturate(const Multihypergraph& h, const Rational& beta,
                                     const BigInt& min_edges) {
    auto result = delta1_supersaturate_on(h, beta, min_edges, full_vertex_set(h.vertex_count()));
    if (!result.succeeded)
        throw std::runtime_error(
            "delta1_supersaturate: capped subhypergraph has fewer than the requested edges "
            "(the robust-density precondition fails)");
    return std::move(result.extracted);
}

namespace {

nlohmann::json multiplicity_to_json(const BigInt& m) {
    if (m.fits_slong_p()) return nlohmann::json(m.get_si());
    return nlohmann::json(m.get_str());
}

BigInt multiplicity_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("hypergraph JSON: 'mult' must be an integer or string");
}

}  // namespace

std::string to_json(const Multihypergraph& h) {
    nlohmann::json j;
    j["uniformity"] = h.uniformity();
    j["vertex_count"] = h.vertex_count();
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [edge, mult] : h.edges()) {
        nlohmann::json e;
        e["set"] = edge;
        e["mult"] = multiplicity_to_json(mult);
        edges.push_back(std::move(e));
    }
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

Multihypergraph hypergraph_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    Multihypergraph h(j.at("uniformity").get<int>(), j.at("vertex_count").get<int>());
    for (const auto& e : j.at("edges")) {
        VertexSet set = e.at("set").get<std::vector<int>>();
        if (!std::is_sorted(set.begin(), set.end()) ||
            std::adjacent_find(set.begin(), set.end()) != set.end())
            throw std::invalid_argument("hypergraph JSON: edge sets must be sorted and duplicate-free");
        VertexSet key = set;
        const BigInt mult = multiplicity_from_json(e.at("mult"));
        if (h.edges().count(key))
            throw std::invalid_argument("hypergraph JSON: duplicate edge set");
        h.add_edge(std::move(set), mult);
    }
    return h;
}

}  // namespace hcl
