#include "hcl/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcl/generators.hpp"

namespace hcl {

namespace {

bool contains_set(const std::vector<char>& member, const VertexSet& set) {
    for (int v : set)
        if (!member[static_cast<std::size_t>(v)]) return false;
    return true;
}

struct Enumerator {
    const std::vector<VertexSet>* edge_sets;
    int n = 0;
    bool maximal_only = false;
    std::size_t limit = 0;
    std::vector<char> member;
    IndependentSets out;

    bool independent() const {
        for (const auto& edge : *edge_sets)
            if (contains_set(member, edge)) return false;
        return true;
    }

    bool maximal() const {
        for (int v = 0; v < n; ++v) {
            if (member[static_cast<std::size_t>(v)]) continue;
            bool extends = true;
            for (const auto& edge : *edge_sets) {
                bool all = true;
                for (int u : edge) {
                    if (u != v && !member[static_cast<std::size_t>(u)]) { all = false; break; }
                }
                if (all && std::binary_search(edge.begin(), edge.end(), v)) { extends = false; break; }
            }
            if (extends) return false;
        }
        return true;
    }

    void emit() {
        if (!out.complete) return;
        if (maximal_only && !maximal()) return;
        if (out.sets.size() >= limit) {
            out.complete = false;
            return;
        }
        VertexSet set;
        for (int v = 0; v < n; ++v)
            if (member[static_cast<std::size_t>(v)]) set.push_back(v);
        out.sets.push_back(std::move(set));
    }

    void recurse(int v) {
        if (!out.complete) return;
        if (v == n) {
            emit();
            return;
        }
        member[static_cast<std::size_t>(v)] = 1;
        if (independent_prefix(v)) recurse(v + 1);
        member[static_cast<std::size_t>(v)] = 0;
        recurse(v + 1);
    }

    /// Prune as soon as some edge lies fully within the decided prefix.
    bool independent_prefix(int decided_up_to) const {
        for (const auto& edge : *edge_sets) {
            if (edge.back() > decided_up_to) continue;
            if (contains_set(member, edge)) return false;
        }
        return true;
    }
};

}  // namespace

IndependentSets enumerate_independent_sets(const Multihypergraph& h, bool maximal_only,
                                           const EnumerationCap& cap) {
    std::vector<VertexSet> edge_sets;
    for (const auto& [edge, mult] : h.edges()) edge_sets.push_back(edge);
    Enumerator e;
    e.edge_sets = &edge_sets;
    e.n = h.vertex_count();
    e.maximal_only = maximal_only;
    e.limit = cap.limit;
    e.member.assign(static_cast<std::size_t>(h.vertex_count()), 0);
    e.recurse(0);
    return std::move(e.out);
}

CoverReport verify_cover(const std::vector<VertexSet>& containers, const Multihypergraph& h,
                         const EnumerationCap& cap) {
    CoverReport report;
    report.container_count = containers.size();
    IndependentSets maximal = enumerate_independent_sets(h, true, cap);
    report.complete = maximal.complete;
    report.total_maximal = maximal.sets.size();
    for (const auto& set : maximal.sets) {
        bool covered = false;
        for (const auto& container : containers)
            if (is_subset(set, container)) { covered = true; break; }
        if (covered) {
            ++report.covered;
        } else if (report.uncovered.size() < 32) {
            report.uncovered.push_back(set);
        }
    }
    return report;
}

MonoCliqueCounts count_mono_cliques(int big_n, int n, int k,
                                    const std::vector<int>& edge_colours) {
    const std::size_t pairs = static_cast<std::size_t>(big_n) * (big_n - 1) / 2;
    if (edge_colours.size() != pairs)
        throw std::invalid_argument("count_mono_cliques: colouring must cover every edge");
    for (int c : edge_colours)
        if (c < 1 || c > k + 1)
            throw std::invalid_argument("count_mono_cliques: colour out of range");
    MonoCliqueCounts counts{0, 0};
    for (int c : edge_colours)
        if (c == k + 1) ++counts.special_colour_edges;
    for_each_subset(full_vertex_set(big_n), n, [&](const VertexSet& clique) {
        int colour = 0;
        bool mono = true;
        for (std::size_t a = 0; a < clique.size() && mono; ++a) {
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                const int c =
                    edge_colours[static_cast<std::size_t>(pair_index(clique[a], clique[b], big_n))];
                if (colour == 0) colour = c;
                if (c != colour || c == k + 1) { mono = false; break; }
            }
        }
        if (mono) ++counts.monochromatic_cliques;
    });
    return counts;
}

namespace {

struct HittingSearch {
    const std::vector<VertexSet>* ranges;
    std::size_t best;
    VertexSet best_net;
    VertexSet current;

    void recurse(std::vector<char>& hit, std::size_t hit_count) {
        if (current.size() >= best) return;  // cannot improve
        if (hit_count == ranges->size()) {
            best = current.size();
            best_net = current;
            std::sort(best_net.begin(), best_net.end());
            return;
        }
        // Branch on the elements of the first unhit range.
        std::size_t target = 0;
        while (hit[target]) ++target;
        for (int v : (*ranges)[target]) {
            std::vector<char> next_hit = hit;
            std::size_t next_count = hit_count;
            for (std::size_t i = 0; i < ranges->size(); ++i) {
                if (next_hit[i]) continue;
                if (std::binary_search((*ranges)[i].begin(), (*ranges)[i].end(), v)) {
                    next_hit[i] = 1;
                    ++next_count;
                }
            }
            current.push_back(v);
            recurse(next_hit, next_count);
            current.pop_back();
        }
    }
};

}  // namespace

EpsNetResult min_eps_net(const VertexSet& points, const std::vector<VertexSet>& ranges,
                         const Rational& eps) {
    std::vector<VertexSet> qualifying;
    const Rational threshold = eps * Rational(static_cast<long>(points.size()));
    for (const auto& range : ranges) {
        if (Rational(static_cast<long>(range.size())) >= threshold) {
            VertexSet sorted = range;
            std::sort(sorted.begin(), sorted.end());
            qualifying.push_back(std::move(sorted));
        }
    }
    EpsNetResult result;
    if (qualifying.empty()) return result;
    HittingSearch search;
    search.ranges = &qualifying;
    search.best = points.size() + 1;
    std::vector<char> hit(qualifying.size(), 0);
    search.recurse(hit, 0);
    result.size = search.best;
    result.net = std::move(search.best_net);
    return result;
}

}  // namespace hcl
