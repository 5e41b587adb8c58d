#include "hcl/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace hcl {

int pair_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n || i == j) throw std::out_of_range("pair_index: bad pair");
    // Pairs with first coordinate < i occupy (n-1) + ... + (n-i) slots.
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_from_index(int index, int n) {
    for (int i = 0; i < n - 1; ++i) {
        const int row = n - 1 - i;
        if (index < row) return {i, i + 1 + index};
        index -= row;
    }
    throw std::out_of_range("pair_from_index: index out of range");
}

Multihypergraph clique_hypergraph(int n, int r) {
    if (r < 2 || n < r + 1) throw std::invalid_argument("clique_hypergraph: need n >= r+1 >= 3");
    const int pairs = n * (n - 1) / 2;
    Multihypergraph h(r * (r + 1) / 2, pairs);
    VertexSet vertices = full_vertex_set(n);
    for_each_subset(vertices, r + 1, [&](const VertexSet& clique) {
        VertexSet edge;
        edge.reserve(static_cast<std::size_t>(r * (r + 1) / 2));
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                edge.push_back(pair_index(clique[a], clique[b], n));
        h.add_edge(std::move(edge));
    });
    return h;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int grid_point_index(int x, int y, int n) {
    if (x < 1 || x > n || y < 1 || y > n) throw std::out_of_range("grid_point_index: off grid");
    return (x - 1) * n + (y - 1);
}

namespace {

std::vector<std::vector<VertexSet>> build_lines(int m, int big_m, int n, int h_max) {
    std::vector<std::vector<VertexSet>> lines_by_h;
    lines_by_h.reserve(static_cast<std::size_t>(h_max));
    for (int h = 1; h <= h_max; ++h) {
        std::vector<VertexSet> lines;
        for (int x0 = 1; x0 + (m - 1) * h <= n; ++x0) {
            for (int y0 = 1; y0 <= big_m; ++y0) {
                VertexSet line;
                line.reserve(static_cast<std::size_t>(m));
                for (int t = 0; t < m; ++t)
                    line.push_back(grid_point_index(x0 + t * h, y0 + t * big_m, n));
                std::sort(line.begin(), line.end());
                lines.push_back(std::move(line));
            }
        }
        lines_by_h.push_back(std::move(lines));
    }
    return lines_by_h;
}

}  // namespace

std::vector<VertexSet> GridLineFamily::all_lines() const {
    std::vector<VertexSet> out;
    for (const auto& group : lines_by_h) out.insert(out.end(), group.begin(), group.end());
    return out;
}

std::pair<GridLineFamily, Multihypergraph> grid_lines_hypergraph(int m, int big_m, int s,
                                                                 int h_max_override) {
    if (!is_prime(big_m)) throw std::invalid_argument("grid_lines_hypergraph: M must be prime");
    if (s < 2 || s > m) throw std::invalid_argument("grid_lines_hypergraph: need 2 <= s <= m");
    const int n = m * big_m;
    int h_max = h_max_override > 0 ? h_max_override : n / (10 * m);
    if (h_max < 1)
        throw std::invalid_argument(
            "grid_lines_hypergraph: default h_max is zero at this scale; pass an override");
    GridLineFamily family;
    family.m = m;
    family.big_m = big_m;
    family.n = n;
    family.h_max = h_max;
    family.lines_by_h = build_lines(m, big_m, n, h_max);

    Multihypergraph h(s, n * n);
    for (const auto& group : family.lines_by_h)
        for (const auto& line : group)
            for_each_subset(line, s, [&](const VertexSet& sub) { h.add_edge(sub); });
    return {std::move(family), std::move(h)};
}

Multihypergraph folkman_hypergraph(int big_n, int n, int k) {
    if (n < 2 || big_n < n || k < 1) throw std::invalid_argument("folkman_hypergraph: bad range");
    const int pairs = big_n * (big_n - 1) / 2;
    Multihypergraph h(n * (n - 1) / 2, pairs * k);
    VertexSet vertices = full_vertex_set(big_n);
    for_each_subset(vertices, n, [&](const VertexSet& copy) {
        VertexSet base;
        base.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
        for (std::size_t a = 0; a < copy.size(); ++a)
            for (std::size_t b = a + 1; b < copy.size(); ++b)
                base.push_back(pair_index(copy[a], copy[b], big_n));
        for (int colour = 1; colour <= k; ++colour) {
            VertexSet edge;
            edge.reserve(base.size());
            for (int e : base) edge.push_back((colour - 1) * pairs + e);
            h.add_edge(std::move(edge));
        }
    });
    return h;
}

Multihypergraph induced_ramsey_hypergraph(int big_n, const SimpleGraph& h_graph, int k,
                                          bool keep_multiplicities) {
    const int n = h_graph.vertex_count;
    if (n < 2 || big_n < n || k < 1)
        throw std::invalid_argument("induced_ramsey_hypergraph: bad range");
    for (auto [a, b] : h_graph.edges)
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw std::invalid_argument("induced_ramsey_hypergraph: bad edge in pattern graph");
    const int pairs = big_n * (big_n - 1) / 2;
    Multihypergraph h(n * (n - 1) / 2, pairs * (k + 1));

    std::set<std::pair<int, int>> pattern;
    for (auto [a, b] : h_graph.edges) pattern.emplace(std::min(a, b), std::max(a, b));

    std::set<VertexSet> seen;
    std::vector<int> image(static_cast<std::size_t>(n));
    std::vector<int> pool(static_cast<std::size_t>(big_n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(big_n), false);

    // All injections [n] -> [N], depth-first.
    const std::function<void(int)> place = [&](int depth) {
        if (depth == n) {
            for (int colour = 1; colour <= k; ++colour) {
                VertexSet edge;
                edge.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
                for (int a = 0; a < n; ++a) {
                    for (int b = a + 1; b < n; ++b) {
                        const int pe = pair_index(image[static_cast<std::size_t>(a)],
                                                  image[static_cast<std::size_t>(b)], big_n);
                        const bool in_pattern = pattern.count({a, b}) > 0;
                        edge.push_back(in_pattern ? colour * pairs + pe : pe);
                    }
                }
                std::sort(edge.begin(), edge.end());
                if (!keep_multiplicities) {
                    if (!seen.insert(edge).second) continue;
                }
                h.add_edge(std::move(edge));
            }
            return;
        }
        for (int v = 0; v < big_n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            image[static_cast<std::size_t>(depth)] = v;
            place(depth + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    place(0);
    return h;
}

Multihypergraph random_hypergraph(int v, int s, int edge_count, std::uint64_t seed) {
    if (v < 1 || s < 1 || s > v || edge_count < 0)
        throw std::invalid_argument("random_hypergraph: bad parameters");
    if (Rational(binomial(v, s)) < Rational(static_cast<long>(edge_count)))
        throw std::invalid_argument("random_hypergraph: more edges than distinct sets");
    Multihypergraph h(s, v);
    std::mt19937_64 rng(seed);
    std::set<VertexSet> chosen;
    std::vector<int> pool(static_cast<std::size_t>(v));
    std::iota(pool.begin(), pool.end(), 0);
    while (static_cast<int>(chosen.size()) < edge_count) {
        // Partial Fisher-Yates: the first s entries become the candidate set.
        for (int i = 0; i < s; ++i) {
            std::uniform_int_distribution<int> pick(i, v - 1);
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
        }
        VertexSet edge(pool.begin(), pool.begin() + s);
        std::sort(edge.begin(), edge.end());
        if (chosen.insert(edge).second) h.add_edge(std::move(edge));
    }
    return h;
}

}  // namespace hcl
