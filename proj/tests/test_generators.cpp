#include <doctest.h>

#include <set>

#include "hcl/generators.hpp"
#include "hcl/oracle.hpp"
#include "helpers.hpp"

using namespace hcl;
using testutil::list_degree;
using testutil::triangle_edge_sets;

TEST_CASE("pair indexing is lexicographic and invertible") {
    const int n = 7;
    int expected = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            CHECK(pair_index(i, j, n) == expected);
            CHECK(pair_from_index(expected, n) == std::pair<int, int>{i, j});
            ++expected;
        }
    CHECK(expected == n * (n - 1) / 2);
}

TEST_CASE("clique hypergraph shape and content") {
    const auto h4 = clique_hypergraph(4, 2);
    CHECK(h4.vertex_count() == 6);
    CHECK(h4.edge_count() == 4);
    CHECK(h4.uniformity() == 3);
    // Edge sets are exactly the triangles' pair triples.
    const auto triangles = triangle_edge_sets(4);
    for (const auto& t : triangles) CHECK(h4.edges().count(t) == 1);

    const auto h5 = clique_hypergraph(5, 2);
    CHECK(h5.vertex_count() == 10);
    CHECK(h5.edge_count() == 10);

    CHECK_THROWS(clique_hypergraph(2, 2));
}

TEST_CASE("clique hypergraph independence is triangle-freeness") {
    const int n = 5;
    const auto h = clique_hypergraph(n, 2);
    const auto triangles = triangle_edge_sets(n);
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
        VertexSet subgraph;
        for (int e = 0; e < pairs; ++e)
            if (mask & (1 << e)) subgraph.push_back(e);
        bool triangle_free = true;
        for (const auto& t : triangles)
            if (is_subset(t, subgraph)) { triangle_free = false; break; }
        CHECK(is_independent(h, subgraph) == triangle_free);
    }
}

TEST_CASE("grid line family counts") {
    const auto [family, h] = grid_lines_hypergraph(3, 5, 2, 2);
    CHECK(family.n == 15);
    REQUIRE(family.lines_by_h.size() == 2);
    CHECK(family.lines_by_h[0].size() == 65);  // (15 - 2*1) * 5
    CHECK(family.lines_by_h[1].size() == 55);  // (15 - 2*2) * 5
    for (const auto& group : family.lines_by_h)
        for (const auto& line : group) {
            CHECK(line.size() == 3);
            std::set<int> distinct(line.begin(), line.end());
            CHECK(distinct.size() == 3);
        }
    // Lines within a slope class are pairwise disjoint.
    for (const auto& group : family.lines_by_h) {
        std::set<int> seen;
        for (const auto& line : group)
            for (int v : line) CHECK(seen.insert(v).second);
    }
    CHECK(h.uniformity() == 2);
    CHECK(h.vertex_count() == 225);
    // One edge per (line, s-subset): binom(3,2) per line, no coincidences.
    CHECK(h.edge_count() == BigInt(3) * (65 + 55));

    // s = m turns lines themselves into the edges.
    const auto [f3, full] = grid_lines_hypergraph(3, 5, 3, 2);
    CHECK(full.edge_count() == 65 + 55);
    for (const auto& group : f3.lines_by_h)
        for (const auto& line : group) CHECK(full.edges().count(line) == 1);

    CHECK_THROWS(grid_lines_hypergraph(3, 6, 2, 2));   // M not prime
    CHECK_THROWS(grid_lines_hypergraph(3, 5, 2, 0));   // default h_max is zero here
}

TEST_CASE("grid restriction counting identity") {
    const auto [family, h] = grid_lines_hypergraph(3, 5, 2, 2);
    const auto lines = family.all_lines();
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 20; ++trial) {
        const auto q = testutil::random_subset(h.vertex_count(), rng, 0.25);
        BigInt expected = 0;
        for (const auto& line : lines) {
            const int overlap = static_cast<int>(set_intersection(line, q).size());
            expected += binomial(overlap, 2);
        }
        CHECK(restrict_to(h, q).edge_count() == expected);
    }
}

TEST_CASE("folkman hypergraph") {
    const auto tiny = folkman_hypergraph(3, 3, 2);
    CHECK(tiny.vertex_count() == 6);
    CHECK(tiny.edge_count() == 2);
    CHECK(tiny.uniformity() == 3);

    // One colour reduces to the clique encoding.
    CHECK(folkman_hypergraph(4, 3, 1) == clique_hypergraph(4, 2));

    const auto singletons = folkman_hypergraph(3, 2, 2);
    CHECK(singletons.uniformity() == 1);

    CHECK_THROWS(folkman_hypergraph(2, 3, 1));
}

TEST_CASE("folkman independence is monochromatic-clique-freeness") {
    const int big_n = 4, n = 3, k = 2;
    const auto h = folkman_hypergraph(big_n, n, k);
    const int pairs = big_n * (big_n - 1) / 2;
    // Sweep all partial colourings c : E(K_4) -> {unused, 1, 2}.
    int checked = 0;
    for (int code = 0; code < 729; ++code) {
        int digits = code;
        std::vector<int> colour(static_cast<std::size_t>(pairs));
        for (int e = 0; e < pairs; ++e) {
            colour[static_cast<std::size_t>(e)] = digits % 3;  // 0 = unused
            digits /= 3;
        }
        VertexSet as_subset;
        for (int e = 0; e < pairs; ++e)
            if (colour[static_cast<std::size_t>(e)] > 0)
                as_subset.push_back((colour[static_cast<std::size_t>(e)] - 1) * pairs + e);
        std::sort(as_subset.begin(), as_subset.end());
        // Direct monochromatic-triangle scan.
        bool mono = false;
        for (int a = 0; a < big_n && !mono; ++a)
            for (int b = a + 1; b < big_n && !mono; ++b)
                for (int c = b + 1; c < big_n && !mono; ++c) {
                    const int e1 = colour[static_cast<std::size_t>(pair_index(a, b, big_n))];
                    const int e2 = colour[static_cast<std::size_t>(pair_index(a, c, big_n))];
                    const int e3 = colour[static_cast<std::size_t>(pair_index(b, c, big_n))];
                    if (e1 > 0 && e1 == e2 && e2 == e3) mono = true;
                }
        CHECK(is_independent(h, as_subset) == !mono);
        ++checked;
    }
    CHECK(checked == 729);
}

TEST_CASE("induced ramsey hypergraph") {
    // Path on three vertices, one colour: six injections collapse to three
    // distinct edges (the path has an automorphism of order two).
    SimpleGraph path{3, {{0, 1}, {1, 2}}};
    const auto h = induced_ramsey_hypergraph(3, path, 1);
    CHECK(h.uniformity() == 3);
    CHECK(h.vertex_count() == 6);
    CHECK(h.edge_set_count() == 3);
    CHECK(h.edge_count() == 3);

    const auto kept = induced_ramsey_hypergraph(3, path, 1, true);
    CHECK(kept.edge_set_count() == 3);
    CHECK(kept.edge_count() == 6);  // every injection counted

    // A complete pattern graph reproduces the folkman edges, shifted one
    // colour slice up (slice0 stays empty).
    SimpleGraph k3{3, {{0, 1}, {0, 2}, {1, 2}}};
    const auto viaInduced = induced_ramsey_hypergraph(4, k3, 2);
    const auto viaFolkman = folkman_hypergraph(4, 3, 2);
    const int pairs = 6;
    CHECK(viaInduced.edge_set_count() == viaFolkman.edge_set_count());
    for (const auto& [edge, mult] : viaFolkman.edges()) {
        VertexSet shifted;
        for (int v : edge) shifted.push_back(v + pairs);
        CHECK(viaInduced.edges().count(shifted) == 1);
    }

    // An empty pattern puts every edge in slice 0, merged across colours.
    SimpleGraph empty{3, {}};
    const auto zeros = induced_ramsey_hypergraph(4, empty, 2);
    for (const auto& [edge, mult] : zeros.edges()) {
        CHECK(edge.back() < pairs);
        CHECK(mult == 1);
    }
    CHECK(zeros.edge_set_count() == 4);  // one per 3-subset of K_4
}

TEST_CASE("random hypergraph generator") {
    const auto a = random_hypergraph(6, 3, 10, 42);
    const auto b = random_hypergraph(6, 3, 10, 42);
    CHECK(a == b);
    CHECK(a.edge_set_count() == 10);
    CHECK(a.edge_count() == 10);
    for (const auto& [edge, mult] : a.edges()) CHECK(mult == 1);

    CHECK(random_hypergraph(5, 2, 0, 1).empty());
    CHECK_THROWS(random_hypergraph(4, 2, 7, 1));

    const auto c = random_hypergraph(6, 3, 10, 43);
    CHECK_FALSE(a == c);  // different seed, different sample
}
