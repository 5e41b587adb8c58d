#include <doctest.h>

#include <set>

#include "hcl/generators.hpp"
#include "hcl/oracle.hpp"
#include "helpers.hpp"

using namespace hcl;

TEST_CASE("enumerate_independent_sets basics") {
    Multihypergraph edgeless(2, 4);
    const auto maximal = enumerate_independent_sets(edgeless, true);
    REQUIRE(maximal.complete);
    REQUIRE(maximal.sets.size() == 1);
    CHECK(maximal.sets.front() == full_vertex_set(4));

    Multihypergraph single(2, 2);
    single.add_edge({0, 1});
    const auto two = enumerate_independent_sets(single, true);
    REQUIRE(two.sets.size() == 2);
    CHECK(two.sets[0] == VertexSet{0});
    CHECK(two.sets[1] == VertexSet{1});

    // All independent sets of the single edge: {}, {0}, {1}.
    const auto all = enumerate_independent_sets(single, false);
    CHECK(all.sets.size() == 3);
}

TEST_CASE("maximal triangle-free subgraphs of K5 against a subset scan") {
    const auto h = clique_hypergraph(5, 2);
    const auto maximal = enumerate_independent_sets(h, true);
    REQUIRE(maximal.complete);

    // Independent scan over all 2^10 pair subsets.
    std::set<VertexSet> expected;
    const auto triangles = testutil::triangle_edge_sets(5);
    std::vector<VertexSet> independent;
    for (int mask = 0; mask < (1 << 10); ++mask) {
        VertexSet sub;
        for (int e = 0; e < 10; ++e)
            if (mask & (1 << e)) sub.push_back(e);
        bool ok = true;
        for (const auto& t : triangles)
            if (is_subset(t, sub)) { ok = false; break; }
        if (ok) independent.push_back(sub);
    }
    for (const auto& s : independent) {
        bool is_maximal = true;
        for (const auto& t : independent)
            if (t.size() > s.size() && is_subset(s, t)) { is_maximal = false; break; }
        if (is_maximal) expected.insert(s);
    }
    CHECK(expected == std::set<VertexSet>(maximal.sets.begin(), maximal.sets.end()));

    // Everything emitted is independent; every strict superset is dependent.
    for (const auto& s : maximal.sets) {
        CHECK(is_independent(h, s));
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            CHECK_FALSE(is_independent(h, set_union(s, {v})));
        }
    }
}

TEST_CASE("enumeration cap flags truncation") {
    const auto h = clique_hypergraph(5, 2);
    const auto capped = enumerate_independent_sets(h, true, {3});
    CHECK_FALSE(capped.complete);
    CHECK(capped.sets.size() == 3);
}

TEST_CASE("verify_cover") {
    const auto h = clique_hypergraph(4, 2);
    const auto everything = verify_cover({full_vertex_set(h.vertex_count())}, h);
    CHECK(everything.full_cover());

    const auto nothing = verify_cover({}, h);
    CHECK_FALSE(nothing.full_cover());
    CHECK(nothing.covered == 0);
    CHECK_FALSE(nothing.uncovered.empty());
    CHECK(nothing.total_maximal == nothing.covered + nothing.uncovered.size());

    // Appending the full vertex set always completes a cover.
    std::mt19937_64 rng(157);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testutil::corpus_instance(rng, 3, 10, 14);
        std::vector<VertexSet> containers;
        for (int i = 0; i < 3; ++i)
            containers.push_back(testutil::random_subset(g.vertex_count(), rng, 0.4));
        containers.push_back(full_vertex_set(g.vertex_count()));
        CHECK(verify_cover(containers, g).full_cover());
    }
}

TEST_CASE("count_mono_cliques") {
    // All edges one colour: a single monochromatic triangle in K3.
    CHECK(count_mono_cliques(3, 3, 1, {1, 1, 1}).monochromatic_cliques == 1);
    CHECK(count_mono_cliques(3, 3, 1, {1, 1, 1}).special_colour_edges == 0);

    // Everything in the overflow colour.
    const auto overflow = count_mono_cliques(4, 3, 1, std::vector<int>(6, 2));
    CHECK(overflow.special_colour_edges == 6);
    CHECK(overflow.monochromatic_cliques == 0);

    CHECK_THROWS(count_mono_cliques(4, 3, 1, {1, 1, 1}));        // incomplete
    CHECK_THROWS(count_mono_cliques(3, 3, 1, {1, 1, 3}));        // colour range

    // Random 2-colourings of K5 against a direct triangle scan.
    std::mt19937_64 rng(139);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> colours(10);
        for (auto& c : colours) c = 1 + static_cast<int>(rng() % 3);  // k = 2 plus overflow 3
        const auto counts = count_mono_cliques(5, 3, 2, colours);
        BigInt special = 0, mono = 0;
        for (int c : colours)
            if (c == 3) ++special;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c) {
                    const int e1 = colours[static_cast<std::size_t>(pair_index(a, b, 5))];
                    const int e2 = colours[static_cast<std::size_t>(pair_index(a, c, 5))];
                    const int e3 = colours[static_cast<std::size_t>(pair_index(b, c, 5))];
                    if (e1 == e2 && e2 == e3 && e1 <= 2) ++mono;
                }
        CHECK(counts.special_colour_edges == special);
        CHECK(counts.monochromatic_cliques == mono);
    }
}

TEST_CASE("count_mono_cliques is relabeling invariant") {
    std::mt19937_64 rng(149);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> colours(10);
        for (auto& c : colours) c = 1 + static_cast<int>(rng() % 3);
        std::vector<int> perm{0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> relabeled(10);
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                relabeled[static_cast<std::size_t>(
                    pair_index(perm[static_cast<std::size_t>(a)],
                               perm[static_cast<std::size_t>(b)], 5))] =
                    colours[static_cast<std::size_t>(pair_index(a, b, 5))];
        const auto before = count_mono_cliques(5, 3, 2, colours);
        const auto after = count_mono_cliques(5, 3, 2, relabeled);
        CHECK(before.special_colour_edges == after.special_colour_edges);
        CHECK(before.monochromatic_cliques == after.monochromatic_cliques);
    }
}

namespace {

/// Exhaustive minimum hitting set by subset sweep, for cross-checking.
std::size_t exhaustive_min_hitting(const VertexSet& points,
                                   const std::vector<VertexSet>& ranges) {
    const int n = static_cast<int>(points.size());
    std::size_t best = ranges.empty() ? 0 : static_cast<std::size_t>(n) + 1;
    if (ranges.empty()) return 0;
    for (long mask = 0; mask < (1L << n); ++mask) {
        VertexSet net;
        for (int i = 0; i < n; ++i)
            if (mask & (1L << i)) net.push_back(points[static_cast<std::size_t>(i)]);
        if (net.size() >= best) continue;
        bool hits_all = true;
        for (const auto& range : ranges) {
            if (set_intersection(net, range).empty()) { hits_all = false; break; }
        }
        if (hits_all) best = net.size();
    }
    return best;
}

}  // namespace

TEST_CASE("min_eps_net") {
    const VertexSet points{0, 1, 2, 3, 4, 5};

    // No qualifying range.
    CHECK(min_eps_net(points, {{0}, {1}}, Rational(1, 2)).size == 0);

    // One qualifying range needs one point.
    const auto one = min_eps_net(points, {{0, 1, 2}}, Rational(1, 2));
    CHECK(one.size == 1);

    std::mt19937_64 rng(151);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<VertexSet> ranges;
        const int count = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < count; ++i) {
            auto range = testutil::random_subset(6, rng, 0.5);
            if (range.empty()) range.push_back(static_cast<int>(rng() % 6));
            ranges.push_back(std::move(range));
        }
        const Rational eps(1 + static_cast<long>(rng() % 3), 6);
        const auto result = min_eps_net(points, ranges, eps);
        std::vector<VertexSet> qualifying;
        for (const auto& r : ranges)
            if (Rational(static_cast<long>(r.size())) >= eps * Rational(6)) qualifying.push_back(r);
        CHECK(result.size == exhaustive_min_hitting(points, qualifying));
        for (const auto& r : qualifying)
            CHECK_FALSE(set_intersection(result.net, r).empty());
    }
}

TEST_CASE("min_eps_net on a small grid line family") {
    const auto [family, h] = grid_lines_hypergraph(3, 5, 2, 2);
    // Use the first few lines of each slope class as ranges over a small
    // point set: every full line qualifies at eps = 3/|X|.
    VertexSet points;
    std::vector<VertexSet> ranges;
    for (const auto& group : family.lines_by_h)
        for (std::size_t i = 0; i < 3; ++i) {
            ranges.push_back(group[i]);
            points = set_union(points, group[i]);
        }
    const Rational eps(3, static_cast<long>(points.size()));
    const auto result = min_eps_net(points, ranges, eps);
    CHECK(result.size == exhaustive_min_hitting(points, ranges));
    CHECK(result.size >= 1);
}
