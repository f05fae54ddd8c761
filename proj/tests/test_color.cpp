#include <doctest.h>

#include <algorithm>
#include <random>

#include "isk4lab/color.hpp"
#include "support/oracles.hpp"

using namespace isk4lab;

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int b = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++b) {
            if ((mask >> b) & 1U) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph with_extra(const Graph& g, int n, std::initializer_list<Edge> extra) {
    std::vector<Edge> edges = g.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph::from_edges(n, edges);
}

/// Random connected root with maximum degree 3 and m edges.
std::vector<std::pair<int, int>> random_subcubic_root(std::mt19937& rng, int m) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree{0};
    while (static_cast<int>(edges.size()) < m) {
        if (std::find_if(degree.begin(), degree.end(), [](int d) { return d < 3; }) == degree.end()) {
            // every vertex is saturated (a cubic graph): start over
            edges.clear();
            degree.assign(1, 0);
        }
        const int u = std::uniform_int_distribution<int>(0, static_cast<int>(degree.size()) - 1)(rng);
        if (degree[static_cast<std::size_t>(u)] == 3) continue;
        int v = std::uniform_int_distribution<int>(0, static_cast<int>(degree.size()))(rng);
        if (v == static_cast<int>(degree.size())) degree.push_back(0);
        if (u == v || degree[static_cast<std::size_t>(v)] == 3) continue;
        const auto e = std::minmax(u, v);
        if (std::find(edges.begin(), edges.end(), std::pair<int, int>(e.first, e.second)) != edges.end()) continue;
        edges.emplace_back(e.first, e.second);
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    return edges;
}

int colours_used(const Coloring& c) {
    std::vector<bool> seen(c.color.size() + 1, false);
    int k = 0;
    for (int x : c.color) {
        if (!seen[static_cast<std::size_t>(x)]) ++k;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return k;
}

} // namespace

TEST_CASE("proper colouring checks and canonical form") {
    const Graph p3 = named::path(3);
    CHECK(is_proper_coloring(p3, Coloring{{0, 1, 0}, 2}));
    CHECK_FALSE(is_proper_coloring(p3, Coloring{{0, 0, 1}, 2}));
    CHECK_FALSE(is_proper_coloring(p3, Coloring{{0, 1, 0}, 3}));  // k must match
    CHECK_FALSE(is_proper_coloring(p3, Coloring{{0, 1}, 2}));     // not total
    CHECK(canonicalize(Coloring{{2, 0, 2, 1}, 3}) == Coloring{{0, 1, 0, 2}, 3});
}

TEST_CASE("exact chromatic number") {
    CHECK(chromatic_number_exact(named::complete(4)).k == 4);
    CHECK(chromatic_number_exact(named::cycle(5)).k == 3);
    CHECK(chromatic_number_exact(named::complete_multipartite({1, 2, 3})).k == 3);
    CHECK(chromatic_number_exact(Graph(0)).k == 0);

    const auto k5 = chromatic_number_exact(named::complete(5), 4);
    CHECK(k5.bound_exceeded);
    CHECK(k5.k == 5);
    CHECK_FALSE(k5.coloring);

    CHECK_FALSE(color_with_at_most(named::cycle(5), 2));
    const auto c = color_with_at_most(named::cycle(5), 4);
    REQUIRE(c);
    CHECK(oracle::proper(named::cycle(5), c->color, 4));
}

TEST_CASE("exact chromatic number matches the brute-force oracle up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const auto r = chromatic_number_exact(g);
            const int chi = oracle::chromatic_number(g);
            REQUIRE(r.k == chi);
            REQUIRE(r.coloring);
            REQUIRE(oracle::proper(g, r.coloring->color, chi));
            REQUIRE(r.coloring->k == chi);
        }
    }
}

TEST_CASE("complete multipartite colouring uses one colour per part") {
    for (const Graph& g : {named::complete_multipartite({3, 3}), named::complete_multipartite({1, 2, 3}),
                           named::complete_multipartite({2, 2, 2})}) {
        const auto cert = recognize_complete_multipartite(g);
        REQUIRE(cert);
        const Coloring c = color_complete_multipartite(*cert);
        CHECK(c.k == static_cast<int>(cert->parts.size()));
        CHECK(c.k == oracle::multipartite_parts(g));
        CHECK(oracle::proper(g, c.color, c.k));
    }
    CHECK(color_complete_multipartite(*recognize_complete_multipartite(named::complete_multipartite({3, 3}))).k == 2);
}

TEST_CASE("subcubic line graph colouring") {
    SUBCASE("C5 needs three") {
        const Coloring c = color_subcubic_line_graph(named::cycle(5), *recognize_line_graph_subcubic(named::cycle(5)));
        CHECK(c.k == 3);
        CHECK(oracle::proper(named::cycle(5), c.color, 3));
    }
    SUBCASE("P3 needs two") {
        const Coloring c = color_subcubic_line_graph(named::path(3), *recognize_line_graph_subcubic(named::path(3)));
        CHECK(c.k == 2);
    }
    SUBCASE("the octahedron is L(K4) and K4 is 3-edge-colourable") {
        const Graph k222 = named::complete_multipartite({2, 2, 2});
        const Coloring c = color_subcubic_line_graph(k222, *recognize_line_graph_subcubic(k222));
        CHECK(c.k == 3);
        CHECK(oracle::proper(k222, c.color, 3));
    }
    SUBCASE("an invalid certificate is refused") {
        auto cert = *recognize_line_graph_subcubic(named::path(3));
        CHECK_THROWS_AS(color_subcubic_line_graph(named::cycle(3), cert), std::invalid_argument);
    }
}

TEST_CASE("random subcubic roots give line graphs coloured with at most four colours") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const auto root = random_subcubic_root(rng, 3 + trial % 10);
        const Graph g = oracle::line_graph(0, root);
        const auto cert = recognize_line_graph_subcubic(g);
        REQUIRE(cert);
        const Coloring c = color_subcubic_line_graph(g, *cert);
        CHECK(c.k <= 4);
        CHECK(oracle::proper(g, c.color, 4));
        CHECK(c.k == colours_used(c));
    }
}

TEST_CASE("rich square colouring") {
    SUBCASE("K_{2,2,2} uses three colours") {
        const Graph g = named::complete_multipartite({2, 2, 2});
        const auto s = find_rich_square(g, RichSquareMode::WholeGraph);
        REQUIRE(s);
        const auto c = color_rich_square(g, *s);
        REQUIRE(c);
        CHECK(c->k == 3);
        CHECK(oracle::proper(g, c->color, 3));
    }
    SUBCASE("square with two two-vertex links uses four") {
        const Graph g = with_extra(named::cycle(4), 8,
                                   {{4, 5}, {4, 0}, {4, 1}, {5, 2}, {5, 3}, {6, 7}, {6, 0}, {6, 1}, {7, 2}, {7, 3}});
        const auto s = find_rich_square(g, RichSquareMode::WholeGraph);
        REQUIRE(s);
        const auto c = color_rich_square(g, *s);
        REQUIRE(c);
        CHECK(c->k == 4);
        CHECK(oracle::proper(g, c->color, 4));
    }
    SUBCASE("square with three centre links uses three") {
        const Graph g = with_extra(named::cycle(4), 7,
                                   {{4, 0}, {4, 1}, {4, 2}, {4, 3}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {6, 0}, {6, 1},
                                    {6, 2}, {6, 3}});
        const auto s = find_rich_square(g, RichSquareMode::WholeGraph);
        REQUIRE(s);
        CHECK(s->links.size() == 3);
        const auto c = color_rich_square(g, *s);
        REQUIRE(c);
        CHECK(c->k == 3);
        CHECK(oracle::proper(g, c->color, 3));
    }
    SUBCASE("a containment-mode structure is refused") {
        const Graph g = with_extra(named::complete_multipartite({2, 2, 2}), 7, {{0, 6}});
        const auto s = find_rich_square(g, RichSquareMode::Containment);
        REQUIRE(s);
        CHECK_FALSE(color_rich_square(g, *s));
    }
}

TEST_CASE("structural colouring examples") {
    SUBCASE("K_{1,2,3} gets three colours") {
        const Graph g = named::complete_multipartite({1, 2, 3});
        const auto r = structural_four_coloring(g);
        REQUIRE(r.ok());
        CHECK(r.coloring->k == 3);
        CHECK(oracle::proper(g, r.coloring->color, 3));
        CHECK_FALSE(top_level_fallback(r.trace));
    }
    SUBCASE("two K4s sharing a triangle") {
        const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
        const auto r = structural_four_coloring(g);
        REQUIRE(r.ok());
        CHECK(r.coloring->k == 4);
        CHECK(oracle::proper(g, r.coloring->color, 4));
        REQUIRE_FALSE(r.trace.steps.empty());
        CHECK(r.trace.steps[0].rule == Rule::CliqueCutsetSplit);
        CHECK(r.trace.steps[0].cutset == VertexSet{0, 1, 2});
    }
    SUBCASE("K_{1,2,4} with a two-vertex path attached at a, b1, b2") {
        // a = 0, b = 1 2, c = 3..6; p1 = 7 sees a and b1, p2 = 8 sees b2
        const Graph g = with_extra(named::complete_multipartite({1, 2, 4}), 9, {{7, 8}, {7, 0}, {7, 1}, {8, 2}});
        REQUIRE_FALSE(oracle::least_isk4(g));
        const auto r = structural_four_coloring(g);
        REQUIRE(r.ok());
        CHECK(count_rule(r.trace, Rule::K12nPeel) == 1);
        CHECK(r.trace.steps[0].rule == Rule::K12nPeel);
        CHECK(r.coloring->k <= 4);
        CHECK(r.coloring->k >= oracle::chromatic_number(g));
        CHECK(oracle::proper(g, r.coloring->color, 4));
    }
    SUBCASE("a disconnected input starts with Components") {
        const Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
        const auto r = structural_four_coloring(g);
        REQUIRE(r.ok());
        CHECK(r.trace.steps[0].rule == Rule::Components);
        CHECK(r.coloring->k == 3);
    }
    SUBCASE("K6 cannot be 4-coloured and contains an ISK4") {
        const auto r = structural_four_coloring(named::complete(6));
        CHECK_FALSE(r.ok());
        REQUIRE(r.failure);
        CHECK(r.failure->kind == FailureKind::HypothesisViolation);
    }
    SUBCASE("the optional ISK4 check rejects K4 up front") {
        const auto r = structural_four_coloring(named::complete(4), {.verify_isk4_free = true});
        REQUIRE(r.failure);
        CHECK(r.failure->witness == std::vector<int>{0, 1, 2, 3});
        CHECK(structural_four_coloring(named::complete(4)).ok());
    }
}

TEST_CASE("structural colouring on every connected ISK4-free graph up to 6 vertices") {
    int graphs = 0;
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (!oracle::connected(g, (std::uint64_t{1} << n) - 1) || oracle::least_isk4(g)) continue;
            ++graphs;
            const auto r = structural_four_coloring(g);
            REQUIRE(r.ok());
            REQUIRE(r.coloring->k <= 4);
            REQUIRE(oracle::proper(g, r.coloring->color, 4));
            REQUIRE(r.coloring->k == colours_used(*r.coloring));
            REQUIRE(*r.coloring == canonicalize(*r.coloring));
            for (const TraceStep& s : r.trace.steps) REQUIRE(s.depth <= n);
            REQUIRE(replay_trace(g, r.trace) == *r.coloring);
        }
    }
    CHECK(graphs > 1000);
}

TEST_CASE("replay rejects a trace that does not fit") {
    const Graph g = named::complete_multipartite({1, 2, 3});
    const auto r = structural_four_coloring(g);
    REQUIRE(r.ok());
    CHECK_THROWS_AS(replay_trace(named::cycle(6), r.trace), std::invalid_argument);

    ColoringTrace longer = r.trace;
    longer.steps.push_back(longer.steps.back());
    CHECK_THROWS_AS(replay_trace(g, longer), std::invalid_argument);

    CHECK_THROWS_AS(replay_trace(g, ColoringTrace{}), std::invalid_argument);
}

TEST_CASE("rule and failure names") {
    CHECK(to_string(Rule::K12nPeel) == "K12nPeel");
    CHECK(to_string(Recombination::WholeExact) == "WholeExact");
    CHECK(to_string(FailureKind::ConjectureCounterexample) == "conjecture-counterexample");
}
