#include <doctest.h>

#include "isk4lab/decompose.hpp"
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

template <class F>
void for_each_graph(int n_max, F&& f) {
    for (int n = 1; n <= n_max; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) f(graph_from_mask(n, mask));
    }
}

} // namespace

TEST_CASE("clique cutsets") {
    SUBCASE("two triangles sharing a vertex") {
        const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
        const auto s = find_clique_cutset(g);
        REQUIRE(s);
        CHECK(s->set == VertexSet{0});
        CHECK(is_valid_cutset(g, *s));
    }
    SUBCASE("order is lexicographic on sorted lists, not by size") {
        // shared vertex 2: the edge {0, 2} also separates 1 from {3, 4} and sorts first
        const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
        const auto s = find_clique_cutset(g);
        REQUIRE(s);
        CHECK(s->set == VertexSet{0, 2});
        CHECK(find_clique_cutset(g, 1)->set == VertexSet{2});
    }
    SUBCASE("C5 has none") { CHECK_FALSE(find_clique_cutset(named::cycle(5))); }
    SUBCASE("K4 has none") { CHECK_FALSE(find_clique_cutset(named::complete(4))); }
    SUBCASE("a disconnected graph is cut by the empty set") {
        const auto s = find_clique_cutset(Graph::from_edges(3, {{0, 1}}));
        REQUIRE(s);
        CHECK(s->set.empty());
    }
    SUBCASE("two K4s sharing a triangle are cut by the triangle") {
        const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
        const auto s = find_clique_cutset(g);
        REQUIRE(s);
        CHECK(s->set == VertexSet{0, 1, 2});
        CHECK_FALSE(find_clique_cutset(g, 2));
    }
}

TEST_CASE("proper 2-cutsets") {
    SUBCASE("C6 has none") { CHECK_FALSE(find_proper_2cutset(named::cycle(6))); }
    SUBCASE("K_{2,4} splits the big side in two") {
        const Graph g = named::complete_multipartite({2, 4});
        const auto f = find_proper_2cutset(g);
        REQUIRE(f);
        CHECK(VertexSet{f->a, f->b} == VertexSet{0, 1});
        CHECK(f->x.size() == 2);
        CHECK(f->y.size() == 2);
        CHECK(is_valid_cutset(g, *f));
        CHECK(oracle::is_proper_2cutset(g, f->a, f->b, f->x.bits(), f->y.bits()));
    }
    SUBCASE("K_{2,3} has none: one side is always a single (a,b)-path") {
        CHECK_FALSE(find_proper_2cutset(named::complete_multipartite({2, 3})));
        CHECK_FALSE(oracle::has_proper_2cutset(named::complete_multipartite({2, 3})));
    }
    SUBCASE("adjacent pairs are never used") {
        CHECK_FALSE(is_valid_cutset(named::complete(4), Proper2Cutset{0, 1, VertexSet{2}, VertexSet{3}}));
    }
}

TEST_CASE("cutset finders agree with exhaustive enumeration on every graph up to 6 vertices") {
    int clique_found = 0;
    int proper_found = 0;
    for_each_graph(6, [&](const Graph& g) {
        for (int kmax : {1, 2, 3}) {
            const auto got = find_clique_cutset(g, kmax);
            const auto want = oracle::least_clique_cutset(g, kmax);
            REQUIRE(got.has_value() == want.has_value());
            if (got) {
                REQUIRE(got->set.bits() == *want);
                REQUIRE(is_valid_cutset(g, *got));
                clique_found += kmax == 3 ? 1 : 0;
            }
        }
        const auto p = find_proper_2cutset(g);
        REQUIRE(p.has_value() == oracle::has_proper_2cutset(g));
        if (p) {
            REQUIRE(oracle::is_proper_2cutset(g, p->a, p->b, p->x.bits(), p->y.bits()));
            REQUIRE(is_valid_cutset(g, *p));
            ++proper_found;
        }
    });
    CHECK(clique_found > 0);
    CHECK(proper_found > 0);
}

TEST_CASE("complete multipartite recognition") {
    SUBCASE("K_{3,3} has two parts") {
        const auto c = recognize_complete_multipartite(named::complete_multipartite({3, 3}));
        REQUIRE(c);
        CHECK(c->parts == std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{3, 4, 5}});
    }
    SUBCASE("K_{1,2,3} has three parts") {
        const Graph g = named::complete_multipartite({1, 2, 3});
        const auto c = recognize_complete_multipartite(g);
        REQUIRE(c);
        CHECK(c->parts.size() == 3);
        CHECK(is_valid_multipartite(g, *c));
    }
    SUBCASE("C5 is not complete multipartite") { CHECK_FALSE(recognize_complete_multipartite(named::cycle(5))); }
    SUBCASE("an edgeless graph has one part and does not count") {
        CHECK_FALSE(recognize_complete_multipartite(Graph(3)));
    }
}

TEST_CASE("multipartite recognition agrees with the oracle on every graph up to 6 vertices") {
    for_each_graph(6, [&](const Graph& g) {
        const auto c = recognize_complete_multipartite(g);
        REQUIRE(c.has_value() == oracle::complete_multipartite(g));
        if (c) {
            REQUIRE(static_cast<int>(c->parts.size()) == oracle::multipartite_parts(g));
            REQUIRE(is_valid_multipartite(g, *c));
        }
    });
}

TEST_CASE("subcubic line graphs") {
    SUBCASE("P3 is the line graph of P4") {
        const auto c = recognize_line_graph_subcubic(named::path(3));
        REQUIRE(c);
        CHECK(c->root.order() == 4);
        CHECK(c->root.size() == 3);
        CHECK(is_valid_root_cert(named::path(3), *c));
    }
    SUBCASE("C5 is its own line graph") {
        const auto c = recognize_line_graph_subcubic(named::cycle(5));
        REQUIRE(c);
        CHECK(oracle::canonical_key(c->root) == oracle::canonical_key(named::cycle(5)));
    }
    SUBCASE("the claw is not a line graph") {
        CHECK_FALSE(recognize_line_graph_subcubic(named::complete_multipartite({1, 3})));
    }
    SUBCASE("K3 has a root, either a triangle or a claw") {
        const auto c = recognize_line_graph_subcubic(named::complete(3));
        REQUIRE(c);
        CHECK(is_valid_root_cert(named::complete(3), *c));
    }
    SUBCASE("prism and octahedron follow the root enumeration") {
        const oracle::SubcubicLineGraphs lines(6);
        for (const Graph& g : {named::prism(), named::complete_multipartite({2, 2, 2})}) {
            const auto c = recognize_line_graph_subcubic(g);
            CHECK(c.has_value() == lines.contains(g));
            if (c) CHECK(is_valid_root_cert(g, *c));
        }
        // the prism is L(K_{2,3}) and the octahedron is L(K4)
        CHECK(lines.contains(named::prism()));
        CHECK(lines.contains(named::complete_multipartite({2, 2, 2})));
    }
    SUBCASE("K4 is L(K_{1,4}) only, which is not subcubic") {
        CHECK_FALSE(recognize_line_graph_subcubic(named::complete(4)));
    }
}

TEST_CASE("line graph recognition agrees with root enumeration on every graph up to 6 vertices") {
    const oracle::SubcubicLineGraphs lines(6);
    int recognized = 0;
    for_each_graph(6, [&](const Graph& g) {
        const auto c = recognize_line_graph_subcubic(g);
        REQUIRE(c.has_value() == lines.contains(g));
        if (c) {
            REQUIRE(is_valid_root_cert(g, *c));
            REQUIRE(c->root.max_degree() <= 3);
            ++recognized;
        }
    });
    CHECK(recognized > 0);
}

TEST_CASE("a root certificate for a known line graph rebuilds the host") {
    // K_{2,4} has max degree 4, so use K_{2,3} with a pendant edge on a degree-2 vertex
    const Graph root = Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 5}});
    std::vector<std::pair<int, int>> root_edges;
    for (const Edge& e : root.edges()) root_edges.emplace_back(e.first, e.second);
    const Graph g = oracle::line_graph(root.order(), root_edges);
    const auto c = recognize_line_graph_subcubic(g);
    REQUIRE(c);
    CHECK(is_valid_root_cert(g, *c));
    CHECK(oracle::canonical_key(oracle::line_graph(c->root.order(), [&] {
              std::vector<std::pair<int, int>> es;
              for (const Edge& e : c->ends) es.emplace_back(e.first, e.second);
              return es;
          }())) == oracle::canonical_key(g));
}
