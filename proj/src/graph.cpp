#include "isk4lab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace isk4lab {

bool lex_less(VertexSet a, VertexSet b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
}

namespace {

void check_vertex(int n, int v) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n));
    }
}

} // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxVertices));
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].insert(v);
        g.adj_[static_cast<std::size_t>(v)].insert(u);
    }
    return g;
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
    Graph g(static_cast<int>(rows.size()));
    std::copy(rows.begin(), rows.end(), g.adj_.begin());
    try {
        g.validate();
    } catch (const std::logic_error& e) {
        throw std::invalid_argument(std::string("Graph::from_rows: ") + e.what());
    }
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (int v : neighbors(u) - VertexSet::range(u + 1)) out.emplace_back(u, v);
    }
    return out;
}

Graph Graph::complement() const {
    Graph h(n_);
    const VertexSet all = vertices();
    for (int v = 0; v < n_; ++v) {
        h.adj_[static_cast<std::size_t>(v)] = all - adj_[static_cast<std::size_t>(v)] - VertexSet::single(v);
    }
    return h;
}

void Graph::validate() const {
    const VertexSet all = vertices();
    for (int v = 0; v < kMaxVertices; ++v) {
        const VertexSet row = adj_[static_cast<std::size_t>(v)];
        if (v >= n_) {
            if (!row.empty()) throw std::logic_error("adjacency row beyond the vertex range");
            continue;
        }
        if (!row.subset_of(all)) throw std::logic_error("neighbour outside the vertex range");
        if (row.contains(v)) throw std::logic_error("self-loop at vertex " + std::to_string(v));
        for (int u : row) {
            if (!adjacent(u, v)) {
                throw std::logic_error("asymmetric adjacency " + std::to_string(v) + "->" +
                                       std::to_string(u));
            }
        }
    }
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    InducedSubgraph out;
    out.original = s.to_vector();
    std::array<int, kMaxVertices> index{};
    for (std::size_t i = 0; i < out.original.size(); ++i) index[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);

    std::vector<VertexSet> rows(out.original.size());
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        for (int u : g.neighbors(out.original[i]) & s) rows[i].insert(index[static_cast<std::size_t>(u)]);
    }
    out.graph = Graph::from_rows(rows);
    return out;
}

VertexSet neighborhood(const Graph& g, VertexSet s) {
    VertexSet out;
    for (int v : s) out |= g.neighbors(v);
    return out - s;
}

VertexSet reach(const Graph& g, int start, VertexSet within) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet comp = reach(g, rest.first(), rest);
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

bool is_connected(const Graph& g, VertexSet within) {
    return within.empty() || reach(g, within.first(), within) == within;
}

VertexSet attachment(const Graph& g, VertexSet target, VertexSet source) {
    if (target.intersects(source)) throw std::invalid_argument("attachment: target and source overlap");
    return neighborhood(g, source) & target;
}

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s) {
        if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_independent(const Graph& g, VertexSet s) {
    for (int v : s) {
        if (g.neighbors(v).intersects(s)) return false;
    }
    return true;
}

bool is_complete_to(const Graph& g, VertexSet a, VertexSet b) {
    for (int v : a) {
        if (!b.subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_anticomplete_to(const Graph& g, VertexSet a, VertexSet b) {
    return !neighborhood(g, a).intersects(b) && !a.intersects(b);
}

VertexSet Path::interior() const {
    VertexSet s;
    for (std::size_t i = 1; i + 1 < vertices.size(); ++i) s.insert(vertices[i]);
    return s;
}

bool is_path(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    VertexSet seen;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const int v = p.vertices[i];
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
        if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
    }
    return true;
}

bool is_induced_path(const Graph& g, const Path& p) {
    if (!is_path(g, p)) return false;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        for (std::size_t j = i + 2; j < p.vertices.size(); ++j) {
            if (g.adjacent(p.vertices[i], p.vertices[j])) return false;
        }
    }
    return true;
}

bool is_induced_cycle(const Graph& g, std::span<const int> cycle) {
    const std::size_t k = cycle.size();
    if (k < 3) return false;
    VertexSet seen;
    for (int v : cycle) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < k; ++i) {
        const VertexSet expected{cycle[(i + 1) % k], cycle[(i + k - 1) % k]};
        if ((g.neighbors(cycle[i]) & seen) != expected) return false;
    }
    return true;
}

bool induces_path_between(const Graph& g, VertexSet s, int a, int b) {
    if (a == b || !s.contains(a) || !s.contains(b)) return false;
    int edges = 0;
    for (int v : s) {
        const int d = (g.neighbors(v) & s).size();
        edges += d;
        const bool end = v == a || v == b;
        if (end ? d != 1 : d != 2) return false;
    }
    return edges / 2 == s.size() - 1 && is_connected(g, s);
}

namespace named {

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph complete_multipartite(std::initializer_list<int> part_sizes) {
    std::vector<int> part;
    int idx = 0;
    for (int s : part_sizes) {
        for (int i = 0; i < s; ++i) part.push_back(idx);
        ++idx;
    }
    const int n = static_cast<int>(part.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph prism() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

} // namespace named

} // namespace isk4lab
