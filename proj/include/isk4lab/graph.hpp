#ifndef ISK4LAB_GRAPH_HPP
#define ISK4LAB_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isk4lab {

inline constexpr int kMaxVertices = 64;

/// A set of vertex ids in 0..63, stored as one machine word.
class VertexSet {
public:
    using word_type = std::uint64_t;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(word_type rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        word_type rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(word_type bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~word_type{0} : ((word_type{1} << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(word_type{1} << v); }
    static VertexSet from(std::span<const int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(int v) { bits_ |= word_type{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(word_type{1} << v); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest element; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }
    constexpr int last() const { return 63 - std::countl_zero(bits_); }
    constexpr word_type bits() const { return bits_; }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    constexpr bool operator==(const VertexSet&) const = default;

    /// Ordering of the sorted element lists (lexicographic), not of the words.
    friend bool lex_less(VertexSet a, VertexSet b);

private:
    word_type bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// There are no mutators: every graph is built whole by a factory.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    /// Rows must be symmetric, irreflexive and inside the vertex range;
    /// throws std::invalid_argument otherwise.
    static Graph from_rows(std::span<const VertexSet> rows);

    int order() const { return n_; }
    int size() const;
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return neighbors(v).size(); }
    int max_degree() const;
    std::vector<Edge> edges() const;

    Graph complement() const;

    /// Throws std::logic_error when a representation invariant is broken.
    void validate() const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the host vertex that became vertex i (ascending).
    std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Graph with the vertices of s deleted, relabelled order-preserving.
inline InducedSubgraph remove_vertices(const Graph& g, VertexSet s) {
    return induced_subgraph(g, g.vertices() - s);
}

/// Neighbours of s outside s.
VertexSet neighborhood(const Graph& g, VertexSet s);

/// Vertices reachable from `start` inside `within`.
VertexSet reach(const Graph& g, int start, VertexSet within);

/// Connected pieces of g[within], ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g, VertexSet within);
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// N(source) ∩ target. Throws std::invalid_argument when the sets overlap.
VertexSet attachment(const Graph& g, VertexSet target, VertexSet source);

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
bool is_complete_to(const Graph& g, VertexSet a, VertexSet b);
bool is_anticomplete_to(const Graph& g, VertexSet a, VertexSet b);

/// Ordered sequence of distinct vertices.
struct Path {
    std::vector<int> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
    VertexSet vertex_set() const { return VertexSet::from(vertices); }
    /// Vertices strictly between the two ends.
    VertexSet interior() const;
    bool operator==(const Path&) const = default;
};

bool is_path(const Graph& g, const Path& p);
/// A path with no chords.
bool is_induced_path(const Graph& g, const Path& p);
/// Cyclic sequence of >= 3 vertices whose only edges are the consecutive ones.
bool is_induced_cycle(const Graph& g, std::span<const int> cycle);

/// True if g[s] is a single path whose two ends are exactly a and b.
bool induces_path_between(const Graph& g, VertexSet s, int a, int b);

namespace named {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_multipartite(std::initializer_list<int> part_sizes);
/// Two triangles {0,1,2} and {3,4,5} joined by the matching i -- i+3.
Graph prism();

} // namespace named

} // namespace isk4lab

#endif // ISK4LAB_GRAPH_HPP
