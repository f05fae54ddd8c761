#ifndef ISK4LAB_PATTERNS_HPP
#define ISK4LAB_PATTERNS_HPP

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "isk4lab/graph.hpp"

namespace isk4lab {

/// mapping[i] is the host vertex playing pattern vertex i.
struct PatternWitness {
    std::vector<int> mapping;
    bool operator==(const PatternWitness&) const = default;
};

/// Induced K_{1,2,n}: sides {a}, {b[0], b[1]}, c.
struct K12nEmbedding {
    int a = -1;
    std::array<int, 2> b{-1, -1};
    std::vector<int> c;

    int n() const { return static_cast<int>(c.size()); }
    VertexSet a_side() const { return VertexSet::single(a); }
    VertexSet b_side() const { return VertexSet{b[0], b[1]}; }
    VertexSet c_side() const { return VertexSet::from(c); }
    VertexSet vertex_set() const { return a_side() | b_side() | c_side(); }
    bool operator==(const K12nEmbedding&) const = default;
};

struct SquareLink {
    /// A single vertex seeing the whole square, or a path p..p' with
    /// N(p) ∩ S = {v1, v2} and N(p') ∩ S = {v3, v4}.
    Path path;
    bool centered() const { return path.vertices.size() == 1; }
    bool operator==(const SquareLink&) const = default;
};

/// An induced C4 v1 v2 v3 v4 (cyclic order) with links attached to it.
struct SquareLinkStructure {
    std::array<int, 4> square{};
    std::vector<SquareLink> links;
    /// True when every component of g - S is one of `links`.
    bool whole_graph = false;

    VertexSet square_set() const { return VertexSet{square[0], square[1], square[2], square[3]}; }
};

enum class RichSquareMode {
    /// Some induced subgraph is a rich square (two anticomplete links).
    Containment,
    /// g itself is a rich square: g - S has >= 2 components and each is a link.
    WholeGraph,
};

enum class FixedPattern { K33, K222, Prism, Wheel };

std::string_view to_string(FixedPattern p);

/// Backtracking induced embedder; returns the lexicographically least mapping.
std::optional<PatternWitness> contains_induced(const Graph& g, const Graph& pattern);

/// True if w is an injective map under which pattern edges are exactly host edges.
bool is_induced_embedding(const Graph& g, const Graph& pattern, const PatternWitness& w);

/// True if g[s] is a subdivision of K4.
bool is_k4_subdivision(const Graph& g, VertexSet s);

/// Lexicographically least vertex set inducing a subdivision of K4.
std::optional<VertexSet> contains_isk4(const Graph& g);

inline bool is_isk4_free(const Graph& g) { return !contains_isk4(g).has_value(); }

/// Structural validity of an embedding (sides disjoint, independent, pairwise complete).
bool is_valid_k12n(const Graph& g, const K12nEmbedding& h);

/// No outside vertex extends H to an induced K_{1,2,n+1}. For n >= 3 this
/// means no vertex is complete to {a, b1, b2} and anticomplete to the c-side;
/// for n = 2 the b- and c-sides are interchangeable, so both are tested.
bool is_maximal_k12n(const Graph& g, const K12nEmbedding& h);

/// Brute-force maximality: for every outside v, decide whether g[V(H) + v]
/// is a complete tripartite graph with sides 1, 2, n+1.
bool is_maximal_by_extension(const Graph& g, const K12nEmbedding& h);

/// Every maximal embedding with n >= n_min, each vertex set reported once,
/// sorted by (a, b, c).
std::vector<K12nEmbedding> maximal_k12n_embeddings(const Graph& g, int n_min);

/// First (lexicographically least) maximal embedding with n >= n_min.
std::optional<K12nEmbedding> find_maximal_k12n(const Graph& g, int n_min);

std::optional<SquareLinkStructure> find_rich_square(const Graph& g, RichSquareMode mode);

/// Rechecks the square, every link and (for whole_graph) the component cover.
bool validate_square_links(const Graph& g, const SquareLinkStructure& s);

/// g[s] is a prism: two triangles joined by three disjoint paths, no other edges.
bool is_prism(const Graph& g, VertexSet s);

/// Witness mapping conventions: K33 and K222 map the named pattern graphs;
/// Prism lists the prism's vertex set ascending; Wheel lists the hub
/// followed by the rim in cyclic order.
std::optional<PatternWitness> contains_fixed(const Graph& g, FixedPattern which);

/// Re-checks a contains_fixed witness against its defining conditions.
bool validate_fixed_witness(const Graph& g, FixedPattern which, const PatternWitness& w);

const Graph& pattern_graph(FixedPattern which);

/// Calls visit once per induced cycle (length >= 3), starting at the smallest
/// vertex and oriented so the second vertex is less than the last. Stops
/// early and returns false when visit returns false.
bool for_each_induced_cycle(const Graph& g, const std::function<bool(std::span<const int>)>& visit);

} // namespace isk4lab

#endif // ISK4LAB_PATTERNS_HPP
