#ifndef ISK4LAB_TESTS_ORACLES_HPP
#define ISK4LAB_TESTS_ORACLES_HPP

// Brute-force reference implementations used to derive expected values.
// They only read adjacency through Graph::order() and Graph::adjacent(), and
// deliberately avoid the library's own algorithms, bitset helpers and I/O.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "isk4lab/graph.hpp"

namespace oracle {

using isk4lab::Graph;
using Mask = std::uint64_t;

std::vector<int> members(Mask m);
/// Lexicographic order on the sorted member lists.
bool lex_less(Mask a, Mask b);

Graph from_matrix(const std::vector<std::vector<bool>>& adj);
Graph relabel(const Graph& g, const std::vector<int>& perm);

// graph6 written from the published format description.
std::string encode_graph6(const Graph& g);
std::optional<std::vector<std::vector<bool>>> decode_graph6(const std::string& s);

bool connected(const Graph& g, Mask within);
std::vector<Mask> components(const Graph& g, Mask within);

/// g[s] is a subdivision of K4, decided by smoothing away degree-2 vertices
/// of the induced multigraph and comparing the result with K4.
bool is_isk4_by_smoothing(const Graph& g, Mask s);
/// Lexicographically least ISK4 vertex set, scanning all 2^n subsets.
std::optional<Mask> least_isk4(const Graph& g);

int chromatic_number(const Graph& g);
bool colorable(const Graph& g, int k);
bool proper(const Graph& g, const std::vector<int>& colors, int max_colors);

/// Contains an induced complete tripartite graph with sides 1, 2, 3.
bool contains_k123(const Graph& g);
/// Non-adjacency is an equivalence relation with at least two classes.
bool complete_multipartite(const Graph& g);
int multipartite_parts(const Graph& g);

/// g[s] is a path whose ends are a and b.
bool is_ab_path(const Graph& g, Mask s, int a, int b);
std::optional<Mask> least_clique_cutset(const Graph& g, int kmax);
/// Exhaustive over pairs and all two-sided splits of the remaining vertices.
bool has_proper_2cutset(const Graph& g);
bool is_proper_2cutset(const Graph& g, int a, int b, Mask x, Mask y);

/// Isomorphism-invariant key for graphs on at most 8 vertices.
std::uint64_t canonical_key(const Graph& g);

/// Line graphs of connected graphs with maximum degree <= 3 and at most
/// max_edges edges, stored as canonical keys.
class SubcubicLineGraphs {
public:
    explicit SubcubicLineGraphs(int max_edges);
    /// Every component of g is the line graph of a subcubic graph.
    bool contains(const Graph& g) const;
    std::size_t size() const { return keys_.size(); }

private:
    std::unordered_set<std::uint64_t> keys_;
};

Graph line_graph(int root_order, const std::vector<std::pair<int, int>>& root_edges);

} // namespace oracle

#endif // ISK4LAB_TESTS_ORACLES_HPP
