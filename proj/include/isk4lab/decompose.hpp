#ifndef ISK4LAB_DECOMPOSE_HPP
#define ISK4LAB_DECOMPOSE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "isk4lab/graph.hpp"

namespace isk4lab {

struct CliqueCutset {
    VertexSet set;
};

/// {a, b} non-adjacent; X and Y split the rest, are anticomplete, and neither
/// X + {a, b} nor Y + {a, b} induces an (a, b)-path.
struct Proper2Cutset {
    int a = -1;
    int b = -1;
    VertexSet x;
    VertexSet y;
};

using CutsetFinding = std::variant<CliqueCutset, Proper2Cutset>;

bool is_valid_cutset(const Graph& g, const CutsetFinding& f);

/// Least clique S (sorted-list order, |S| <= kmax) whose removal disconnects g.
/// The empty set is returned for a disconnected g and a cut vertex counts as
/// a clique cutset of size one.
std::optional<CliqueCutset> find_clique_cutset(const Graph& g, int kmax = 3);

/// First proper 2-cutset in (a, b) order; within a pair, every grouping of
/// the components of g - {a, b} into two sides is tried.
std::optional<Proper2Cutset> find_proper_2cutset(const Graph& g);

struct MultipartiteCert {
    /// Independent, pairwise complete, ordered by smallest vertex.
    std::vector<VertexSet> parts;
};

bool is_valid_multipartite(const Graph& g, const MultipartiteCert& cert);

/// Certificate iff the complement of g is a disjoint union of >= 2 cliques.
std::optional<MultipartiteCert> recognize_complete_multipartite(const Graph& g);

/// g = L(root) with max degree 3. ends[v] is the root edge standing for v.
struct SubcubicRootCert {
    Graph root;
    std::vector<Edge> ends;
};

bool is_valid_root_cert(const Graph& g, const SubcubicRootCert& cert);

/// Krausz partition search: cover the edges of g by cliques of size <= 3 with
/// every vertex in at most two of them, then rebuild the root.
std::optional<SubcubicRootCert> recognize_line_graph_subcubic(const Graph& g);

} // namespace isk4lab

#endif // ISK4LAB_DECOMPOSE_HPP
