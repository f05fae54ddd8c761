#ifndef ISK4LAB_COLOR_HPP
#define ISK4LAB_COLOR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isk4lab/decompose.hpp"
#include "isk4lab/graph.hpp"
#include "isk4lab/patterns.hpp"

namespace isk4lab {

struct Coloring {
    /// color[v] in 0..k-1 for every vertex.
    std::vector<int> color;
    int k = 0;
    bool operator==(const Coloring&) const = default;
};

/// Total, proper, and k equals the number of distinct colours used.
bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Renumbers colours by first occurrence in vertex order.
Coloring canonicalize(Coloring c);

struct ExactResult {
    /// χ(g), or bound + 1 when the bound was exceeded.
    int k = 0;
    std::optional<Coloring> coloring;
    bool bound_exceeded = false;
};

/// DSATUR backtracking with iterative deepening on the number of colours.
ExactResult chromatic_number_exact(const Graph& g, std::optional<int> upper_bound = std::nullopt);

/// A proper colouring with at most k colours, if one exists.
std::optional<Coloring> color_with_at_most(const Graph& g, int k);

Coloring color_complete_multipartite(const MultipartiteCert& cert);

/// Edge-colours the root with as few colours as its maximum degree allows
/// (never more than four) and pulls the colours back to g.
Coloring color_subcubic_line_graph(const Graph& g, const SubcubicRootCert& cert);

/// v1, v3 get 0; v2, v4 get 1; links alternate 2, 3 from their {v1, v2} end.
/// Returns nothing unless s is a valid whole-graph structure.
std::optional<Coloring> color_rich_square(const Graph& g, const SquareLinkStructure& s);

// ---------------------------------------------------------------------------
// structural four-colouring

enum class Rule {
    Trivial,
    Components,
    CliqueCutsetSplit,
    Proper2CutsetSplit,
    Multipartite,
    SubcubicLineGraph,
    RichSquare,
    K12nPeel,
    ExactFallback,
};

std::string_view to_string(Rule r);

/// How the two sides of a proper 2-cutset were reconciled.
enum class Recombination { Agree, RecolorFirst, RecolorSecond, WholeExact };

std::string_view to_string(Recombination r);

/// One rule application. All vertex ids refer to the input graph.
struct TraceStep {
    Rule rule = Rule::Trivial;
    int depth = 0;
    VertexSet vertices;
    /// Pieces handed to recursive calls, in call order.
    std::vector<VertexSet> blocks;
    /// Clique cutset, or {a, b} for a proper 2-cutset.
    VertexSet cutset;
    Recombination recombination = Recombination::Agree;
    std::optional<MultipartiteCert> multipartite;
    std::optional<SubcubicRootCert> root;
    std::optional<SquareLinkStructure> square;
    std::optional<K12nEmbedding> k12n;
};

/// Steps in preorder of the recursion.
struct ColoringTrace {
    std::vector<TraceStep> steps;
};

enum class FailureKind {
    /// A structural expectation that holds for ISK4-free inputs was violated.
    HypothesisViolation,
    /// Exact search needs five colours on an ISK4-free graph.
    ConjectureCounterexample,
};

std::string_view to_string(FailureKind k);

struct StructuralFailure {
    FailureKind kind = FailureKind::HypothesisViolation;
    Rule rule = Rule::Trivial;
    std::string expectation;
    /// The subproblem the failing rule was working on.
    VertexSet vertices;
    std::vector<int> witness;
};

struct StructuralOptions {
    /// Reject inputs that contain an ISK4 before colouring.
    bool verify_isk4_free = false;
};

struct StructuralResult {
    std::optional<Coloring> coloring;
    ColoringTrace trace;
    std::optional<StructuralFailure> failure;

    bool ok() const { return coloring.has_value(); }
};

StructuralResult structural_four_coloring(const Graph& g, const StructuralOptions& opts = {});

/// Re-executes a trace without running any detector. Throws
/// std::invalid_argument when the trace does not fit g.
Coloring replay_trace(const Graph& g, const ColoringTrace& trace);

/// The first rule applied to the whole (connected) input was ExactFallback.
bool top_level_fallback(const ColoringTrace& t);
int count_rule(const ColoringTrace& t, Rule r);

} // namespace isk4lab

#endif // ISK4LAB_COLOR_HPP
