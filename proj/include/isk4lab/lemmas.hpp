#ifndef ISK4LAB_LEMMAS_HPP
#define ISK4LAB_LEMMAS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "isk4lab/graph.hpp"
#include "isk4lab/patterns.hpp"

namespace isk4lab {

/// Three induced paths from a vertex v to an induced cycle C. Each path
/// starts at v and ends on C.
struct LinkWitness {
    std::array<Path, 3> paths;
};

/// Exhaustive search for a linkage of v to the induced cycle. Throws
/// std::invalid_argument if the cycle is not induced or contains v.
std::optional<LinkWitness> is_linked(const Graph& g, std::span<const int> cycle, int v);

/// Independent check of all linkage conditions:
///  - interiors avoid C, and each path meets C only at its far end;
///  - apart from v, a path has no edges to C other than its last edge;
///  - paths pairwise share only v;
///  - edges between two paths touch v or lie inside C;
///  - every neighbour of v on C is a path end.
bool verify_link_witness(const Graph& g, std::span<const int> cycle, int v, const LinkWitness& w);

enum class AttachmentTag { Empty, OneVertex, OneEdge, Other };
enum class ComponentAttachmentTag { Empty, Clique, A1A2, Other };

std::string_view to_string(AttachmentTag t);
std::string_view to_string(ComponentAttachmentTag t);

struct AttachmentClass {
    AttachmentTag tag = AttachmentTag::Empty;
    VertexSet set;
};

struct ComponentAttachmentClass {
    ComponentAttachmentTag tag = ComponentAttachmentTag::Empty;
    VertexSet set;
};

/// Classifies N(v) ∩ V(H). Requires v outside H and H valid in g.
AttachmentClass classify_vertex_attachment(const Graph& g, const K12nEmbedding& h, int v);

/// Classifies N(comp) ∩ V(H). Requires comp to be a component of g - V(H), n >= 3.
ComponentAttachmentClass classify_component_attachment(const Graph& g, const K12nEmbedding& h, VertexSet comp);

enum class LemmaId { Link, VertexAttachment, ComponentAttachment };

std::string_view to_string(LemmaId id);
/// Accepts "l-link", "l-voh", "l-comp" (any case).
std::optional<LemmaId> parse_lemma_id(std::string_view s);

struct LinkCounterwitness {
    std::vector<int> cycle;
    int v = -1;
    LinkWitness link;
};

struct VertexAttachmentCounterwitness {
    K12nEmbedding h;
    int v = -1;
    VertexSet attachment;
};

struct ComponentAttachmentCounterwitness {
    K12nEmbedding h;
    VertexSet component;
    VertexSet attachment;
};

using Counterwitness =
    std::variant<LinkCounterwitness, VertexAttachmentCounterwitness, ComponentAttachmentCounterwitness>;

enum class LemmaStatus { Inapplicable, Holds, Violated, BudgetExceeded };

std::string_view to_string(LemmaStatus s);

struct LemmaReport {
    LemmaId id = LemmaId::Link;
    LemmaStatus status = LemmaStatus::Inapplicable;
    bool hypothesis_satisfied = false;
    /// Unknown when the hypothesis fails or the budget ran out.
    std::optional<bool> conclusion_holds;
    /// Present iff hypothesis_satisfied and conclusion_holds == false.
    std::optional<Counterwitness> counterwitness;
    /// Search steps spent (L-LINK only).
    std::uint64_t steps = 0;
};

inline constexpr std::uint64_t kDefaultLemmaBudget = 2'000'000;

/// Tests the lemma's hypothesis on g with the pattern detectors and, when it
/// holds, checks the conclusion over every quantified object.
LemmaReport check_lemma(const Graph& g, LemmaId id, std::uint64_t budget = kDefaultLemmaBudget);

} // namespace isk4lab

#endif // ISK4LAB_LEMMAS_HPP
