#include "isk4lab/lemmas.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace isk4lab {

std::string_view to_string(AttachmentTag t) {
    switch (t) {
    case AttachmentTag::Empty: return "Empty";
    case AttachmentTag::OneVertex: return "OneVertex";
    case AttachmentTag::OneEdge: return "OneEdge";
    case AttachmentTag::Other: return "Other";
    }
    return "?";
}

std::string_view to_string(ComponentAttachmentTag t) {
    switch (t) {
    case ComponentAttachmentTag::Empty: return "Empty";
    case ComponentAttachmentTag::Clique: return "Clique";
    case ComponentAttachmentTag::A1A2: return "A1A2";
    case ComponentAttachmentTag::Other: return "Other";
    }
    return "?";
}

std::string_view to_string(LemmaId id) {
    switch (id) {
    case LemmaId::Link: return "L-LINK";
    case LemmaId::VertexAttachment: return "L-VOH";
    case LemmaId::ComponentAttachment: return "L-COMP";
    }
    return "?";
}

std::optional<LemmaId> parse_lemma_id(std::string_view s) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "l-link") return LemmaId::Link;
    if (lower == "l-voh") return LemmaId::VertexAttachment;
    if (lower == "l-comp") return LemmaId::ComponentAttachment;
    return std::nullopt;
}

std::string_view to_string(LemmaStatus s) {
    switch (s) {
    case LemmaStatus::Inapplicable: return "inapplicable";
    case LemmaStatus::Holds: return "holds";
    case LemmaStatus::Violated: return "violated";
    case LemmaStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// linkage

namespace {

struct BudgetExhausted {};

class StepBudget {
public:
    explicit StepBudget(std::uint64_t limit) : limit_(limit) {}
    void charge() {
        if (++used_ > limit_) throw BudgetExhausted{};
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

class LinkSearch {
public:
    LinkSearch(const Graph& g, VertexSet cycle, int v, StepBudget& budget)
        : g_(g), cycle_(cycle), v_(v), free_(g.vertices() - cycle - VertexSet::single(v)), budget_(budget) {
        // extend() holds a reference to the last path across recursion
        paths_.reserve(3);
    }

    std::optional<LinkWitness> run() {
        const VertexSet direct = g_.neighbors(v_) & cycle_;
        if (direct.size() > 3) return std::nullopt;
        for (int c : direct) paths_.push_back(Path{{v_, c}});
        if (next_path(direct, VertexSet{}, -1)) {
            LinkWitness w;
            std::copy(paths_.begin(), paths_.end(), w.paths.begin());
            return w;
        }
        return std::nullopt;
    }

private:
    // ends: cycle vertices already used; used: interior vertices of chosen paths
    bool next_path(VertexSet ends, VertexSet used, int last_start) {
        budget_.charge();
        if (paths_.size() == 3) return true;
        const VertexSet blocked = used | neighborhood(g_, used);
        for (int u : g_.neighbors(v_) & (free_ - blocked)) {
            if (u <= last_start) continue;
            paths_.push_back(Path{{v_, u}});
            if (extend(ends, used, blocked, u)) return true;
            paths_.pop_back();
        }
        return false;
    }

    bool extend(VertexSet ends, VertexSet used, VertexSet blocked, int start) {
        budget_.charge();
        Path& path = paths_.back();
        const int x = path.back();
        const VertexSet on_cycle = g_.neighbors(x) & cycle_;
        if (on_cycle.size() == 1) {
            const int c = on_cycle.first();
            if (ends.contains(c)) return false;
            VertexSet interior = path.vertex_set() - VertexSet::single(v_);
            path.vertices.push_back(c);
            if (next_path(ends | on_cycle, used | interior, start)) return true;
            path.vertices.pop_back();
            return false;
        }
        if (!on_cycle.empty()) return false;

        const VertexSet earlier = path.vertex_set() - VertexSet::single(x);
        for (int y : g_.neighbors(x) & (free_ - blocked - earlier)) {
            if (g_.neighbors(y).intersects(earlier)) continue; // chord, incl. to v
            path.vertices.push_back(y);
            if (extend(ends, used, blocked, start)) return true;
            path.vertices.pop_back();
        }
        return false;
    }

    const Graph& g_;
    VertexSet cycle_;
    int v_;
    VertexSet free_;
    StepBudget& budget_;
    std::vector<Path> paths_;
};

void require_cycle(const Graph& g, std::span<const int> cycle, int v) {
    if (!is_induced_cycle(g, cycle)) throw std::invalid_argument("is_linked: cycle is not an induced cycle");
    if (v < 0 || v >= g.order()) throw std::invalid_argument("is_linked: vertex out of range");
    if (VertexSet::from(cycle).contains(v)) throw std::invalid_argument("is_linked: vertex lies on the cycle");
}

} // namespace

std::optional<LinkWitness> is_linked(const Graph& g, std::span<const int> cycle, int v) {
    require_cycle(g, cycle, v);
    StepBudget unlimited(UINT64_MAX);
    return LinkSearch(g, VertexSet::from(cycle), v, unlimited).run();
}

bool verify_link_witness(const Graph& g, std::span<const int> cycle, int v, const LinkWitness& w) {
    if (!is_induced_cycle(g, cycle)) return false;
    const VertexSet c = VertexSet::from(cycle);
    if (v < 0 || v >= g.order() || c.contains(v)) return false;

    VertexSet ends;
    for (const Path& p : w.paths) {
        if (p.vertices.size() < 2 || !is_induced_path(g, p)) return false;
        if (p.front() != v || !c.contains(p.back())) return false;
        if (p.interior().intersects(c)) return false;
        // only the last edge of the path may reach C (v is covered below)
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
            const VertexSet allowed = i + 2 == p.vertices.size() ? VertexSet::single(p.back()) : VertexSet{};
            if ((g.neighbors(p.vertices[i]) & c) != allowed) return false;
        }
        ends.insert(p.back());
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            const VertexSet pi = w.paths[i].vertex_set();
            const VertexSet pj = w.paths[j].vertex_set();
            if ((pi & pj) != VertexSet::single(v)) return false;
            for (int x : pi) {
                for (int y : g.neighbors(x) & pj) {
                    const bool at_v = x == v || y == v;
                    const bool in_c = c.contains(x) && c.contains(y);
                    if (!at_v && !in_c) return false;
                }
            }
        }
    }
    return (g.neighbors(v) & c).subset_of(ends);
}

// ---------------------------------------------------------------------------
// attachments

AttachmentClass classify_vertex_attachment(const Graph& g, const K12nEmbedding& h, int v) {
    if (!is_valid_k12n(g, h)) throw std::invalid_argument("classify_vertex_attachment: invalid embedding");
    if (v < 0 || v >= g.order() || h.vertex_set().contains(v)) {
        throw std::invalid_argument("classify_vertex_attachment: vertex must lie outside H");
    }
    const VertexSet att = attachment(g, h.vertex_set(), VertexSet::single(v));
    AttachmentClass out{AttachmentTag::Other, att};
    if (att.empty()) {
        out.tag = AttachmentTag::Empty;
    } else if (att.size() == 1) {
        out.tag = AttachmentTag::OneVertex;
    } else if (att.size() == 2 && is_clique(g, att)) {
        out.tag = AttachmentTag::OneEdge;
    }
    return out;
}

ComponentAttachmentClass classify_component_attachment(const Graph& g, const K12nEmbedding& h, VertexSet comp) {
    if (!is_valid_k12n(g, h) || h.n() < 3) {
        throw std::invalid_argument("classify_component_attachment: needs a valid K_{1,2,n} with n >= 3");
    }
    const VertexSet hv = h.vertex_set();
    const VertexSet rest = g.vertices() - hv;
    if (comp.empty() || !comp.subset_of(rest) || !is_connected(g, comp) ||
        neighborhood(g, comp).intersects(rest)) {
        throw std::invalid_argument("classify_component_attachment: not a component of G - V(H)");
    }
    const VertexSet att = attachment(g, hv, comp);
    ComponentAttachmentClass out{ComponentAttachmentTag::Other, att};
    if (att.empty()) {
        out.tag = ComponentAttachmentTag::Empty;
    } else if (is_clique(g, att)) {
        out.tag = ComponentAttachmentTag::Clique;
    } else if (att == (h.a_side() | h.b_side())) {
        out.tag = ComponentAttachmentTag::A1A2;
    }
    return out;
}

// ---------------------------------------------------------------------------
// lemma checks

namespace {

bool free_of(const Graph& g, std::initializer_list<FixedPattern> patterns) {
    for (FixedPattern p : patterns) {
        if (contains_fixed(g, p)) return false;
    }
    return true;
}

LemmaReport check_link(const Graph& g, std::uint64_t budget) {
    LemmaReport r;
    r.id = LemmaId::Link;
    if (contains_isk4(g)) return r;
    r.hypothesis_satisfied = true;
    StepBudget steps(budget);
    try {
        for_each_induced_cycle(g, [&](std::span<const int> cycle) {
            steps.charge();
            const VertexSet c = VertexSet::from(cycle);
            for (int v : g.vertices() - c) {
                // fewer than three ways out of v cannot give three paths
                if (g.degree(v) < 3) continue;
                if (auto w = LinkSearch(g, c, v, steps).run()) {
                    r.counterwitness = LinkCounterwitness{{cycle.begin(), cycle.end()}, v, std::move(*w)};
                    return false;
                }
            }
            return true;
        });
    } catch (const BudgetExhausted&) {
        r.status = LemmaStatus::BudgetExceeded;
        r.steps = steps.used();
        return r;
    }
    r.steps = steps.used();
    r.conclusion_holds = !r.counterwitness.has_value();
    r.status = *r.conclusion_holds ? LemmaStatus::Holds : LemmaStatus::Violated;
    return r;
}

LemmaReport check_vertex_attachment(const Graph& g) {
    LemmaReport r;
    r.id = LemmaId::VertexAttachment;
    if (contains_isk4(g) || !free_of(g, {FixedPattern::K33, FixedPattern::K222})) return r;
    const auto embeddings = maximal_k12n_embeddings(g, 2);
    if (embeddings.empty()) return r;
    r.hypothesis_satisfied = true;
    for (const auto& h : embeddings) {
        for (int v : g.vertices() - h.vertex_set()) {
            const auto cls = classify_vertex_attachment(g, h, v);
            if (cls.tag == AttachmentTag::Other) {
                r.counterwitness = VertexAttachmentCounterwitness{h, v, cls.set};
                r.conclusion_holds = false;
                r.status = LemmaStatus::Violated;
                return r;
            }
        }
    }
    r.conclusion_holds = true;
    r.status = LemmaStatus::Holds;
    return r;
}

LemmaReport check_component_attachment(const Graph& g) {
    LemmaReport r;
    r.id = LemmaId::ComponentAttachment;
    if (contains_isk4(g) || !free_of(g, {FixedPattern::K33, FixedPattern::K222, FixedPattern::Prism})) return r;
    std::vector<K12nEmbedding> embeddings;
    for (auto& h : maximal_k12n_embeddings(g, 3)) {
        if (h.vertex_set() != g.vertices()) embeddings.push_back(std::move(h));
    }
    if (embeddings.empty()) return r;
    r.hypothesis_satisfied = true;
    for (const auto& h : embeddings) {
        for (VertexSet comp : components(g, g.vertices() - h.vertex_set())) {
            const auto cls = classify_component_attachment(g, h, comp);
            if (cls.tag == ComponentAttachmentTag::Other) {
                r.counterwitness = ComponentAttachmentCounterwitness{h, comp, cls.set};
                r.conclusion_holds = false;
                r.status = LemmaStatus::Violated;
                return r;
            }
        }
    }
    r.conclusion_holds = true;
    r.status = LemmaStatus::Holds;
    return r;
}

} // namespace

LemmaReport check_lemma(const Graph& g, LemmaId id, std::uint64_t budget) {
    switch (id) {
    case LemmaId::Link: return check_link(g, budget);
    case LemmaId::VertexAttachment: return check_vertex_attachment(g);
    case LemmaId::ComponentAttachment: return check_component_attachment(g);
    }
    throw std::invalid_argument("unknown lemma id");
}

} // namespace isk4lab
