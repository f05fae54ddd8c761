#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "isk4lab/color.hpp"
#include "isk4lab/decompose.hpp"
#include "isk4lab/patterns.hpp"

namespace isk4lab {

std::string_view to_string(Rule r) {
    switch (r) {
    case Rule::Trivial: return "Trivial";
    case Rule::Components: return "Components";
    case Rule::CliqueCutsetSplit: return "CliqueCutsetSplit";
    case Rule::Proper2CutsetSplit: return "Proper2CutsetSplit";
    case Rule::Multipartite: return "Multipartite";
    case Rule::SubcubicLineGraph: return "SubcubicLineGraph";
    case Rule::RichSquare: return "RichSquare";
    case Rule::K12nPeel: return "K12nPeel";
    case Rule::ExactFallback: return "ExactFallback";
    }
    return "?";
}

std::string_view to_string(Recombination r) {
    switch (r) {
    case Recombination::Agree: return "Agree";
    case Recombination::RecolorFirst: return "RecolorFirst";
    case Recombination::RecolorSecond: return "RecolorSecond";
    case Recombination::WholeExact: return "WholeExact";
    }
    return "?";
}

std::string_view to_string(FailureKind k) {
    switch (k) {
    case FailureKind::HypothesisViolation: return "hypothesis-violation";
    case FailureKind::ConjectureCounterexample: return "conjecture-counterexample";
    }
    return "?";
}

bool top_level_fallback(const ColoringTrace& t) {
    return !t.steps.empty() && t.steps.front().rule == Rule::ExactFallback;
}

int count_rule(const ColoringTrace& t, Rule r) {
    return static_cast<int>(std::count_if(t.steps.begin(), t.steps.end(), [r](const TraceStep& s) { return s.rule == r; }));
}

namespace {

constexpr int kColors = 4;

struct FailureSignal {
    StructuralFailure failure;
};

/// Colours indexed by input vertex; -1 outside the current subproblem.
using Colors = std::vector<int>;

/// g[sub] together with the translation between its labels and the input's.
class Local {
public:
    Local(const Graph& g, VertexSet sub) : sub_(induced_subgraph(g, sub)) {
        for (std::size_t i = 0; i < sub_.original.size(); ++i) index_[static_cast<std::size_t>(sub_.original[i])] = static_cast<int>(i);
    }

    const Graph& graph() const { return sub_.graph; }
    int up(int v) const { return sub_.original[static_cast<std::size_t>(v)]; }
    int down(int v) const { return index_[static_cast<std::size_t>(v)]; }

    VertexSet up(VertexSet s) const {
        VertexSet out;
        for (int v : s) out.insert(up(v));
        return out;
    }
    VertexSet down(VertexSet s) const {
        VertexSet out;
        for (int v : s) out.insert(down(v));
        return out;
    }
    std::vector<int> up(const std::vector<int>& vs) const {
        std::vector<int> out;
        for (int v : vs) out.push_back(up(v));
        return out;
    }
    std::vector<int> down(const std::vector<int>& vs) const {
        std::vector<int> out;
        for (int v : vs) out.push_back(down(v));
        return out;
    }
    Path up(const Path& p) const { return {up(p.vertices)}; }
    Path down(const Path& p) const { return {down(p.vertices)}; }

    K12nEmbedding up(const K12nEmbedding& h) const { return {up(h.a), {up(h.b[0]), up(h.b[1])}, up(h.c)}; }

    SquareLinkStructure up(const SquareLinkStructure& s) const { return map_square(s, [this](int v) { return up(v); }); }
    SquareLinkStructure down(const SquareLinkStructure& s) const { return map_square(s, [this](int v) { return down(v); }); }

    void write(Colors& out, const Coloring& local) const {
        for (std::size_t i = 0; i < local.color.size(); ++i) out[static_cast<std::size_t>(up(static_cast<int>(i)))] = local.color[i];
    }

private:
    template <typename F>
    static SquareLinkStructure map_square(const SquareLinkStructure& s, F f) {
        SquareLinkStructure out{{f(s.square[0]), f(s.square[1]), f(s.square[2]), f(s.square[3])}, {}, s.whole_graph};
        for (const auto& link : s.links) {
            Path p;
            for (int v : link.path.vertices) p.vertices.push_back(f(v));
            out.links.push_back({std::move(p)});
        }
        return out;
    }

    InducedSubgraph sub_;
    std::array<int, kMaxVertices> index_{};
};

[[noreturn]] void fail(FailureKind kind, Rule rule, std::string expectation, VertexSet sub, std::vector<int> witness) {
    throw FailureSignal{{kind, rule, std::move(expectation), sub, std::move(witness)}};
}

/// Relabels the colours of `block` so the pinned vertices receive the given
/// colours; the other colours go to the smallest unused values.
void merge_permuted(Colors& out, const Colors& c, VertexSet block, const std::vector<std::pair<int, int>>& pins) {
    std::array<int, 64> map{};
    map.fill(-1);
    unsigned taken = 0;
    for (auto [v, target] : pins) {
        map[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])] = target;
        taken |= 1U << target;
    }
    std::vector<int> used;
    for (int v : block) used.push_back(c[static_cast<std::size_t>(v)]);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int x : used) {
        if (map[static_cast<std::size_t>(x)] >= 0) continue;
        int t = 0;
        while ((taken >> t) & 1U) ++t;
        map[static_cast<std::size_t>(x)] = t;
        taken |= 1U << t;
    }
    for (int v : block) out[static_cast<std::size_t>(v)] = map[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])];
}

int distinct_colors(const Colors& c, VertexSet sub) {
    unsigned seen = 0;
    for (int v : sub) seen |= 1U << c[static_cast<std::size_t>(v)];
    return std::popcount(seen);
}

class Engine {
public:
    Engine(const Graph& g, const ColoringTrace* replay) : g_(g), replay_(replay) {}

    Colors solve(VertexSet sub, int depth) {
        if (depth > g_.order()) throw std::logic_error("structural_four_coloring: recursion deeper than n");
        const std::size_t idx = trace_.steps.size();
        if (replay_) {
            if (cursor_ >= replay_->steps.size()) throw std::invalid_argument("replay: trace too short");
            const TraceStep& step = replay_->steps[cursor_++];
            if (step.vertices != sub || step.depth != depth) throw std::invalid_argument("replay: trace does not match the recursion");
            if (!fits(step, sub)) throw std::invalid_argument("replay: step certificate does not fit the subproblem");
            trace_.steps.push_back(step);
        } else {
            trace_.steps.push_back(decide(sub, depth));
        }
        Colors out = execute(idx, sub, depth);
        if (distinct_colors(out, sub) > kColors) {
            fail(FailureKind::HypothesisViolation, trace_.steps[idx].rule, "rule produced more than four colours", sub, {});
        }
        return out;
    }

    const ColoringTrace& trace() const { return trace_; }
    bool consumed_all() const { return replay_ == nullptr || cursor_ == replay_->steps.size(); }

private:
    TraceStep decide(VertexSet sub, int depth) {
        TraceStep step;
        step.depth = depth;
        step.vertices = sub;
        const Local local(g_, sub);
        const Graph& h = local.graph();

        if (h.order() <= 4) {
            step.rule = Rule::Trivial;
            return step;
        }
        if (!is_connected(h)) {
            step.rule = Rule::Components;
            for (VertexSet c : components(h)) step.blocks.push_back(local.up(c));
            return step;
        }
        if (auto cut = find_clique_cutset(h, 3)) {
            step.rule = Rule::CliqueCutsetSplit;
            step.cutset = local.up(cut->set);
            for (VertexSet c : components(h, h.vertices() - cut->set)) step.blocks.push_back(local.up(c | cut->set));
            return step;
        }
        if (auto cut = find_proper_2cutset(h)) {
            step.rule = Rule::Proper2CutsetSplit;
            const VertexSet ab{cut->a, cut->b};
            step.cutset = local.up(ab);
            step.blocks = {local.up(cut->x | ab), local.up(cut->y | ab)};
            return step;
        }
        if (auto k33 = contains_fixed(h, FixedPattern::K33)) {
            auto cert = recognize_complete_multipartite(h);
            if (!cert) {
                fail(FailureKind::HypothesisViolation, Rule::Multipartite,
                     "K33 present and no clique cutset, but the graph is not complete multipartite", sub,
                     local.up(k33->mapping));
            }
            step.rule = Rule::Multipartite;
            for (VertexSet& p : cert->parts) p = local.up(p);
            step.multipartite = std::move(cert);
            return step;
        }
        auto prism = contains_fixed(h, FixedPattern::Prism);
        auto rich = prism ? std::nullopt : find_rich_square(h, RichSquareMode::Containment);
        if (prism || rich) {
            if (auto root = recognize_line_graph_subcubic(h)) {
                step.rule = Rule::SubcubicLineGraph;
                step.root = std::move(root);
                return step;
            }
            if (auto whole = find_rich_square(h, RichSquareMode::WholeGraph)) {
                step.rule = Rule::RichSquare;
                step.square = local.up(*whole);
                return step;
            }
            std::vector<int> witness;
            if (prism) {
                witness = local.up(prism->mapping);
            } else {
                witness = local.up(std::vector<int>(rich->square.begin(), rich->square.end()));
            }
            fail(FailureKind::HypothesisViolation, prism ? Rule::SubcubicLineGraph : Rule::RichSquare,
                 "prism or rich square present and no cutset, but the graph is neither a subcubic line graph nor a rich square",
                 sub, std::move(witness));
        }
        if (auto k12n = find_maximal_k12n(h, 3)) {
            const VertexSet hv = k12n->vertex_set();
            const VertexSet ab = k12n->a_side() | k12n->b_side();
            for (VertexSet comp : components(h, h.vertices() - hv)) {
                if (attachment(h, hv, comp) != ab) {
                    fail(FailureKind::HypothesisViolation, Rule::K12nPeel,
                         "component of G - V(H) attaches to H other than at A1 u A2", sub, local.up(comp).to_vector());
                }
            }
            step.rule = Rule::K12nPeel;
            step.k12n = local.up(*k12n);
            step.blocks = {sub - step.k12n->c_side()};
            return step;
        }
        step.rule = Rule::ExactFallback;
        return step;
    }

    /// Replayed steps are re-checked here instead of trusting their payloads.
    bool fits(const TraceStep& step, VertexSet sub) const {
        for (VertexSet b : step.blocks) {
            if (b.empty() || !b.subset_of(sub)) return false;
        }
        switch (step.rule) {
        case Rule::Trivial:
        case Rule::ExactFallback: return step.blocks.empty();
        case Rule::Components: {
            VertexSet cover;
            for (VertexSet b : step.blocks) cover |= b;
            return cover == sub && step.blocks == components(g_, sub);
        }
        case Rule::CliqueCutsetSplit:
            return !step.blocks.empty() && step.cutset.subset_of(sub) && is_clique(g_, step.cutset);
        case Rule::Proper2CutsetSplit:
            return step.blocks.size() == 2 && step.cutset.size() == 2 && (step.blocks[0] | step.blocks[1]) == sub;
        case Rule::Multipartite: {
            if (!step.multipartite || step.multipartite->parts.size() < 2) return false;
            VertexSet cover;
            for (VertexSet p : step.multipartite->parts) {
                if (p.intersects(cover) || !is_independent(g_, p)) return false;
                for (VertexSet q : step.multipartite->parts) {
                    if (p != q && !is_complete_to(g_, p, q)) return false;
                }
                cover |= p;
            }
            return cover == sub;
        }
        case Rule::SubcubicLineGraph: {
            const Local local(g_, sub);
            return step.root && is_valid_root_cert(local.graph(), *step.root);
        }
        case Rule::RichSquare: return step.square.has_value();
        case Rule::K12nPeel: {
            if (!step.k12n || step.blocks.size() != 1 || !is_valid_k12n(g_, *step.k12n)) return false;
            const K12nEmbedding& h = *step.k12n;
            if (!h.vertex_set().subset_of(sub) || step.blocks.front() != sub - h.c_side()) return false;
            for (int c : h.c) {
                if (!(g_.neighbors(c) & sub).subset_of(h.a_side() | h.b_side())) return false;
            }
            return true;
        }
        }
        return false;
    }

    Colors execute(std::size_t idx, VertexSet sub, int depth) {
        Colors out(static_cast<std::size_t>(g_.order()), -1);
        // copy: the recursion below grows trace_.steps
        const TraceStep step = trace_.steps[idx];
        switch (step.rule) {
        case Rule::Trivial: {
            const Local local(g_, sub);
            local.write(out, *chromatic_number_exact(local.graph()).coloring);
            break;
        }
        case Rule::Components:
            for (VertexSet b : step.blocks) {
                const Colors c = solve(b, depth + 1);
                for (int v : b) out[static_cast<std::size_t>(v)] = c[static_cast<std::size_t>(v)];
            }
            break;
        case Rule::CliqueCutsetSplit: {
            const Colors first = solve(step.blocks.front(), depth + 1);
            for (int v : step.blocks.front()) out[static_cast<std::size_t>(v)] = first[static_cast<std::size_t>(v)];
            std::vector<std::pair<int, int>> pins;
            for (int s : step.cutset) pins.emplace_back(s, first[static_cast<std::size_t>(s)]);
            for (std::size_t i = 1; i < step.blocks.size(); ++i) {
                const Colors c = solve(step.blocks[i], depth + 1);
                merge_permuted(out, c, step.blocks[i], pins);
            }
            break;
        }
        case Rule::Proper2CutsetSplit: split_two(idx, step, out, depth); break;
        case Rule::Multipartite:
            for (std::size_t i = 0; i < step.multipartite->parts.size(); ++i) {
                for (int v : step.multipartite->parts[i]) out[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
            break;
        case Rule::SubcubicLineGraph: {
            const Local local(g_, sub);
            local.write(out, color_subcubic_line_graph(local.graph(), *step.root));
            break;
        }
        case Rule::RichSquare: {
            const Local local(g_, sub);
            auto c = color_rich_square(local.graph(), local.down(*step.square));
            if (!c) throw std::invalid_argument("rich square structure does not fit the subproblem");
            local.write(out, *c);
            break;
        }
        case Rule::K12nPeel: {
            const Colors rest = solve(step.blocks.front(), depth + 1);
            for (int v : step.blocks.front()) out[static_cast<std::size_t>(v)] = rest[static_cast<std::size_t>(v)];
            const K12nEmbedding& h = *step.k12n;
            unsigned seen = 0;
            for (int v : h.a_side() | h.b_side()) seen |= 1U << rest[static_cast<std::size_t>(v)];
            int free_color = 0;
            while ((seen >> free_color) & 1U) ++free_color;
            for (int c : h.c) out[static_cast<std::size_t>(c)] = free_color;
            break;
        }
        case Rule::ExactFallback: {
            const Local local(g_, sub);
            auto exact = chromatic_number_exact(local.graph(), kColors);
            if (exact.bound_exceeded) {
                if (auto isk4 = contains_isk4(local.graph())) {
                    fail(FailureKind::HypothesisViolation, Rule::ExactFallback,
                         "needs five colours but contains an ISK4", sub, local.up(*isk4).to_vector());
                }
                fail(FailureKind::ConjectureCounterexample, Rule::ExactFallback,
                     "ISK4-free graph that is not 4-colourable", sub, sub.to_vector());
            }
            local.write(out, *exact.coloring);
            break;
        }
        }
        return out;
    }

    /// Colours g[block] with at most four colours so that a and b get equal
    /// (same) or different colours.
    std::optional<Colors> constrained(VertexSet block, int a, int b, bool same) const {
        const Local local(g_, block);
        const Graph& h = local.graph();
        const int la = local.down(a);
        const int lb = local.down(b);
        std::vector<VertexSet> rows(static_cast<std::size_t>(h.order()));
        for (int v = 0; v < h.order(); ++v) rows[static_cast<std::size_t>(v)] = h.neighbors(v);
        if (same) {
            // lb becomes a copy of la's constraints; both get one colour
            const VertexSet both = rows[static_cast<std::size_t>(la)] | rows[static_cast<std::size_t>(lb)];
            for (int v = 0; v < h.order(); ++v) {
                if (both.contains(v)) {
                    rows[static_cast<std::size_t>(v)].insert(la);
                    rows[static_cast<std::size_t>(v)].erase(lb);
                }
            }
            rows[static_cast<std::size_t>(la)] = both;
            rows[static_cast<std::size_t>(lb)] = VertexSet{};
        } else {
            rows[static_cast<std::size_t>(la)].insert(lb);
            rows[static_cast<std::size_t>(lb)].insert(la);
        }
        auto c = color_with_at_most(Graph::from_rows(rows), kColors);
        if (!c) return std::nullopt;
        if (same) c->color[static_cast<std::size_t>(lb)] = c->color[static_cast<std::size_t>(la)];
        Colors out(static_cast<std::size_t>(g_.order()), -1);
        local.write(out, *c);
        return out;
    }

    void split_two(std::size_t idx, const TraceStep& step, Colors& out, int depth) {
        const int a = step.cutset.first();
        const int b = step.cutset.last();
        const VertexSet first = step.blocks[0];
        const VertexSet second = step.blocks[1];
        Colors c1 = solve(first, depth + 1);
        Colors c2 = solve(second, depth + 1);
        auto same = [&](const Colors& c) { return c[static_cast<std::size_t>(a)] == c[static_cast<std::size_t>(b)]; };

        Recombination how = Recombination::Agree;
        if (replay_) {
            how = step.recombination;
            std::optional<Colors> redo;
            if (how == Recombination::RecolorFirst && !(redo = constrained(first, a, b, same(c2)))) {
                throw std::invalid_argument("replay: recorded recolouring is infeasible");
            }
            if (how == Recombination::RecolorSecond && !(redo = constrained(second, a, b, same(c1)))) {
                throw std::invalid_argument("replay: recorded recolouring is infeasible");
            }
            if (how == Recombination::RecolorFirst) c1 = std::move(*redo);
            if (how == Recombination::RecolorSecond) c2 = std::move(*redo);
        } else if (same(c1) != same(c2)) {
            const bool first_smaller = first.size() < second.size();
            const std::array<Recombination, 2> order = first_smaller
                ? std::array{Recombination::RecolorFirst, Recombination::RecolorSecond}
                : std::array{Recombination::RecolorSecond, Recombination::RecolorFirst};
            how = Recombination::WholeExact;
            for (Recombination r : order) {
                auto redo = r == Recombination::RecolorFirst ? constrained(first, a, b, same(c2))
                                                             : constrained(second, a, b, same(c1));
                if (redo) {
                    (r == Recombination::RecolorFirst ? c1 : c2) = std::move(*redo);
                    how = r;
                    break;
                }
            }
            trace_.steps[idx].recombination = how;
        }

        const VertexSet sub = first | second;
        if (how == Recombination::WholeExact) {
            const Local local(g_, sub);
            auto exact = chromatic_number_exact(local.graph(), kColors);
            if (exact.bound_exceeded) {
                fail(FailureKind::HypothesisViolation, Rule::Proper2CutsetSplit,
                     "blocks of a proper 2-cutset could not be recombined within four colours", sub, {a, b});
            }
            local.write(out, *exact.coloring);
            return;
        }
        for (int v : first) out[static_cast<std::size_t>(v)] = c1[static_cast<std::size_t>(v)];
        merge_permuted(out, c2, second,
                       {{a, c1[static_cast<std::size_t>(a)]}, {b, c1[static_cast<std::size_t>(b)]}});
    }

    const Graph& g_;
    const ColoringTrace* replay_;
    std::size_t cursor_ = 0;
    ColoringTrace trace_;
};

Coloring finish(const Graph& g, const Colors& colors) {
    Coloring c = canonicalize(Coloring{colors, 0});
    if (!is_proper_coloring(g, c)) throw std::logic_error("structural_four_coloring produced an improper colouring");
    return c;
}

} // namespace

StructuralResult structural_four_coloring(const Graph& g, const StructuralOptions& opts) {
    StructuralResult result;
    if (opts.verify_isk4_free) {
        if (auto isk4 = contains_isk4(g)) {
            result.failure = StructuralFailure{FailureKind::HypothesisViolation, Rule::Trivial, "input contains an ISK4",
                                               g.vertices(), isk4->to_vector()};
            return result;
        }
    }
    Engine engine(g, nullptr);
    try {
        result.coloring = finish(g, engine.solve(g.vertices(), 0));
    } catch (FailureSignal& f) {
        result.failure = std::move(f.failure);
    }
    result.trace = engine.trace();
    return result;
}

Coloring replay_trace(const Graph& g, const ColoringTrace& trace) {
    Engine engine(g, &trace);
    Colors colors;
    try {
        colors = engine.solve(g.vertices(), 0);
    } catch (FailureSignal&) {
        throw std::invalid_argument("replay: trace leads to a failure");
    }
    if (!engine.consumed_all()) throw std::invalid_argument("replay: trace has unused steps");
    return finish(g, colors);
}

} // namespace isk4lab
