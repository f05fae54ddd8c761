#include "isk4lab/serialize.hpp"

namespace isk4lab {

Json to_json(VertexSet s) { return s.to_vector(); }

Json to_json(const Path& p) { return p.vertices; }

Json to_json(const K12nEmbedding& h) {
    return Json{{"a", h.a}, {"b", {h.b[0], h.b[1]}}, {"c", h.c}};
}

Json to_json(const SquareLinkStructure& s) {
    Json links = Json::array();
    for (const auto& link : s.links) links.push_back(to_json(link.path));
    return Json{{"square", s.square}, {"links", links}, {"whole_graph", s.whole_graph}};
}

Json to_json(const LinkWitness& w) {
    Json paths = Json::array();
    for (const auto& p : w.paths) paths.push_back(to_json(p));
    return paths;
}

Json to_json(const Counterwitness& w) {
    if (const auto* c = std::get_if<LinkCounterwitness>(&w)) {
        return Json{{"cycle", c->cycle}, {"v", c->v}, {"paths", to_json(c->link)}};
    }
    if (const auto* c = std::get_if<VertexAttachmentCounterwitness>(&w)) {
        return Json{{"h", to_json(c->h)}, {"v", c->v}, {"attachment", to_json(c->attachment)}};
    }
    const auto& c = std::get<ComponentAttachmentCounterwitness>(w);
    return Json{{"h", to_json(c.h)}, {"component", to_json(c.component)}, {"attachment", to_json(c.attachment)}};
}

Json to_json(const LemmaReport& r) {
    Json j{{"lemma", to_string(r.id)},
           {"status", to_string(r.status)},
           {"hypothesis_satisfied", r.hypothesis_satisfied},
           {"conclusion_holds", nullptr},
           {"counterwitness", nullptr}};
    if (r.conclusion_holds) j["conclusion_holds"] = *r.conclusion_holds;
    if (r.counterwitness) j["counterwitness"] = to_json(*r.counterwitness);
    if (r.id == LemmaId::Link) j["steps"] = r.steps;
    return j;
}

Json to_json(const CutsetFinding& f) {
    if (const auto* c = std::get_if<CliqueCutset>(&f)) {
        return Json{{"kind", "clique_cutset"}, {"set", to_json(c->set)}};
    }
    const auto& p = std::get<Proper2Cutset>(f);
    return Json{{"kind", "proper_2_cutset"}, {"a", p.a}, {"b", p.b}, {"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

Json to_json(const MultipartiteCert& c) {
    Json parts = Json::array();
    for (VertexSet p : c.parts) parts.push_back(to_json(p));
    return Json{{"parts", parts}};
}

Json to_json(const SubcubicRootCert& c) {
    Json edges = Json::array();
    for (auto [x, y] : c.root.edges()) edges.push_back({x, y});
    Json ends = Json::array();
    for (auto [x, y] : c.ends) ends.push_back({x, y});
    return Json{{"root_order", c.root.order()}, {"root_edges", edges}, {"ends", ends}};
}

Json to_json(const Coloring& c) { return Json{{"k", c.k}, {"colors", c.color}}; }

Json to_json(const TraceStep& s) {
    Json j{{"rule", to_string(s.rule)}, {"depth", s.depth}, {"vertices", to_json(s.vertices)}};
    if (!s.blocks.empty()) {
        Json blocks = Json::array();
        for (VertexSet b : s.blocks) blocks.push_back(to_json(b));
        j["blocks"] = blocks;
    }
    if (s.rule == Rule::CliqueCutsetSplit || s.rule == Rule::Proper2CutsetSplit) j["cutset"] = to_json(s.cutset);
    if (s.rule == Rule::Proper2CutsetSplit) j["recombination"] = to_string(s.recombination);
    if (s.multipartite) j["multipartite"] = to_json(*s.multipartite);
    if (s.root) j["root"] = to_json(*s.root);
    if (s.square) j["square"] = to_json(*s.square);
    if (s.k12n) j["k12n"] = to_json(*s.k12n);
    return j;
}

Json to_json(const ColoringTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) steps.push_back(to_json(s));
    return steps;
}

Json to_json(const StructuralFailure& f) {
    return Json{{"kind", to_string(f.kind)},
                {"rule", to_string(f.rule)},
                {"expectation", f.expectation},
                {"vertices", to_json(f.vertices)},
                {"witness", f.witness}};
}

} // namespace isk4lab
