#include "isk4lab/decompose.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace isk4lab {

namespace {

bool disconnects(const Graph& g, VertexSet s) {
    const VertexSet rest = g.vertices() - s;
    return rest.size() >= 2 && !is_connected(g, rest);
}

} // namespace

bool is_valid_cutset(const Graph& g, const CutsetFinding& f) {
    if (const auto* c = std::get_if<CliqueCutset>(&f)) {
        return c->set.subset_of(g.vertices()) && is_clique(g, c->set) && disconnects(g, c->set);
    }
    const auto& p = std::get<Proper2Cutset>(f);
    if (p.a < 0 || p.b < 0 || p.a >= g.order() || p.b >= g.order() || p.a == p.b) return false;
    if (g.adjacent(p.a, p.b)) return false;
    const VertexSet ab{p.a, p.b};
    if (p.x.empty() || p.y.empty() || p.x.intersects(p.y) || p.x.intersects(ab) || p.y.intersects(ab)) return false;
    if ((p.x | p.y | ab) != g.vertices()) return false;
    if (!is_anticomplete_to(g, p.x, p.y)) return false;
    return !induces_path_between(g, p.x | ab, p.a, p.b) && !induces_path_between(g, p.y | ab, p.a, p.b);
}

std::optional<CliqueCutset> find_clique_cutset(const Graph& g, int kmax) {
    std::optional<CliqueCutset> found;
    // cliques in sorted-list order: a clique precedes its extensions
    auto dfs = [&](auto& self, VertexSet clique, VertexSet candidates) -> bool {
        if (disconnects(g, clique)) {
            found = CliqueCutset{clique};
            return true;
        }
        if (clique.size() == kmax) return false;
        for (int v : candidates) {
            const VertexSet next = (candidates & g.neighbors(v)) - VertexSet::range(v + 1);
            if (self(self, clique | VertexSet::single(v), next)) return true;
        }
        return false;
    };
    dfs(dfs, VertexSet{}, g.vertices());
    return found;
}

std::optional<Proper2Cutset> find_proper_2cutset(const Graph& g) {
    for (int a = 0; a < g.order(); ++a) {
        for (int b = a + 1; b < g.order(); ++b) {
            if (g.adjacent(a, b)) continue;
            const VertexSet ab{a, b};
            const auto comps = components(g, g.vertices() - ab);
            if (comps.size() < 2) continue;
            const std::size_t k = comps.size();
            if (k > 32) throw std::length_error("find_proper_2cutset: too many components");
            // comps[0] always goes to X; bit i-1 of mask sends comps[i] to Y
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                VertexSet x = comps[0];
                VertexSet y;
                for (std::size_t i = 1; i < k; ++i) ((mask >> (i - 1)) & 1U ? y : x) |= comps[i];
                if (induces_path_between(g, x | ab, a, b) || induces_path_between(g, y | ab, a, b)) continue;
                return Proper2Cutset{a, b, x, y};
            }
        }
    }
    return std::nullopt;
}

bool is_valid_multipartite(const Graph& g, const MultipartiteCert& cert) {
    if (cert.parts.size() < 2) return false;
    VertexSet seen;
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const VertexSet p = cert.parts[i];
        if (p.empty() || p.intersects(seen) || !is_independent(g, p)) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (!is_complete_to(g, p, cert.parts[j])) return false;
        }
        seen |= p;
    }
    return seen == g.vertices();
}

std::optional<MultipartiteCert> recognize_complete_multipartite(const Graph& g) {
    MultipartiteCert cert;
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        const int u = rest.first();
        const VertexSet part = g.vertices() - g.neighbors(u);
        for (int w : part) {
            if (g.vertices() - g.neighbors(w) != part) return std::nullopt;
        }
        cert.parts.push_back(part);
        rest -= part;
    }
    if (cert.parts.size() < 2) return std::nullopt;
    return cert;
}

// ---------------------------------------------------------------------------
// line graphs of subcubic graphs

bool is_valid_root_cert(const Graph& g, const SubcubicRootCert& cert) {
    const Graph& r = cert.root;
    if (r.max_degree() > 3 || static_cast<int>(cert.ends.size()) != g.order() || r.size() != g.order()) return false;
    std::set<Edge> seen;
    for (auto [x, y] : cert.ends) {
        if (x < 0 || y < 0 || x >= r.order() || y >= r.order() || !r.adjacent(x, y)) return false;
        if (!seen.insert(std::minmax(x, y)).second) return false;
    }
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            const auto [a, b] = cert.ends[static_cast<std::size_t>(u)];
            const auto [c, d] = cert.ends[static_cast<std::size_t>(v)];
            const bool share = a == c || a == d || b == c || b == d;
            if (share != g.adjacent(u, v)) return false;
        }
    }
    return true;
}

namespace {

class KrauszSearch {
public:
    explicit KrauszSearch(const Graph& g) : g_(g) {
        for (int v = 0; v < g.order(); ++v) rest_[static_cast<std::size_t>(v)] = g.neighbors(v);
    }

    bool run() { return cover(); }
    const std::vector<VertexSet>& cliques() const { return cliques_; }

private:
    bool feasible(int x) const {
        const VertexSet r = rest_[static_cast<std::size_t>(x)];
        switch (count_[static_cast<std::size_t>(x)]) {
        case 0: return r.size() <= 4;
        case 1: return r.size() <= 2 && is_clique(g_, r);
        default: return r.empty();
        }
    }

    bool cover() {
        int u = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (!rest_[static_cast<std::size_t>(v)].empty()) {
                u = v;
                break;
            }
        }
        if (u < 0) return true;
        const int v = rest_[static_cast<std::size_t>(u)].first();

        std::vector<VertexSet> options{VertexSet{u, v}};
        for (int w : rest_[static_cast<std::size_t>(u)] & rest_[static_cast<std::size_t>(v)]) options.push_back(VertexSet{u, v, w});

        for (VertexSet q : options) {
            bool ok = true;
            for (int x : q) ok = ok && count_[static_cast<std::size_t>(x)] < 2;
            if (!ok) continue;
            apply(q, +1);
            bool alive = true;
            for (int x : q) alive = alive && feasible(x);
            if (alive && cover()) return true;
            apply(q, -1);
        }
        return false;
    }

    void apply(VertexSet q, int dir) {
        for (int x : q) {
            count_[static_cast<std::size_t>(x)] += dir;
            if (dir > 0) {
                rest_[static_cast<std::size_t>(x)] -= q;
            } else {
                rest_[static_cast<std::size_t>(x)] |= q - VertexSet::single(x);
            }
        }
        if (dir > 0) {
            cliques_.push_back(q);
        } else {
            cliques_.pop_back();
        }
    }

    const Graph& g_;
    std::array<VertexSet, kMaxVertices> rest_{};
    std::array<int, kMaxVertices> count_{};
    std::vector<VertexSet> cliques_;
};

} // namespace

std::optional<SubcubicRootCert> recognize_line_graph_subcubic(const Graph& g) {
    KrauszSearch search(g);
    if (!search.run()) return std::nullopt;

    const auto& cliques = search.cliques();
    std::vector<std::vector<int>> owners(static_cast<std::size_t>(g.order()));
    for (std::size_t q = 0; q < cliques.size(); ++q) {
        for (int v : cliques[q]) owners[static_cast<std::size_t>(v)].push_back(static_cast<int>(q));
    }
    int next = static_cast<int>(cliques.size());
    SubcubicRootCert cert;
    for (auto& own : owners) {
        while (own.size() < 2) own.push_back(next++);
        cert.ends.emplace_back(own[0], own[1]);
    }
    if (next > kMaxVertices) throw std::length_error("recognize_line_graph_subcubic: root too large");
    cert.root = Graph::from_edges(next, cert.ends);
    return cert;
}

} // namespace isk4lab
