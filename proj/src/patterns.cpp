#include "isk4lab/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace isk4lab {

std::string_view to_string(FixedPattern p) {
    switch (p) {
    case FixedPattern::K33: return "k33";
    case FixedPattern::K222: return "k222";
    case FixedPattern::Prism: return "prism";
    case FixedPattern::Wheel: return "wheel";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// generic induced embedding

namespace {

class Embedder {
public:
    Embedder(const Graph& g, const Graph& p) : g_(g), p_(p), map_(static_cast<std::size_t>(p.order()), -1) {}

    bool run() { return extend(0, VertexSet{}); }
    std::vector<int> mapping() const { return map_; }

private:
    bool extend(int i, VertexSet used) {
        if (i == p_.order()) return true;
        const VertexSet pattern_back = p_.neighbors(i) & VertexSet::range(i);
        for (int h : g_.vertices() - used) {
            if (g_.degree(h) < p_.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                ok = g_.adjacent(h, map_[static_cast<std::size_t>(j)]) == pattern_back.contains(j);
            }
            if (!ok) continue;
            map_[static_cast<std::size_t>(i)] = h;
            if (extend(i + 1, used | VertexSet::single(h))) return true;
        }
        map_[static_cast<std::size_t>(i)] = -1;
        return false;
    }

    const Graph& g_;
    const Graph& p_;
    std::vector<int> map_;
};

} // namespace

std::optional<PatternWitness> contains_induced(const Graph& g, const Graph& pattern) {
    if (pattern.order() > g.order()) return std::nullopt;
    Embedder e(g, pattern);
    if (!e.run()) return std::nullopt;
    return PatternWitness{e.mapping()};
}

bool is_induced_embedding(const Graph& g, const Graph& pattern, const PatternWitness& w) {
    if (static_cast<int>(w.mapping.size()) != pattern.order()) return false;
    VertexSet used;
    for (int h : w.mapping) {
        if (h < 0 || h >= g.order() || used.contains(h)) return false;
        used.insert(h);
    }
    for (int i = 0; i < pattern.order(); ++i) {
        for (int j = i + 1; j < pattern.order(); ++j) {
            if (pattern.adjacent(i, j) != g.adjacent(w.mapping[static_cast<std::size_t>(i)], w.mapping[static_cast<std::size_t>(j)])) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// subset searches (ISK4, prism)

bool is_k4_subdivision(const Graph& g, VertexSet s) {
    if (s.size() < 4) return false;
    VertexSet branch;
    for (int v : s) {
        const int d = (g.neighbors(v) & s).size();
        if (d == 3) {
            branch.insert(v);
        } else if (d != 2) {
            return false;
        }
    }
    if (branch.size() != 4 || !is_connected(g, s)) return false;

    for (int b : branch) {
        VertexSet ends;
        for (int first : g.neighbors(b) & s) {
            int prev = b;
            int cur = first;
            while (!branch.contains(cur)) {
                const int next = ((g.neighbors(cur) & s) - VertexSet::single(prev)).first();
                prev = cur;
                cur = next;
            }
            if (cur == b || ends.contains(cur)) return false;
            ends.insert(cur);
        }
    }
    return true;
}

bool is_prism(const Graph& g, VertexSet s) {
    if (s.size() < 6) return false;
    VertexSet branch;
    for (int v : s) {
        const int d = (g.neighbors(v) & s).size();
        if (d == 3) {
            branch.insert(v);
        } else if (d != 2) {
            return false;
        }
    }
    if (branch.size() != 6 || !is_connected(g, s)) return false;

    std::vector<VertexSet> triangles;
    for (int u : s) {
        for (int v : g.neighbors(u) & (s - VertexSet::range(u + 1))) {
            for (int w : g.neighbors(u) & g.neighbors(v) & (s - VertexSet::range(v + 1))) {
                triangles.push_back(VertexSet{u, v, w});
                if (triangles.size() > 2) return false;
            }
        }
    }
    if (triangles.size() != 2 || triangles[0].intersects(triangles[1]) ||
        (triangles[0] | triangles[1]) != branch) {
        return false;
    }

    // Strip the triangle edges; what remains must be three paths from one
    // triangle to the other covering s.
    auto stripped = [&](int v) {
        VertexSet nb = g.neighbors(v) & s;
        for (const VertexSet& t : triangles) {
            if (t.contains(v)) nb -= t;
        }
        return nb;
    };
    int covered = 0;
    VertexSet ends;
    for (int x : triangles[0]) {
        int prev = x;
        int cur = stripped(x).first();
        covered += 2;
        while (!branch.contains(cur)) {
            const int next = (stripped(cur) - VertexSet::single(prev)).first();
            prev = cur;
            cur = next;
            ++covered;
        }
        if (!triangles[1].contains(cur) || ends.contains(cur)) return false;
        ends.insert(cur);
    }
    return covered == s.size();
}

namespace {

/// Preorder walk over sorted vertex lists; visits sets in lexicographic order.
/// `keep` prunes a set and all its supersets; `accept` tests a candidate.
template <typename Keep, typename Accept>
std::optional<VertexSet> least_subset(const Graph& g, Keep keep, Accept accept) {
    std::optional<VertexSet> found;
    auto dfs = [&](auto& self, VertexSet s, int next) -> bool {
        if (accept(s)) {
            found = s;
            return true;
        }
        for (int v = next; v < g.order(); ++v) {
            const VertexSet t = s | VertexSet::single(v);
            if (!keep(t)) continue;
            if (self(self, t, v + 1)) return true;
        }
        return false;
    };
    dfs(dfs, VertexSet{}, 0);
    return found;
}

/// Degrees in g[s] never exceed max_deg and at most max_branch reach max_deg.
/// Both conditions are inherited by subsets.
bool degree_feasible(const Graph& g, VertexSet s, int max_deg, int max_branch) {
    int branch = 0;
    for (int v : s) {
        const int d = (g.neighbors(v) & s).size();
        if (d > max_deg) return false;
        if (d == max_deg && ++branch > max_branch) return false;
    }
    return true;
}

} // namespace

std::optional<VertexSet> contains_isk4(const Graph& g) {
    return least_subset(
        g, [&](VertexSet s) { return degree_feasible(g, s, 3, 4); },
        [&](VertexSet s) { return is_k4_subdivision(g, s); });
}

namespace {

std::optional<VertexSet> find_prism_set(const Graph& g) {
    return least_subset(
        g, [&](VertexSet s) { return degree_feasible(g, s, 3, 6); },
        [&](VertexSet s) { return is_prism(g, s); });
}

} // namespace

// ---------------------------------------------------------------------------
// induced cycles, wheels

bool for_each_induced_cycle(const Graph& g, const std::function<bool(std::span<const int>)>& visit) {
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(g.order()));
    auto extend = [&](auto& self, VertexSet on_path, VertexSet allowed) -> bool {
        const int start = path.front();
        const int last = path.back();
        const VertexSet inner = on_path - VertexSet{start, last};
        for (int w : g.neighbors(last) & allowed - on_path) {
            if (g.neighbors(w).intersects(inner)) continue;
            if (path.size() >= 2 && g.adjacent(w, start)) {
                if (path[1] < w) {
                    path.push_back(w);
                    const bool go_on = visit(path);
                    path.pop_back();
                    if (!go_on) return false;
                }
                continue;
            }
            path.push_back(w);
            const bool go_on = self(self, on_path | VertexSet::single(w), allowed);
            path.pop_back();
            if (!go_on) return false;
        }
        return true;
    };
    for (int s = 0; s < g.order(); ++s) {
        path.assign(1, s);
        if (!extend(extend, VertexSet::single(s), g.vertices() - VertexSet::range(s + 1))) return false;
    }
    return true;
}

namespace {

std::optional<PatternWitness> find_wheel(const Graph& g) {
    std::optional<PatternWitness> best;
    VertexSet best_set;
    for_each_induced_cycle(g, [&](std::span<const int> cycle) {
        if (cycle.size() < 4) return true;
        const VertexSet rim = VertexSet::from(cycle);
        for (int hub : g.vertices() - rim) {
            if ((g.neighbors(hub) & rim).size() < 3) continue;
            const VertexSet all = rim | VertexSet::single(hub);
            if (!best || lex_less(all, best_set)) {
                PatternWitness w;
                w.mapping.push_back(hub);
                w.mapping.insert(w.mapping.end(), cycle.begin(), cycle.end());
                best = std::move(w);
                best_set = all;
            }
        }
        return true;
    });
    return best;
}

} // namespace

// ---------------------------------------------------------------------------
// K_{1,2,n}

bool is_valid_k12n(const Graph& g, const K12nEmbedding& h) {
    auto in_range = [&](int v) { return v >= 0 && v < g.order(); };
    if (!in_range(h.a) || !in_range(h.b[0]) || !in_range(h.b[1]) || h.b[0] == h.b[1] || h.n() < 2) return false;
    for (int c : h.c) {
        if (!in_range(c)) return false;
    }
    const VertexSet A = h.a_side();
    const VertexSet B = h.b_side();
    const VertexSet C = h.c_side();
    if (C.size() != h.n() || A.intersects(B) || A.intersects(C) || B.intersects(C)) return false;
    return is_independent(g, B) && is_independent(g, C) && is_complete_to(g, A, B) &&
           is_complete_to(g, A, C) && is_complete_to(g, B, C);
}

namespace {

bool has_extender(const Graph& g, VertexSet hub, VertexSet avoid, VertexSet outside) {
    VertexSet cand = outside;
    for (int v : hub) cand &= g.neighbors(v);
    for (int v : cand) {
        if (!g.neighbors(v).intersects(avoid)) return true;
    }
    return false;
}

} // namespace

bool is_maximal_k12n(const Graph& g, const K12nEmbedding& h) {
    const VertexSet outside = g.vertices() - h.vertex_set();
    if (has_extender(g, h.a_side() | h.b_side(), h.c_side(), outside)) return false;
    if (h.n() == 2 && has_extender(g, h.a_side() | h.c_side(), h.b_side(), outside)) return false;
    return true;
}

bool is_maximal_by_extension(const Graph& g, const K12nEmbedding& h) {
    const VertexSet base = h.vertex_set();
    for (int v : g.vertices() - base) {
        const VertexSet s = base | VertexSet::single(v);
        // complete multipartite <=> non-adjacency is an equivalence on s
        std::vector<int> sizes;
        VertexSet rest = s;
        bool multipartite = true;
        while (!rest.empty() && multipartite) {
            const int u = rest.first();
            const VertexSet part = s - g.neighbors(u);
            for (int w : part) multipartite = multipartite && (s - g.neighbors(w)) == part;
            sizes.push_back(part.size());
            rest -= part;
        }
        if (!multipartite) continue;
        std::sort(sizes.begin(), sizes.end());
        std::vector<int> want{1, 2, h.n() + 1};
        std::sort(want.begin(), want.end());
        if (sizes == want) return false;
    }
    return true;
}

namespace {

/// Maximal independent sets of g[within], each as a sorted vertex list.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g, VertexSet within) {
    std::vector<std::vector<int>> out;
    auto non_nb = [&](int v) { return within - g.neighbors(v) - VertexSet::single(v); };
    auto bk = [&](auto& self, VertexSet r, VertexSet p, VertexSet x) -> void {
        if (p.empty()) {
            if (x.empty()) out.push_back(r.to_vector());
            return;
        }
        int pivot = -1;
        int best = -1;
        for (int u : p | x) {
            const int k = (p & non_nb(u)).size();
            if (k > best) {
                best = k;
                pivot = u;
            }
        }
        for (int v : p - non_nb(pivot)) {
            self(self, r | VertexSet::single(v), p & non_nb(v), x & non_nb(v));
            p.erase(v);
            x.insert(v);
        }
    };
    bk(bk, VertexSet{}, within, VertexSet{});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<K12nEmbedding> maximal_k12n_embeddings(const Graph& g, int n_min) {
    if (n_min < 2) throw std::invalid_argument("maximal_k12n_embeddings: n_min must be >= 2");
    std::vector<K12nEmbedding> out;
    for (int a = 0; a < g.order(); ++a) {
        const VertexSet na = g.neighbors(a);
        for (int b1 : na) {
            for (int b2 : na - VertexSet::range(b1 + 1) - g.neighbors(b1)) {
                const VertexSet common = na & g.neighbors(b1) & g.neighbors(b2);
                if (common.size() < n_min) continue;
                for (auto& c : maximal_independent_sets(g, common)) {
                    if (static_cast<int>(c.size()) < n_min) continue;
                    K12nEmbedding h{a, {b1, b2}, std::move(c)};
                    if (h.n() == 2) {
                        // the same subgraph is also found with b and c swapped
                        if (!lex_less(h.b_side(), h.c_side())) continue;
                        if (!is_maximal_k12n(g, h)) continue;
                    }
                    out.push_back(std::move(h));
                }
            }
        }
    }
    return out;
}

std::optional<K12nEmbedding> find_maximal_k12n(const Graph& g, int n_min) {
    auto all = maximal_k12n_embeddings(g, n_min);
    if (all.empty()) return std::nullopt;
    return all.front();
}

// ---------------------------------------------------------------------------
// squares and links

namespace {

struct SquareFrame {
    std::array<int, 4> v{};
    VertexSet all;
    VertexSet first_edge;  // {v1, v2}
    VertexSet second_edge; // {v3, v4}
};

SquareFrame frame(const std::array<int, 4>& sq) {
    return {sq, VertexSet{sq[0], sq[1], sq[2], sq[3]}, VertexSet{sq[0], sq[1]}, VertexSet{sq[2], sq[3]}};
}

/// Orders the vertices of `comp` as a link of the square, or returns nothing.
std::optional<Path> as_link(const Graph& g, const SquareFrame& f, VertexSet comp) {
    if (comp.size() == 1) {
        const int p = comp.first();
        if ((g.neighbors(p) & f.all) == f.all) return Path{{p}};
        return std::nullopt;
    }
    std::vector<int> ends;
    for (int v : comp) {
        if ((g.neighbors(v) & comp).size() == 1) ends.push_back(v);
    }
    if (ends.size() != 2 || !induces_path_between(g, comp, ends[0], ends[1])) return std::nullopt;
    int p = ends[0];
    int q = ends[1];
    if ((g.neighbors(p) & f.all) != f.first_edge) std::swap(p, q);
    if ((g.neighbors(p) & f.all) != f.first_edge || (g.neighbors(q) & f.all) != f.second_edge) return std::nullopt;
    Path path{{p}};
    int prev = -1;
    int cur = p;
    while (cur != q) {
        const int next = ((g.neighbors(cur) & comp) - (prev < 0 ? VertexSet{} : VertexSet::single(prev))).first();
        prev = cur;
        cur = next;
        path.vertices.push_back(cur);
    }
    if (neighborhood(g, path.interior()).intersects(f.all)) return std::nullopt;
    return path;
}

/// All links of the square as induced paths of g (not necessarily components).
std::vector<SquareLink> candidate_links(const Graph& g, const SquareFrame& f) {
    std::vector<SquareLink> out;
    const VertexSet off = g.vertices() - f.all;
    VertexSet quiet; // no neighbour on the square
    for (int v : off) {
        if (!g.neighbors(v).intersects(f.all)) quiet.insert(v);
    }
    for (int p : off) {
        const VertexSet at = g.neighbors(p) & f.all;
        if (at == f.all) {
            out.push_back({Path{{p}}});
            continue;
        }
        if (at != f.first_edge) continue;
        Path path{{p}};
        auto dfs = [&](auto& self, VertexSet on_path) -> void {
            const int last = path.vertices.back();
            const VertexSet earlier = on_path - VertexSet::single(last);
            for (int w : g.neighbors(last) & off - on_path) {
                if (g.neighbors(w).intersects(earlier)) continue;
                const VertexSet wat = g.neighbors(w) & f.all;
                if (wat == f.second_edge) {
                    path.vertices.push_back(w);
                    out.push_back({path});
                    path.vertices.pop_back();
                } else if (quiet.contains(w)) {
                    path.vertices.push_back(w);
                    self(self, on_path | VertexSet::single(w));
                    path.vertices.pop_back();
                }
            }
        };
        dfs(dfs, VertexSet::single(p));
    }
    return out;
}

std::array<int, 4> rotate_once(std::span<const int> c) { return {c[1], c[2], c[3], c[0]}; }

} // namespace

std::optional<SquareLinkStructure> find_rich_square(const Graph& g, RichSquareMode mode) {
    std::optional<SquareLinkStructure> found;
    for_each_induced_cycle(g, [&](std::span<const int> cycle) {
        if (cycle.size() != 4) return true;
        const std::array<std::array<int, 4>, 2> labelings{
            std::array<int, 4>{cycle[0], cycle[1], cycle[2], cycle[3]}, rotate_once(cycle)};
        for (const auto& sq : labelings) {
            const SquareFrame f = frame(sq);
            if (mode == RichSquareMode::WholeGraph) {
                const auto comps = components(g, g.vertices() - f.all);
                if (comps.size() < 2) return true;
                SquareLinkStructure s{sq, {}, true};
                for (VertexSet comp : comps) {
                    auto link = as_link(g, f, comp);
                    if (!link) break;
                    s.links.push_back({std::move(*link)});
                }
                if (s.links.size() == comps.size()) {
                    found = std::move(s);
                    return false;
                }
            } else {
                const auto links = candidate_links(g, f);
                for (std::size_t i = 0; i < links.size(); ++i) {
                    const VertexSet si = links[i].path.vertex_set();
                    for (std::size_t j = i + 1; j < links.size(); ++j) {
                        const VertexSet sj = links[j].path.vertex_set();
                        if (is_anticomplete_to(g, si, sj)) {
                            found = SquareLinkStructure{sq, {links[i], links[j]}, false};
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });
    if (found && mode == RichSquareMode::Containment) {
        // also record whether the whole graph happens to be this rich square
        const VertexSet covered = found->square_set() | found->links[0].path.vertex_set() | found->links[1].path.vertex_set();
        found->whole_graph = covered == g.vertices();
    }
    return found;
}

bool validate_square_links(const Graph& g, const SquareLinkStructure& s) {
    for (int v : s.square) {
        if (v < 0 || v >= g.order()) return false;
    }
    if (!is_induced_cycle(g, s.square) || s.links.size() < 2) return false;
    const SquareFrame f = frame(s.square);
    VertexSet used = f.all;
    std::vector<VertexSet> sets;
    for (const SquareLink& link : s.links) {
        const Path& p = link.path;
        if (!is_induced_path(g, p)) return false;
        const VertexSet ps = p.vertex_set();
        if (ps.intersects(used)) return false;
        if (link.centered()) {
            if ((g.neighbors(p.front()) & f.all) != f.all) return false;
        } else {
            if ((g.neighbors(p.front()) & f.all) != f.first_edge) return false;
            if ((g.neighbors(p.back()) & f.all) != f.second_edge) return false;
            if (neighborhood(g, p.interior()).intersects(f.all)) return false;
        }
        for (VertexSet other : sets) {
            if (!is_anticomplete_to(g, ps, other)) return false;
        }
        sets.push_back(ps);
        used |= ps;
    }
    if (s.whole_graph && used != g.vertices()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// fixed patterns

const Graph& pattern_graph(FixedPattern which) {
    static const Graph k33 = named::complete_multipartite({3, 3});
    static const Graph k222 = named::complete_multipartite({2, 2, 2});
    static const Graph prism = named::prism();
    static const Graph wheel = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    switch (which) {
    case FixedPattern::K33: return k33;
    case FixedPattern::K222: return k222;
    case FixedPattern::Prism: return prism;
    case FixedPattern::Wheel: return wheel;
    }
    throw std::invalid_argument("unknown pattern");
}

std::optional<PatternWitness> contains_fixed(const Graph& g, FixedPattern which) {
    switch (which) {
    case FixedPattern::K33:
    case FixedPattern::K222: return contains_induced(g, pattern_graph(which));
    case FixedPattern::Prism: {
        auto s = find_prism_set(g);
        if (!s) return std::nullopt;
        return PatternWitness{s->to_vector()};
    }
    case FixedPattern::Wheel: return find_wheel(g);
    }
    return std::nullopt;
}

bool validate_fixed_witness(const Graph& g, FixedPattern which, const PatternWitness& w) {
    switch (which) {
    case FixedPattern::K33:
    case FixedPattern::K222: return is_induced_embedding(g, pattern_graph(which), w);
    case FixedPattern::Prism: {
        for (int v : w.mapping) {
            if (v < 0 || v >= g.order()) return false;
        }
        const VertexSet s = VertexSet::from(w.mapping);
        return s.size() == static_cast<int>(w.mapping.size()) && is_prism(g, s);
    }
    case FixedPattern::Wheel: {
        if (w.mapping.size() < 5) return false;
        const int hub = w.mapping.front();
        const std::span<const int> rim(w.mapping.data() + 1, w.mapping.size() - 1);
        if (hub < 0 || hub >= g.order() || !is_induced_cycle(g, rim)) return false;
        const VertexSet r = VertexSet::from(rim);
        return !r.contains(hub) && (g.neighbors(hub) & r).size() >= 3;
    }
    }
    return false;
}

} // namespace isk4lab
