#include "isk4lab/color.hpp"

#include <algorithm>
#include <stdexcept>

namespace isk4lab {

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.order()) return false;
    std::vector<bool> present(static_cast<std::size_t>(std::max(c.k, 0)), false);
    for (int v = 0; v < g.order(); ++v) {
        const int x = c.color[static_cast<std::size_t>(v)];
        if (x < 0 || x >= c.k) return false;
        present[static_cast<std::size_t>(x)] = true;
        for (int u : g.neighbors(v)) {
            if (c.color[static_cast<std::size_t>(u)] == x) return false;
        }
    }
    return std::all_of(present.begin(), present.end(), [](bool b) { return b; });
}

Coloring canonicalize(Coloring c) {
    std::vector<int> rename;
    int next = 0;
    for (int& x : c.color) {
        if (x >= static_cast<int>(rename.size())) rename.resize(static_cast<std::size_t>(x) + 1, -1);
        auto& r = rename[static_cast<std::size_t>(x)];
        if (r < 0) r = next++;
        x = r;
    }
    c.k = next;
    return c;
}

// ---------------------------------------------------------------------------
// exact colouring

namespace {

class Dsatur {
public:
    Dsatur(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), -1) {}

    bool run() { return step(g_.order(), -1); }
    Coloring result() const {
        Coloring c{color_, 0};
        for (int x : color_) c.k = std::max(c.k, x + 1);
        return c;
    }

private:
    int pick() const {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0) continue;
            unsigned seen = 0;
            int deg = 0;
            for (int u : g_.neighbors(v)) {
                const int x = color_[static_cast<std::size_t>(u)];
                if (x >= 0) {
                    seen |= 1U << x;
                } else {
                    ++deg;
                }
            }
            const int sat = std::popcount(seen);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool step(int left, int max_used) {
        if (left == 0) return true;
        const int v = pick();
        unsigned blocked = 0;
        for (int u : g_.neighbors(v)) {
            const int x = color_[static_cast<std::size_t>(u)];
            if (x >= 0) blocked |= 1U << x;
        }
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int x = 0; x <= limit; ++x) {
            if ((blocked >> x) & 1U) continue;
            color_[static_cast<std::size_t>(v)] = x;
            if (step(left - 1, std::max(max_used, x))) return true;
        }
        color_[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
};

/// Size of a greedily grown clique; a lower bound on χ.
int greedy_clique(const Graph& g) {
    int best = g.order() > 0 ? 1 : 0;
    for (int v = 0; v < g.order(); ++v) {
        VertexSet clique = VertexSet::single(v);
        VertexSet cand = g.neighbors(v);
        while (!cand.empty()) {
            int pick = cand.first();
            for (int u : cand) {
                if ((g.neighbors(u) & cand).size() > (g.neighbors(pick) & cand).size()) pick = u;
            }
            clique.insert(pick);
            cand &= g.neighbors(pick);
        }
        best = std::max(best, clique.size());
    }
    return best;
}

} // namespace

std::optional<Coloring> color_with_at_most(const Graph& g, int k) {
    if (g.order() == 0) return Coloring{};
    if (k <= 0) return std::nullopt;
    if (k > 32) k = 32;
    Dsatur search(g, k);
    if (!search.run()) return std::nullopt;
    return search.result();
}

ExactResult chromatic_number_exact(const Graph& g, std::optional<int> upper_bound) {
    if (g.order() == 0) return {0, Coloring{}, false};
    for (int k = greedy_clique(g);; ++k) {
        if (upper_bound && k > *upper_bound) return {*upper_bound + 1, std::nullopt, true};
        if (auto c = color_with_at_most(g, k)) return {k, std::move(c), false};
    }
}

// ---------------------------------------------------------------------------
// leaf colourers

Coloring color_complete_multipartite(const MultipartiteCert& cert) {
    VertexSet all;
    for (VertexSet p : cert.parts) all |= p;
    Coloring c{std::vector<int>(all.empty() ? 0 : static_cast<std::size_t>(all.last()) + 1, -1), static_cast<int>(cert.parts.size())};
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        for (int v : cert.parts[i]) c.color[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    return c;
}

namespace {

class EdgeColoring {
public:
    EdgeColoring(const Graph& root, const std::vector<Edge>& edges, int k)
        : edges_(edges), k_(k), at_(static_cast<std::size_t>(root.order()), 0U), color_(edges.size(), -1) {}

    bool run() { return step(0, -1); }
    const std::vector<int>& colors() const { return color_; }

private:
    bool step(std::size_t i, int max_used) {
        if (i == edges_.size()) return true;
        const auto [x, y] = edges_[i];
        const unsigned blocked = at_[static_cast<std::size_t>(x)] | at_[static_cast<std::size_t>(y)];
        for (int c = 0; c <= std::min(k_ - 1, max_used + 1); ++c) {
            if ((blocked >> c) & 1U) continue;
            at_[static_cast<std::size_t>(x)] |= 1U << c;
            at_[static_cast<std::size_t>(y)] |= 1U << c;
            color_[i] = c;
            if (step(i + 1, std::max(max_used, c))) return true;
            at_[static_cast<std::size_t>(x)] &= ~(1U << c);
            at_[static_cast<std::size_t>(y)] &= ~(1U << c);
        }
        color_[i] = -1;
        return false;
    }

    const std::vector<Edge>& edges_;
    int k_;
    std::vector<unsigned> at_;
    std::vector<int> color_;
};

} // namespace

Coloring color_subcubic_line_graph(const Graph& g, const SubcubicRootCert& cert) {
    if (!is_valid_root_cert(g, cert)) throw std::invalid_argument("color_subcubic_line_graph: invalid root certificate");
    if (g.order() == 0) return Coloring{};
    for (int k = std::max(1, cert.root.max_degree()); k <= 4; ++k) {
        EdgeColoring search(cert.root, cert.ends, k);
        if (search.run()) return canonicalize(Coloring{search.colors(), k});
    }
    // Vizing: a graph of maximum degree 3 is 4-edge-colourable
    throw std::logic_error("color_subcubic_line_graph: no 4-edge-colouring of a subcubic root");
}

std::optional<Coloring> color_rich_square(const Graph& g, const SquareLinkStructure& s) {
    if (!s.whole_graph || !validate_square_links(g, s)) return std::nullopt;
    Coloring c{std::vector<int>(static_cast<std::size_t>(g.order()), -1), 0};
    c.color[static_cast<std::size_t>(s.square[0])] = 0;
    c.color[static_cast<std::size_t>(s.square[2])] = 0;
    c.color[static_cast<std::size_t>(s.square[1])] = 1;
    c.color[static_cast<std::size_t>(s.square[3])] = 1;
    for (const SquareLink& link : s.links) {
        for (std::size_t i = 0; i < link.path.vertices.size(); ++i) {
            c.color[static_cast<std::size_t>(link.path.vertices[i])] = i % 2 == 0 ? 2 : 3;
        }
    }
    for (int x : c.color) c.k = std::max(c.k, x + 1);
    return c;
}

} // namespace isk4lab
