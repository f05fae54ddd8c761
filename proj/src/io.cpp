#include "isk4lab/io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace isk4lab {

namespace {

constexpr int kBias = 63;

std::size_t graph6_body_bytes(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    return (bits + 5) / 6;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    if (line.ends_with('\n')) line.remove_suffix(1);
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 line", 0);
    if (line.starts_with(">>graph6<<")) throw ParseError("graph6 header not accepted", 0);

    const int size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte == 126) throw ParseError("graph6 long form (n > 62) not supported", 0);
    if (size_byte < kBias || size_byte > 126) throw ParseError("invalid graph6 size byte", 0);
    const int n = size_byte - kBias;

    const std::size_t body = graph6_body_bytes(n);
    if (line.size() < 1 + body) throw ParseError("graph6 code truncated", line.size());
    if (line.size() > 1 + body) throw ParseError("trailing bytes after graph6 code", 1 + body);

    for (std::size_t k = 0; k < body; ++k) {
        const int c = static_cast<unsigned char>(line[1 + k]);
        if (c < kBias || c > 126) throw ParseError("graph6 byte outside 63..126", 1 + k);
    }
    auto bit_at = [&](std::size_t bit) {
        const int value = static_cast<unsigned char>(line[1 + bit / 6]) - kBias;
        return (value >> (5 - bit % 6)) & 1;
    };

    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit_at(bit) == 0) continue;
            rows[static_cast<std::size_t>(i)].insert(j);
            rows[static_cast<std::size_t>(j)].insert(i);
        }
    }
    for (; bit < body * 6; ++bit) {
        if (bit_at(bit) != 0) throw ParseError("nonzero graph6 padding bit", 1 + bit / 6);
    }
    return Graph::from_rows(rows);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw UnsupportedSize("graph6 short form supports n <= 62, got n=" + std::to_string(n));
    }
    std::string out;
    out.reserve(1 + graph6_body_bytes(n));
    out.push_back(static_cast<char>(n + kBias));
    int value = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + kBias));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kBias));
    return out;
}

namespace {

class Tokens {
public:
    explicit Tokens(std::string_view text) : text_(text) {}

    /// Next integer token, or false at end of input.
    bool next(long& value, std::size_t& offset) {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == text_.size()) return false;
        offset = pos_;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() ||
            (ptr != last && !std::isspace(static_cast<unsigned char>(*ptr)))) {
            throw ParseError("expected an integer", offset);
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return true;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Graph parse_edge_list(std::string_view text) {
    Tokens tokens(text);
    long n = 0;
    long m = 0;
    std::size_t at = 0;
    if (!tokens.next(n, at)) throw ParseError("missing vertex count", 0);
    if (n < 0 || n > kMaxVertices) throw ParseError("vertex count outside 0..64", at);
    if (!tokens.next(m, at)) throw ParseError("missing edge count", text.size());
    if (m < 0) throw ParseError("negative edge count", at);

    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (long e = 0; e < m; ++e) {
        long u = 0;
        long v = 0;
        if (!tokens.next(u, at) || !tokens.next(v, at)) throw ParseError("fewer edges than declared", text.size());
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range", at);
        if (u == v) throw ParseError("self-loop", at);
        auto& ru = rows[static_cast<std::size_t>(u)];
        if (ru.contains(static_cast<int>(v))) throw ParseError("repeated edge", at);
        ru.insert(static_cast<int>(v));
        rows[static_cast<std::size_t>(v)].insert(static_cast<int>(u));
    }
    long extra = 0;
    if (tokens.next(extra, at)) throw ParseError("trailing data after edge list", at);
    return Graph::from_rows(rows);
}

std::string write_edge_list(const Graph& g) {
    const auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace isk4lab
