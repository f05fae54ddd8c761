#ifndef ISK4LAB_IO_HPP
#define ISK4LAB_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "isk4lab/graph.hpp"

namespace isk4lab {

/// Largest order representable in the one-byte graph6 size field.
inline constexpr int kGraph6MaxOrder = 62;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UnsupportedSize : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// graph6, short form only: one size byte (n + 63) followed by the upper
// triangle read column by column (x(0,1) x(0,2) x(1,2) x(0,3) ...), packed
// six bits per byte, big-endian, zero padded, each byte offset by 63.

/// Parses one header-less graph6 code. A trailing '\n' (or "\r\n") is tolerated.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding. Throws UnsupportedSize when n > 62.
std::string write_graph6(const Graph& g);

/// "n m" followed by m lines "u v" (0-based). Any whitespace separates tokens.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

} // namespace isk4lab

#endif // ISK4LAB_IO_HPP
