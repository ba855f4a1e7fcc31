#include "distspec/graph6.hpp"

#include <string_view>

namespace distspec {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string offset_msg(const char* what, std::size_t offset) {
    return std::string(what) + " at byte offset " + std::to_string(offset);
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string_view s{text};
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());

    if (s.empty())
        throw ParseError(offset_msg("empty graph6 string", 0));

    const unsigned char size_byte = static_cast<unsigned char>(s[0]);
    if (size_byte == 126)
        throw ParseError(offset_msg("multi-byte size field (n > 62) is not supported", 0));
    if (size_byte < 63 || size_byte > 126)
        throw ParseError(offset_msg("size byte outside the printable range [63, 126]", 0));

    const int n = size_byte - 63;
    if (n == 0)
        throw ParseError(offset_msg("order-0 graph is not representable", 0));

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() < 1 + nbytes)
        throw ParseError(offset_msg("truncated edge data", s.size()));
    if (s.size() > 1 + nbytes)
        throw ParseError(offset_msg("trailing garbage after edge data", 1 + nbytes));

    Graph g(n);
    std::size_t bit = 0;
    int col = 1;
    int row = 0;
    for (std::size_t k = 0; k < nbytes; ++k) {
        const unsigned char byte = static_cast<unsigned char>(s[1 + k]);
        if (byte < 63 || byte > 126)
            throw ParseError(offset_msg("edge byte outside the printable range [63, 126]", 1 + k));
        const unsigned group = byte - 63;
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            const bool set = (group >> shift) & 1u;
            if (bit >= nbits) {
                if (set)
                    throw ParseError(offset_msg("non-canonical padding bits", 1 + k));
                continue;
            }
            if (set) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62)
        throw UnsupportedSizeError("graph6 single-byte size field covers n <= 62 only");

    std::string out;
    out.push_back(static_cast<char>(n + 63));

    unsigned group = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.adjacent(row, col) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

}  // namespace distspec
