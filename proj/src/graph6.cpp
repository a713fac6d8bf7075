#include <cstdint>
#include <string>
#include <string_view>

#include "autodel/errors.hpp"
#include "autodel/graph.hpp"

// graph6: N(n) followed by the upper triangle x(i,j), j = 1..n-1, i < j,
// packed 6 bits per byte most-significant first, each byte offset by 63.

namespace autodel {

namespace {

constexpr std::string_view kOptionalHeader = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
    auto push6 = [&out](std::uint64_t v, int groups) {
        for (int k = groups - 1; k >= 0; --k)
            out.push_back(static_cast<char>(63 + ((v >> (6 * k)) & 63)));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        push6(n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        push6(n, 6);
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    append_size(out, static_cast<std::uint64_t>(n));
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t start = out.size();
    out.append((nbits + 5) / 6, static_cast<char>(63));
    for (auto [u, v] : g.edges()) {
        // bit index of x(u, v) with u < v: column-major upper triangle
        std::size_t k = static_cast<std::size_t>(v) * (v - 1) / 2 + static_cast<std::size_t>(u);
        out[start + k / 6] += static_cast<char>(1 << (5 - k % 6));
    }
    return out;
}

Graph from_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kOptionalHeader.size()) == kOptionalHeader) pos = kOptionalHeader.size();
    while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r')) ++pos;

    auto need = [&](std::size_t count, const char* what) {
        if (pos + count > text.size()) throw parse_error(std::string("truncated ") + what, text.size());
    };
    auto take6 = [&](const char* what) -> std::uint64_t {
        need(1, what);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw parse_error(std::string("invalid byte in ") + what, pos);
        ++pos;
        return c - 63;
    };

    need(1, "size field");
    std::uint64_t n = 0;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        ++pos;
        need(1, "size field");
        int groups = 3;
        if (static_cast<unsigned char>(text[pos]) == 126) {
            ++pos;
            groups = 6;
        }
        for (int k = 0; k < groups; ++k) n = (n << 6) | take6("size field");
    } else {
        n = take6("size field");
        if (n > 62) throw parse_error("invalid short size byte", pos - 1);
    }
    if (n > 100000) throw resource_error("graph6 input has " + std::to_string(n) + " vertices");

    Graph g(static_cast<int>(n));
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    need(nbytes, "edge bits");
    for (std::size_t byte = 0; byte < nbytes; ++byte) {
        std::uint64_t bits = take6("edge bits");
        for (int b = 0; b < 6; ++b) {
            std::size_t k = byte * 6 + static_cast<std::size_t>(b);
            bool set = (bits >> (5 - b)) & 1;
            if (k >= nbits) {
                if (set) throw parse_error("nonzero padding bit", pos - 1);
                continue;
            }
            if (!set) continue;
            // invert k -> (i, j): j is the largest with j(j-1)/2 <= k
            std::uint64_t j = 1;
            while ((j + 1) * j / 2 <= k) ++j;
            std::uint64_t i = k - j * (j - 1) / 2;
            g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r')) ++pos;
    if (pos != text.size()) throw parse_error("trailing bytes after graph6 data", pos);
    return g;
}

} // namespace autodel
