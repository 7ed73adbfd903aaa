#include <oddom/graph.hpp>

namespace oddom {

namespace {

constexpr std::string_view header = ">>graph6<<";
constexpr int bias = 63;

std::size_t data_bytes(int n)
{
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (pairs + 5) / 6;
}

} // namespace

Graph6Error::Graph6Error(std::size_t offset, const std::string & what) :
    std::runtime_error("graph6: byte " + std::to_string(offset) + ": " + what),
    offset_(offset)
{
}

Graph parse_graph6(std::string_view text)
{
    std::size_t base = 0;
    if (text.starts_with(header))
        base = header.size();

    if (text.size() <= base)
        throw Graph6Error(base, "missing order byte");

    const int first = static_cast<unsigned char>(text[base]);
    if (first == 126)
        throw Graph6Error(base, "multi-byte order encoding (n > 62) is not supported");
    if (first < bias || first > bias + max_order)
        throw Graph6Error(base, "invalid order byte " + std::to_string(first));
    const int n = first - bias;

    const std::size_t expected = data_bytes(n);
    const std::size_t body = base + 1;
    if (text.size() < body + expected)
        throw Graph6Error(text.size(), "truncated adjacency data: expected " + std::to_string(expected) +
                                           " bytes for order " + std::to_string(n) + ", got " +
                                           std::to_string(text.size() - body));
    if (text.size() > body + expected)
        throw Graph6Error(body + expected, "unexpected trailing data");

    Graph g(n);
    std::size_t k = 0;
    auto next_bit = [&]() -> bool {
        const std::size_t offset = body + k / 6;
        const int value = static_cast<unsigned char>(text[offset]) - bias;
        if (value < 0 || value > 63)
            throw Graph6Error(offset, "byte outside the printable graph6 range");
        const bool b = (value >> (5 - static_cast<int>(k % 6))) & 1;
        ++k;
        return b;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (next_bit())
                g.add_edge(i, j);
    while (k % 6 != 0)
        if (next_bit())
            throw Graph6Error(body + (k - 1) / 6, "non-zero padding bits");
    return g;
}

std::string write_graph6(const Graph & g)
{
    const int n = g.order();
    std::string out;
    out.reserve(1 + data_bytes(n));
    out.push_back(static_cast<char>(bias + n));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(bias + acc));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(bias + (acc << (6 - filled))));
    return out;
}

} // namespace oddom
