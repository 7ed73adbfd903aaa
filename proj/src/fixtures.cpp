#include <oddom/fixtures.hpp>

#include <array>
#include <charconv>
#include <span>
#include <string>

namespace oddom::fixtures {

namespace {

// Generated by tools/gen_cubic_fixtures.py.
constexpr std::array<std::string_view, 1> cubic4 = {"C~"};
constexpr std::array<std::string_view, 2> cubic6 = {"Es\\o", "E{Sw"};
constexpr std::array<std::string_view, 6> cubic8 = {"GsXPGs", "GsXP_[", "G{O_ww", "G{S_g[", "G}GOW[", "G~?GW["};
constexpr std::array<std::string_view, 21> cubic10 = {
    "IsP@PGXD_",
    "IsX@?oU@o",
    "IsXP?_J@o",
    "IsXP?cH@g",
    "IsXP?cI@W",
    "IsX___J@o",
    "I{O_ogH@g",
    "I{O_ogI@W",
    "I{O_ogK?w",
    "I{O_ooE@W",
    "I{O_w_H@W",
    "I{S__OF@o",
    "I{S__SE@W",
    "I{S_gOD?w",
    "I}GOOOF@o",
    "I}GOOSE@W",
    "I}GOWOD?w",
    "I}GWOGB?w",
    "I}KGGGB?w",
    "I~?GOOF@o",
    "I~?GWOD?w",
};

std::vector<Graph> parse_all(std::span<const std::string_view> table)
{
    std::vector<Graph> out;
    out.reserve(table.size());
    for (auto g6 : table)
        out.push_back(parse_graph6(g6));
    return out;
}

int parse_suffix(std::string_view name, std::string_view prefix)
{
    const auto digits = name.substr(prefix.size());
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
        throw std::invalid_argument("unknown named graph \"" + std::string(name) + "\"");
    return value;
}

} // namespace

Graph complete(int n)
{
    return complete_multipartite(1, n);
}

Graph cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph star(int n)
{
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(0, v);
    return g;
}

Graph hypercube(int d)
{
    if (d < 0 || (1 << d) > max_order)
        throw std::invalid_argument("hypercube dimension " + std::to_string(d) + " out of range");
    const int n = 1 << d;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (v < (v ^ (1 << b)))
                g.add_edge(v, v ^ (1 << b));
    return g;
}

Graph petersen()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

std::vector<Graph> cubic_graphs(int n)
{
    switch (n) {
    case 4:
        return parse_all(cubic4);
    case 6:
        return parse_all(cubic6);
    case 8:
        return parse_all(cubic8);
    case 10:
        return parse_all(cubic10);
    default:
        throw std::invalid_argument("cubic fixture corpus covers n in {4, 6, 8, 10}, not " + std::to_string(n));
    }
}

Graph named(std::string_view name)
{
    if (name == "petersen")
        return petersen();
    if (name.starts_with("star"))
        return star(parse_suffix(name, "star"));
    if (name.starts_with("k"))
        return complete(parse_suffix(name, "k"));
    if (name.starts_with("c"))
        return cycle(parse_suffix(name, "c"));
    if (name.starts_with("p"))
        return path(parse_suffix(name, "p"));
    if (name.starts_with("q"))
        return hypercube(parse_suffix(name, "q"));
    throw std::invalid_argument("unknown named graph \"" + std::string(name) + "\"");
}

} // namespace oddom::fixtures
