#pragma once

// Every graph on n <= 8 vertices up to isomorphism, built one vertex at a time
// and deduplicated by a canonical adjacency code. Known class counts for
// n = 1..8: 1, 2, 4, 11, 34, 156, 1044, 12346.

#include <oddom/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace census {

using oddom::Graph;
using oddom::Mask;

namespace detail {

// Colour refinement: start from degrees, then split by neighbour colour
// multisets until stable. Colours are ranks of invariant keys.
inline std::vector<int> refine(const Graph & g)
{
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        colour[static_cast<std::size_t>(v)] = g.degree(v);
    for (;;) {
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto & k = keys[static_cast<std::size_t>(v)];
            for (int u = 0; u < n; ++u)
                if (g.has_edge(u, v))
                    k.push_back(colour[static_cast<std::size_t>(u)]);
            std::sort(k.begin(), k.end());
            k.insert(k.begin(), colour[static_cast<std::size_t>(v)]);
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<std::size_t>(v)]) - sorted.begin());
        const auto classes = [](std::vector<int> c) {
            std::sort(c.begin(), c.end());
            return std::unique(c.begin(), c.end()) - c.begin();
        };
        if (classes(next) == classes(colour))
            return next;
        colour = std::move(next);
    }
}

struct Canon
{
    const Graph & g;
    std::vector<int> cell_of_position;
    std::vector<int> colour;
    std::vector<int> placed;
    std::uint64_t best = ~std::uint64_t{0};
    int total_bits = 0;

    // Bits are emitted position by position (edges to earlier positions),
    // most significant first, so a partial code bounds every completion.
    void place(int p, std::uint64_t code, int used_bits, Mask used)
    {
        const int n = g.order();
        if (p == n) {
            best = std::min(best, code);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (((used >> v) & 1U) || colour[static_cast<std::size_t>(v)] != cell_of_position[static_cast<std::size_t>(p)])
                continue;
            std::uint64_t c = code;
            for (int q = 0; q < p; ++q) {
                c <<= 1;
                if (g.has_edge(v, placed[static_cast<std::size_t>(q)]))
                    c |= 1U;
            }
            const int bits = used_bits + p;
            if ((c << (total_bits - bits)) > best)
                continue;
            placed[static_cast<std::size_t>(p)] = v;
            place(p + 1, c, bits, used | (Mask{1} << v));
        }
    }
};

} // namespace detail

/// Canonical code: equal exactly when the graphs are isomorphic (n <= 11).
inline std::uint64_t canonical_code(const Graph & g)
{
    const int n = g.order();
    detail::Canon c{g, {}, detail::refine(g), std::vector<int>(static_cast<std::size_t>(n)), ~std::uint64_t{0},
                    n * (n - 1) / 2};
    c.cell_of_position = c.colour;
    std::sort(c.cell_of_position.begin(), c.cell_of_position.end());
    c.place(0, 0, 0, 0);
    return c.best;
}

/// Representatives of every isomorphism class on n vertices, 1 <= n <= 8.
inline std::vector<Graph> graphs(int n)
{
    if (n < 1 || n > 8)
        throw std::invalid_argument("census covers 1 <= n <= 8");
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const auto & base : level)
            for (Mask s = 0; s < (Mask{1} << (m - 1)); ++s) {
                Graph g(m);
                for (const auto & [u, v] : base.edges())
                    g.add_edge(u, v);
                for (int u = 0; u < m - 1; ++u)
                    if ((s >> u) & 1U)
                        g.add_edge(u, m - 1);
                if (seen.insert(canonical_code(g)).second)
                    next.push_back(std::move(g));
            }
        level = std::move(next);
    }
    return level;
}

} // namespace census
