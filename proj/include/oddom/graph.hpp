#pragma once

#include <oddom/gf2.hpp>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddom {

using Mask = std::uint64_t;

/// Largest supported order: one byte of graph6 header, one word per subset.
inline constexpr int max_order = 62;

inline constexpr Mask full_mask(int n)
{
    return n == 0 ? Mask{0} : (~Mask{0} >> (64 - n));
}

inline constexpr Mask bit(int v)
{
    return Mask{1} << v;
}

/// A subset of {0, ..., universe-1} held in a single machine word.
class VertexSet
{
public:
    VertexSet() = default;
    VertexSet(int universe, Mask mask);

    static VertexSet none(int universe) { return VertexSet(universe, 0); }
    static VertexSet all(int universe) { return VertexSet(universe, full_mask(universe)); }
    static VertexSet of(int universe, std::initializer_list<int> vertices);
    static VertexSet of(int universe, const std::vector<int> & vertices);

    Mask mask() const { return mask_; }
    int universe() const { return universe_; }

    bool empty() const { return mask_ == 0; }
    int size() const { return std::popcount(mask_); }
    bool contains(int v) const { return v >= 0 && v < universe_ && ((mask_ >> v) & 1U); }
    bool is_subset_of(const VertexSet & other) const;
    bool intersects(const VertexSet & other) const;

    /// Complement within the universe.
    VertexSet operator~() const { return VertexSet(universe_, ~mask_ & full_mask(universe_)); }

    friend VertexSet operator|(const VertexSet & a, const VertexSet & b);
    friend VertexSet operator&(const VertexSet & a, const VertexSet & b);
    friend VertexSet operator^(const VertexSet & a, const VertexSet & b);
    friend VertexSet operator-(const VertexSet & a, const VertexSet & b);

    /// Members in ascending order.
    std::vector<int> to_vector() const;
    std::string to_string() const;

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    int universe_ = 0;
    Mask mask_ = 0;
};

/// Simple undirected graph on vertices 0..n-1 with one neighbourhood word per vertex.
class Graph
{
public:
    Graph() = default;
    /// Edgeless graph of the given order.
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>> & edges);
    /// Throws std::invalid_argument unless `rows` is symmetric and loop-free.
    static Graph from_rows(std::vector<Mask> rows);

    int order() const { return static_cast<int>(rows_.size()); }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }

    /// Open neighbourhood N(v) as a raw mask.
    Mask row(int v) const { return rows_[v]; }
    const std::vector<Mask> & rows() const { return rows_; }
    VertexSet neighbours(int v) const { return VertexSet(order(), rows_[v]); }
    VertexSet closed_neighbours(int v) const { return VertexSet(order(), rows_[v] | bit(v)); }
    VertexSet vertices() const { return VertexSet::all(order()); }

    int degree(int v) const { return std::popcount(rows_[v]); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const;

    /// Throw std::invalid_argument on the empty graph.
    int max_degree() const;
    int min_degree() const;
    bool is_regular() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    void check_vertex(int v) const;
    std::vector<Mask> rows_;
};

/// Odd(C): vertices with an odd number of neighbours in C.
VertexSet odd_neighbourhood(const Graph & g, const VertexSet & c);
Mask odd_neighbourhood(const Graph & g, Mask c);

/// Odd[C]: symmetric difference of the closed neighbourhoods of C's members.
VertexSet closed_odd_neighbourhood(const Graph & g, const VertexSet & c);

bool is_odd_dominating_set(const Graph & g, const VertexSet & c);

Graph complement(const Graph & g);

/// Block-diagonal union; vertices of `h` are renumbered after those of `g`.
Graph disjoint_union(const Graph & g, const Graph & h);

/// Disjoint union of r copies of g (r >= 1).
Graph power(const Graph & g, int r);

/// Complete q-partite graph with parts of size p; part i is [i*p, (i+1)*p).
Graph complete_multipartite(int p, int q);

/// Cut matrix: rows are V\B, columns are B, both ascending by vertex index.
gf2::BitMatrix cut_matrix(const Graph & g, const VertexSet & b);

/// G(n, 1/2) driven by std::mt19937_64 seeded with `seed`. Pairs (i, j), i < j,
/// are visited in graph6 order (j ascending, then i ascending) and each takes
/// the top bit of one 64-bit draw.
Graph random_graph(int n, std::uint64_t seed);

class Graph6Error : public std::runtime_error
{
public:
    Graph6Error(std::size_t offset, const std::string & what);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parse one graph6 record (an optional ">>graph6<<" prefix is accepted).
/// Trailing whitespace is not stripped. Throws Graph6Error.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph & g);

} // namespace oddom
