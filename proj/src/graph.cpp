#include <oddom/graph.hpp>

#include <algorithm>
#include <random>

namespace oddom {

namespace {

void check_universe(int universe)
{
    if (universe < 0 || universe > max_order)
        throw std::invalid_argument("vertex set universe " + std::to_string(universe) + " outside [0, " +
                                    std::to_string(max_order) + "]");
}

void check_same_universe(const VertexSet & a, const VertexSet & b)
{
    if (a.universe() != b.universe())
        throw std::invalid_argument("vertex sets over different universes (" + std::to_string(a.universe()) +
                                    " vs " + std::to_string(b.universe()) + ")");
}

} // namespace

VertexSet::VertexSet(int universe, Mask mask) : universe_(universe), mask_(mask)
{
    check_universe(universe);
    if ((mask & ~full_mask(universe)) != 0)
        throw std::invalid_argument("vertex set has members outside universe of size " + std::to_string(universe));
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vertices)
{
    return of(universe, std::vector<int>(vertices));
}

VertexSet VertexSet::of(int universe, const std::vector<int> & vertices)
{
    check_universe(universe);
    Mask m = 0;
    for (int v : vertices) {
        if (v < 0 || v >= universe)
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside universe of size " +
                                        std::to_string(universe));
        m |= bit(v);
    }
    return VertexSet(universe, m);
}

bool VertexSet::is_subset_of(const VertexSet & other) const
{
    check_same_universe(*this, other);
    return (mask_ & ~other.mask_) == 0;
}

bool VertexSet::intersects(const VertexSet & other) const
{
    check_same_universe(*this, other);
    return (mask_ & other.mask_) != 0;
}

VertexSet operator|(const VertexSet & a, const VertexSet & b)
{
    check_same_universe(a, b);
    return VertexSet(a.universe_, a.mask_ | b.mask_);
}

VertexSet operator&(const VertexSet & a, const VertexSet & b)
{
    check_same_universe(a, b);
    return VertexSet(a.universe_, a.mask_ & b.mask_);
}

VertexSet operator^(const VertexSet & a, const VertexSet & b)
{
    check_same_universe(a, b);
    return VertexSet(a.universe_, a.mask_ ^ b.mask_);
}

VertexSet operator-(const VertexSet & a, const VertexSet & b)
{
    check_same_universe(a, b);
    return VertexSet(a.universe_, a.mask_ & ~b.mask_);
}

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask m = mask_; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

std::string VertexSet::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (int v : to_vector()) {
        if (! first)
            s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

Graph::Graph(int n)
{
    check_universe(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>> & edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph Graph::from_rows(std::vector<Mask> rows)
{
    const int n = static_cast<int>(rows.size());
    check_universe(n);
    for (int v = 0; v < n; ++v) {
        if ((rows[v] & ~full_mask(n)) != 0)
            throw std::invalid_argument("adjacency row " + std::to_string(v) + " has bits outside the vertex range");
        if ((rows[v] >> v) & 1U)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        for (Mask m = rows[v]; m != 0; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (! ((rows[u] >> v) & 1U))
                throw std::invalid_argument("adjacency is not symmetric at (" + std::to_string(v) + ", " +
                                            std::to_string(u) + ")");
        }
    }
    Graph g;
    g.rows_ = std::move(rows);
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= order())
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside graph of order " +
                                    std::to_string(order()));
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
}

int Graph::edge_count() const
{
    int twice = 0;
    for (auto r : rows_)
        twice += std::popcount(r);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
        for (Mask m = rows_[u] & ~full_mask(u + 1); m != 0; m &= m - 1)
            out.emplace_back(u, std::countr_zero(m));
    return out;
}

std::vector<int> Graph::degree_sequence() const
{
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        out.push_back(degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::max_degree() const
{
    if (rows_.empty())
        throw std::invalid_argument("maximum degree of the empty graph is undefined");
    int d = 0;
    for (int v = 0; v < order(); ++v)
        d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const
{
    if (rows_.empty())
        throw std::invalid_argument("minimum degree of the empty graph is undefined");
    int d = order();
    for (int v = 0; v < order(); ++v)
        d = std::min(d, degree(v));
    return d;
}

bool Graph::is_regular() const
{
    return rows_.empty() || max_degree() == min_degree();
}

Mask odd_neighbourhood(const Graph & g, Mask c)
{
    Mask odd = 0;
    for (; c != 0; c &= c - 1)
        odd ^= g.row(std::countr_zero(c));
    return odd;
}

VertexSet odd_neighbourhood(const Graph & g, const VertexSet & c)
{
    if (c.universe() != g.order())
        throw std::invalid_argument("vertex set universe does not match graph order");
    return VertexSet(g.order(), odd_neighbourhood(g, c.mask()));
}

VertexSet closed_odd_neighbourhood(const Graph & g, const VertexSet & c)
{
    // |N[u] & C| = |N(u) & C| + [u in C], so only members of C flip parity.
    return odd_neighbourhood(g, c) ^ c;
}

bool is_odd_dominating_set(const Graph & g, const VertexSet & c)
{
    return closed_odd_neighbourhood(g, c) == g.vertices();
}

Graph complement(const Graph & g)
{
    const int n = g.order();
    std::vector<Mask> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        rows[v] = ~g.row(v) & full_mask(n) & ~bit(v);
    return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph & g, const Graph & h)
{
    const int n = g.order() + h.order();
    if (n > max_order)
        throw std::invalid_argument("disjoint union has order " + std::to_string(n) + ", above the limit of " +
                                    std::to_string(max_order));
    std::vector<Mask> rows(g.rows());
    for (Mask r : h.rows())
        rows.push_back(r << g.order());
    return Graph::from_rows(std::move(rows));
}

Graph power(const Graph & g, int r)
{
    if (r < 1)
        throw std::invalid_argument("power needs at least one copy");
    if (static_cast<long long>(g.order()) * r > max_order)
        throw std::invalid_argument(std::to_string(r) + " copies of a graph of order " + std::to_string(g.order()) +
                                    " exceed the order limit of " + std::to_string(max_order));
    Graph out = g;
    for (int i = 1; i < r; ++i)
        out = disjoint_union(g, out);
    return out;
}

Graph complete_multipartite(int p, int q)
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("complete multipartite graph needs p >= 1 and q >= 1");
    if (static_cast<long long>(p) * q > max_order)
        throw std::invalid_argument("complete multipartite graph of order " + std::to_string(p * q) +
                                    " exceeds the limit of " + std::to_string(max_order));
    const int n = p * q;
    std::vector<Mask> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int part = v / p;
        const Mask own = full_mask(p) << (part * p);
        rows[v] = full_mask(n) & ~own;
    }
    return Graph::from_rows(std::move(rows));
}

gf2::BitMatrix cut_matrix(const Graph & g, const VertexSet & b)
{
    if (b.universe() != g.order())
        throw std::invalid_argument("vertex set universe does not match graph order");
    const auto cols = b.to_vector();
    const auto rows = (~b).to_vector();
    gf2::BitMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (g.has_edge(rows[i], cols[j]))
                m.set(i, j);
    return m;
}

Graph random_graph(int n, std::uint64_t seed)
{
    Graph g(n);
    std::mt19937_64 rng(seed);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng() >> 63)
                g.add_edge(i, j);
    return g;
}

} // namespace oddom
