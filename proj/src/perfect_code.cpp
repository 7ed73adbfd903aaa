#include <oddom/perfect_code.hpp>

namespace oddom {

namespace {

Graph complete_graph(int n)
{
    return complete_multipartite(1, n);
}

class CodeSearch
{
public:
    CodeSearch(const Graph & g, Mask allowed, int target_size) :
        n_(g.order()), allowed_(allowed), target_(target_size)
    {
        closed_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            closed_.push_back(g.row(v) | bit(v));
    }

    std::optional<Mask> run()
    {
        if (descend(n_ - 1, 0, 0, 0))
            return found_;
        return std::nullopt;
    }

private:
    // Decides vertices from the highest index down, trying "out" before "in",
    // so the first complete code reached is the smallest mask.
    bool descend(int v, Mask code, Mask covered, int size)
    {
        if (target_ >= 0 && (size > target_ || size + v + 1 < target_))
            return false;

        const Mask undecided = full_mask(v + 1);
        for (Mask open = full_mask(n_) & ~covered; open != 0; open &= open - 1) {
            const int u = std::countr_zero(open);
            if ((closed_[u] & undecided & allowed_) == 0)
                return false;
        }
        if (v < 0) {
            found_ = code;
            return true;
        }

        if (descend(v - 1, code, covered, size))
            return true;
        if (((allowed_ >> v) & 1U) && (closed_[v] & covered) == 0)
            return descend(v - 1, code | bit(v), covered | closed_[v], size + 1);
        return false;
    }

    int n_;
    Mask allowed_;
    int target_;
    std::vector<Mask> closed_;
    Mask found_ = 0;
};

} // namespace

bool is_perfect_code(const Graph & g, const VertexSet & c)
{
    if (c.universe() != g.order())
        return false;
    for (int u : c.to_vector())
        for (int v : c.to_vector())
            if (g.has_edge(u, v))
                return false;
    for (int u = 0; u < g.order(); ++u) {
        if (c.contains(u))
            continue;
        int hits = 0;
        for (int v : c.to_vector())
            if (g.has_edge(u, v))
                ++hits;
        if (hits != 1)
            return false;
    }
    return true;
}

std::optional<PerfectCode> find_perfect_code_within(const Graph & g, const VertexSet & allowed,
                                                    const SolverOptions & options)
{
    if (allowed.universe() != g.order())
        throw std::invalid_argument("allowed set universe does not match graph order");
    if (g.order() > options.cap)
        throw CapExceeded(g.order(), options.cap);
    const int n = g.order();
    if (n == 0)
        return PerfectCode{VertexSet::none(0)};

    int target = -1;
    if (g.is_regular()) {
        const int per_member = g.max_degree() + 1;
        if (n % per_member != 0)
            return std::nullopt;
        target = n / per_member;
    }
    CodeSearch search(g, allowed.mask(), target);
    if (auto m = search.run())
        return PerfectCode{VertexSet(n, *m)};
    return std::nullopt;
}

std::optional<PerfectCode> find_perfect_code(const Graph & g, const SolverOptions & options)
{
    return find_perfect_code_within(g, g.vertices(), options);
}

bool check_kappa_equality(const Graph & g, const SolverOptions & options)
{
    const int n = g.order();
    const int delta = g.max_degree();
    const bool value_attained = kappa(g, options).value * (delta + 1) == n * delta;

    Mask top = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == delta)
            top |= bit(v);
    const bool code_exists = find_perfect_code_within(g, VertexSet(n, top), options).has_value();
    return value_attained == code_exists;
}

bool check_kappa_prime_equality(const Graph & g, const SolverOptions & options)
{
    const int n = g.order();
    if (n == 0)
        throw std::invalid_argument("kappa' equality needs a non-empty graph");
    if (! g.is_regular())
        throw std::invalid_argument("kappa' equality needs a regular graph");
    const int delta = g.min_degree();
    const int gap = n - delta;
    if (n % gap != 0)
        throw std::invalid_argument("n/(n-delta) = " + std::to_string(n) + "/" + std::to_string(gap) +
                                    " is not an integer");
    const int ratio = n / gap;
    if (ratio % 2 == 0)
        throw std::invalid_argument("n/(n-delta) = " + std::to_string(ratio) + " is even");

    const bool value_attained = kappa_prime(g, options).value == ratio;
    const bool code_exists = find_perfect_code(complement(g), options).has_value();
    return value_attained == code_exists;
}

GadgetInstance k4_gadget_reduction(const Graph & g)
{
    const int n = g.order();
    if (n == 0)
        throw std::invalid_argument("K4 gadget reduction needs a non-empty cubic graph");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument("K4 gadget reduction needs a cubic graph; vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(g.degree(v)));
    if (n % 4 != 0)
        throw std::invalid_argument("order " + std::to_string(n) +
                                    " is not a multiple of 4, so a perfect code (of size n/4) cannot exist");
    const int quarter = n / 4;
    if (quarter % 2 == 1)
        return {complement(g), quarter};
    if (n + 4 > max_order)
        throw std::invalid_argument("adding the K4 gadget would exceed the order limit of " +
                                    std::to_string(max_order));
    return {complement(disjoint_union(g, complete_graph(4))), quarter + 1};
}

} // namespace oddom
