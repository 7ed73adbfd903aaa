#include <oddom/wod.hpp>

namespace oddom {

namespace {

void check_universe(const Graph & g, const VertexSet & s)
{
    if (s.universe() != g.order())
        throw std::invalid_argument("vertex set universe " + std::to_string(s.universe()) +
                                    " does not match graph order " + std::to_string(g.order()));
}

gf2::BitVector ones(std::size_t len)
{
    gf2::BitVector v(len);
    for (std::size_t i = 0; i < len; ++i)
        v.set(i);
    return v;
}

VertexSet lift(const gf2::BitVector & x, const std::vector<int> & indices, int universe)
{
    Mask m = 0;
    for (std::size_t i = 0; i < indices.size(); ++i)
        if (x.test(i))
            m |= bit(indices[i]);
    return VertexSet(universe, m);
}

bool odd_count(const Graph & g, int u, Mask s)
{
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (((s >> v) & 1U) && g.has_edge(u, v))
            ++count;
    return count % 2 == 1;
}

} // namespace

bool is_wod(const Graph & g, const VertexSet & b)
{
    return wod_certificate(g, b).has_value();
}

int pi(const Graph & g, const VertexSet & b)
{
    check_universe(g, b);
    auto gamma = cut_matrix(g, b);
    const auto base = gf2::rank(gamma);
    gamma.prepend_row(ones(gamma.cols()));
    return static_cast<int>(gf2::rank(gamma) - base);
}

std::optional<VertexSet> wod_certificate(const Graph & g, const VertexSet & b)
{
    check_universe(g, b);
    // Rows indexed by B, columns by V\B.
    const auto system = cut_matrix(g, ~b);
    const auto x = gf2::solve(system, ones(system.rows()));
    if (! x)
        return std::nullopt;
    return lift(*x, (~b).to_vector(), g.order());
}

std::optional<VertexSet> non_wod_certificate(const Graph & g, const VertexSet & b)
{
    check_universe(g, b);
    auto system = cut_matrix(g, b);
    system.prepend_row(ones(system.cols()));
    gf2::BitVector rhs(system.rows());
    rhs.set(0);
    const auto x = gf2::solve(system, rhs);
    if (! x)
        return std::nullopt;
    return lift(*x, b.to_vector(), g.order());
}

WodCertificate certify(const Graph & g, const VertexSet & b)
{
    if (auto c = wod_certificate(g, b))
        return {CertificateKind::wod, *c};
    if (auto d = non_wod_certificate(g, b))
        return {CertificateKind::non_wod, *d};
    throw std::logic_error("neither certificate exists for " + b.to_string());
}

bool verify_wod_certificate(const Graph & g, const VertexSet & b, const VertexSet & c)
{
    if (b.universe() != g.order() || c.universe() != g.order())
        return false;
    if ((b.mask() & c.mask()) != 0)
        return false;
    for (int u : b.to_vector())
        if (! odd_count(g, u, c.mask()))
            return false;
    return true;
}

bool verify_non_wod_certificate(const Graph & g, const VertexSet & b, const VertexSet & d)
{
    if (b.universe() != g.order() || d.universe() != g.order())
        return false;
    if ((d.mask() & ~b.mask()) != 0)
        return false;
    if (d.size() % 2 == 0)
        return false;
    for (int u = 0; u < g.order(); ++u)
        if (! b.contains(u) && odd_count(g, u, d.mask()))
            return false;
    return true;
}

bool verify_certificate(const Graph & g, const VertexSet & b, const WodCertificate & cert)
{
    return cert.kind == CertificateKind::wod ? verify_wod_certificate(g, b, cert.witness)
                                             : verify_non_wod_certificate(g, b, cert.witness);
}

bool is_wod_bruteforce(const Graph & g, const VertexSet & b)
{
    check_universe(g, b);
    const auto outside = (~b).to_vector();
    if (static_cast<int>(outside.size()) > bruteforce_limit)
        throw std::invalid_argument("brute-force WOD check limited to |V\\B| <= " + std::to_string(bruteforce_limit) +
                                    ", got " + std::to_string(outside.size()));
    // Gray-code walk over subsets of V\B, flipping one member per step.
    Mask odd = 0;
    if (b.empty())
        return true;
    const std::uint64_t count = std::uint64_t{1} << outside.size();
    for (std::uint64_t step = 1; step < count; ++step) {
        odd ^= g.row(outside[static_cast<std::size_t>(std::countr_zero(step))]);
        if ((b.mask() & ~odd) == 0)
            return true;
    }
    return false;
}

} // namespace oddom
