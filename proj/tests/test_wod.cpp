#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <oddom/fixtures.hpp>
#include <oddom/wod.hpp>

using namespace oddom;

namespace {

const Graph c4 = fixtures::cycle(4);
const Graph c5 = fixtures::cycle(5);
const Graph k2 = fixtures::complete(2);

std::vector<Graph> sample_graphs()
{
    std::vector<Graph> out{c4, c5, k2, fixtures::petersen(), fixtures::hypercube(3), fixtures::star(6),
                           complete_multipartite(2, 3)};
    std::mt19937_64 rng(10);
    for (int i = 0; i < 20; ++i)
        out.push_back(oracle::random_graph(2 + static_cast<int>(rng() % 10), rng));
    return out;
}

} // namespace

TEST_CASE("empty set is WOD")
{
    for (const auto & g : sample_graphs()) {
        CHECK(is_wod(g, VertexSet::none(g.order())));
        CHECK(pi(g, VertexSet::none(g.order())) == 0);
        CHECK(wod_certificate(g, VertexSet::none(g.order())) == VertexSet::none(g.order()));
    }
}

TEST_CASE("open neighbourhoods are WOD, closed ones are not")
{
    for (const auto & g : sample_graphs())
        for (int v = 0; v < g.order(); ++v) {
            CHECK(is_wod(g, g.neighbours(v)));
            CHECK(verify_wod_certificate(g, g.neighbours(v), VertexSet::of(g.order(), {v})));
            CHECK_FALSE(is_wod(g, g.closed_neighbours(v)));
            CHECK(pi(g, g.closed_neighbours(v)) == 1);
            const auto d = non_wod_certificate(g, g.closed_neighbours(v));
            REQUIRE(d);
            CHECK(verify_non_wod_certificate(g, g.closed_neighbours(v), *d));
            CHECK(verify_non_wod_certificate(g, g.closed_neighbours(v), VertexSet::of(g.order(), {v})));
        }
}

TEST_CASE("whole vertex set is never WOD")
{
    for (const auto & g : sample_graphs())
        CHECK_FALSE(is_wod(g, g.vertices()));
}

TEST_CASE("pi examples")
{
    CHECK(pi(c5, VertexSet::of(5, {4, 0, 1})) == 1);
    CHECK(pi(c4, VertexSet::of(4, {0, 1})) == 0);
}

TEST_CASE("wod certificate examples")
{
    CHECK(wod_certificate(c4, VertexSet::of(4, {0, 2})) == VertexSet::of(4, {1}));
    CHECK_FALSE(wod_certificate(c5, VertexSet::of(5, {0, 1, 2, 3})));
}

TEST_CASE("non-WOD certificate examples")
{
    CHECK(non_wod_certificate(k2, VertexSet::all(2)) == VertexSet::of(2, {0}));
    CHECK_FALSE(non_wod_certificate(c4, VertexSet::of(4, {0, 1})));
}

TEST_CASE("verifiers")
{
    CHECK(verify_wod_certificate(c5, VertexSet::of(5, {1, 4}), VertexSet::of(5, {0})));
    CHECK_FALSE(verify_wod_certificate(c5, VertexSet::of(5, {1, 4}), VertexSet::of(5, {1})));
    CHECK(verify_non_wod_certificate(k2, VertexSet::all(2), VertexSet::of(2, {0})));
    CHECK_FALSE(verify_non_wod_certificate(k2, VertexSet::all(2), VertexSet::all(2)));
    // D not inside B.
    CHECK_FALSE(verify_non_wod_certificate(c5, VertexSet::of(5, {0}), VertexSet::of(5, {1})));
    // Odd(D) leaks out of B.
    CHECK_FALSE(verify_non_wod_certificate(c5, VertexSet::of(5, {0, 1}), VertexSet::of(5, {0})));
    // Wrong universe.
    CHECK_FALSE(verify_wod_certificate(c5, VertexSet::none(4), VertexSet::none(5)));
}

TEST_CASE("brute-force oracle")
{
    CHECK_FALSE(is_wod_bruteforce(c5, VertexSet::of(5, {0, 1, 2})));
    const auto g23 = complete_multipartite(2, 3);
    for (int part = 0; part < 3; ++part) {
        const auto b = ~VertexSet::of(6, {2 * part, 2 * part + 1});
        CHECK(is_wod_bruteforce(g23, b));
        CHECK(is_wod(g23, b));
    }
    CHECK_THROWS_AS(is_wod_bruteforce(Graph(30), VertexSet::none(30)), std::invalid_argument);
    CHECK(is_wod_bruteforce(Graph(30), VertexSet::of(30, {0, 1, 2, 3, 4})) == false);
}

TEST_CASE("dichotomy on every labelled graph with n <= 5")
{
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t e = 0; e < graphs; ++e) {
            const auto g = oracle::labelled_graph(n, e);
            for (Mask m = 0; m < (Mask{1} << n); ++m) {
                const VertexSet b(n, m);
                const auto c = wod_certificate(g, b);
                const auto d = non_wod_certificate(g, b);
                REQUIRE(c.has_value() != d.has_value());
                CHECK(pi(g, b) == (c ? 0 : 1));
                CHECK(is_wod_bruteforce(g, b) == c.has_value());
                if (c)
                    CHECK(verify_wod_certificate(g, b, *c));
                else
                    CHECK(verify_non_wod_certificate(g, b, *d));
            }
        }
    }
}

TEST_CASE("dichotomy on random graphs up to n = 20")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const auto g = oracle::random_graph(n, rng, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
        const VertexSet b(n, rng() & full_mask(n));
        const auto cert = certify(g, b);
        CHECK(verify_certificate(g, b, cert));
        CHECK((cert.kind == CertificateKind::wod) == is_wod_bruteforce(g, b));
        CHECK(pi(g, b) == (cert.kind == CertificateKind::wod ? 0 : 1));
    }
}

TEST_CASE("subsets of WOD sets are WOD; supersets of non-WOD sets are not")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const auto g = oracle::random_graph(n, rng);
        const VertexSet b(n, rng() & full_mask(n));
        const VertexSet sub(n, b.mask() & rng());
        const VertexSet super(n, (b.mask() | rng()) & full_mask(n));
        if (is_wod(g, b))
            CHECK(is_wod(g, sub));
        else
            CHECK_FALSE(is_wod(g, super));
    }
}

TEST_CASE("non-WOD in G means the complement set is WOD in the complement graph")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const auto g = oracle::random_graph(n, rng);
        const VertexSet b(n, rng() & full_mask(n));
        if (! is_wod(g, b))
            CHECK(is_wod(complement(g), ~b));
    }
}
