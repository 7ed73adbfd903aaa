#pragma once

#include <oddom/graph.hpp>

#include <optional>

namespace oddom {

// Weak odd domination.
//
// B is a WOD set when some C disjoint from B has B inside Odd(C). Membership
// reduces to solvability of the GF(2) system cut_matrix(G, V\B) * X = 1_B, so
// everything here is polynomial. When B is not WOD there is an odd-size
// D inside B with Odd(D) inside B, found from the stacked system
// [1_B ; cut_matrix(G, B)] * D = [1 ; 0].

enum class CertificateKind
{
    wod,
    non_wod
};

struct WodCertificate
{
    CertificateKind kind;
    /// C for a WOD set, D for a non-WOD set.
    VertexSet witness;

    friend bool operator==(const WodCertificate &, const WodCertificate &) = default;
};

bool is_wod(const Graph & g, const VertexSet & b);

/// Rank increment of stacking B's all-ones row on cut_matrix(G, B): 0 when B is WOD, 1 otherwise.
int pi(const Graph & g, const VertexSet & b);

/// Canonical C (free variables zero), or nullopt when B is not WOD.
std::optional<VertexSet> wod_certificate(const Graph & g, const VertexSet & b);

/// Canonical odd D inside B with Odd(D) inside B, or nullopt when B is WOD.
std::optional<VertexSet> non_wod_certificate(const Graph & g, const VertexSet & b);

/// Whichever of the two certificates exists; exactly one always does.
WodCertificate certify(const Graph & g, const VertexSet & b);

// The verifiers count neighbours directly and never touch the linear algebra.
bool verify_wod_certificate(const Graph & g, const VertexSet & b, const VertexSet & c);
bool verify_non_wod_certificate(const Graph & g, const VertexSet & b, const VertexSet & d);
bool verify_certificate(const Graph & g, const VertexSet & b, const WodCertificate & cert);

/// Largest |V\B| accepted by is_wod_bruteforce.
inline constexpr int bruteforce_limit = 25;

/// Reference oracle: tries every C inside V\B.
/// Throws std::invalid_argument when |V\B| > bruteforce_limit.
bool is_wod_bruteforce(const Graph & g, const VertexSet & b);

} // namespace oddom
