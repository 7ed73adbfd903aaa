#pragma once

#include <oddom/graph.hpp>
#include <oddom/solvers.hpp>

#include <optional>
#include <utility>

namespace oddom {

/// Independent set C such that every vertex outside C has exactly one neighbour in C.
struct PerfectCode
{
    VertexSet code;
    friend bool operator==(const PerfectCode &, const PerfectCode &) = default;
};

bool is_perfect_code(const Graph & g, const VertexSet & c);

/// Smallest perfect code by mask value, or nullopt.
///
/// Equivalently the closed neighbourhoods of the code partition V. On a
/// regular graph every perfect code has n/(Delta+1) members, so a non-integral
/// ratio answers immediately. Throws CapExceeded past the order cap.
std::optional<PerfectCode> find_perfect_code(const Graph & g, const SolverOptions & options = {});

/// As find_perfect_code, but only vertices in `allowed` may join the code.
std::optional<PerfectCode> find_perfect_code_within(const Graph & g, const VertexSet & allowed,
                                                    const SolverOptions & options = {});

/// Evaluates both sides of: kappa(G) = n*Delta/(Delta+1) iff G has a perfect
/// code made of maximum-degree vertices. Returns whether they agree.
bool check_kappa_equality(const Graph & g, const SolverOptions & options = {});

/// For a delta-regular G with n/(n-delta) an odd integer, evaluates both sides
/// of: kappa'(G) = n/(n-delta) iff the complement of G has a perfect code.
/// Throws std::invalid_argument naming the failed precondition otherwise.
bool check_kappa_prime_equality(const Graph & g, const SolverOptions & options = {});

struct GadgetInstance
{
    Graph graph;
    int target_kappa_prime;
};

/// For a cubic G whose order is a multiple of 4: G has a perfect code iff
/// kappa'(result.graph) == result.target_kappa_prime.
///
/// n/4 odd: (complement(G), n/4). n/4 even: a K4 is added first,
/// (complement(G u K4), n/4 + 1). Throws std::invalid_argument for non-cubic
/// input, for 4 not dividing n, or when the gadget would exceed max_order.
GadgetInstance k4_gadget_reduction(const Graph & g);

} // namespace oddom
