#pragma once

#include <oddom/graph.hpp>

#include <string_view>
#include <vector>

namespace oddom::fixtures {

Graph complete(int n);
/// v0 - v1 - ... - v(n-1) - v0; n >= 3.
Graph cycle(int n);
Graph path(int n);
/// Centre 0 joined to 1..n-1.
Graph star(int n);
/// d-cube on 2^d vertices; vertices adjacent when their indices differ in one bit.
Graph hypercube(int d);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen();

/// Every cubic graph of order n (n in {4, 6, 8, 10}) up to isomorphism,
/// disconnected ones included: 1, 2, 6 and 21 graphs respectively.
std::vector<Graph> cubic_graphs(int n);

/// Looks up "petersen", "kN", "cN", "pN", "starN" or "qD" (hypercube).
/// Throws std::invalid_argument for unknown names.
Graph named(std::string_view name);

} // namespace oddom::fixtures
