#pragma once

#include <cstdint>

#include "nodedom/graph.hpp"

namespace nodedom {

/// Erdős–Rényi G(n, p), seeded, external IDs "0".."n-1".
Graph erdos_renyi(NodeIndex n, double p, std::uint64_t seed);

/// Uniform random labeled tree (Prüfer sequence), seeded. n >= 1.
Graph random_tree(NodeIndex n, std::uint64_t seed);

/// Cycle 1-2-...-n-1 (n >= 3).
Graph cycle_graph(NodeIndex n);

/// Complete graph on IDs 1..n.
Graph complete_graph(NodeIndex n);

/// Star: center ID 1, leaves 2..n+1.
Graph star_graph(NodeIndex leaves);

}  // namespace nodedom
