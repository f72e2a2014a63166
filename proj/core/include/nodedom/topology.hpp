#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nodedom/collapse.hpp"
#include "nodedom/graph.hpp"

namespace nodedom {

/// Flag complex truncated at max_dim: every (k+1)-clique of the graph is a
/// k-simplex for k <= max_dim. Simplices are stored flat with stride k+1,
/// vertex tuples ascending and tuples in lexicographic order.
struct FlagComplex {
  int max_dim = 2;
  std::array<std::vector<NodeIndex>, 4> simplices;

  std::size_t count(int k) const {
    return simplices[static_cast<std::size_t>(k)].size() / static_cast<std::size_t>(k + 1);
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (int k = 0; k <= max_dim; ++k) t += count(k);
    return t;
  }
  /// Highest dimension with at least one simplex (-1 for the empty complex).
  int dimension() const {
    for (int k = max_dim; k >= 0; --k) {
      if (count(k) > 0) return k;
    }
    return -1;
  }
};

inline constexpr std::size_t kDefaultSimplexBudget = 1'000'000;

/// Enumerates all cliques of size <= max_dim + 1. max_dim must be 1..3.
/// Throws ResourceError once the total simplex count exceeds the budget.
FlagComplex flag_complex(const Graph& g, int max_dim,
                         std::size_t budget = kDefaultSimplexBudget);

/// Betti numbers over GF(2), reported for k < max_dim; the top dimension is
/// omitted because truncation makes it unreliable.
struct BettiVector {
  std::vector<std::int64_t> b;
  bool operator==(const BettiVector&) const = default;
};

BettiVector betti(const FlagComplex& fc);

struct HomologyCheck {
  bool preserved = false;
  BettiVector original;
  BettiVector core;
};

/// Compares Betti vectors of the flag complexes of g and of its core-induced
/// subgraph. Only defined for the one-hop collapse (the two-hop variant is
/// designed to fill small holes in, i.e. to change homology) — anything else
/// is a ContractError.
HomologyCheck verify_property4(const Graph& g, const CollapseResult& cr, int max_dim,
                               std::size_t budget = kDefaultSimplexBudget);

/// True iff hop distances between core nodes are identical in g and in the
/// core-induced subgraph. One-hop collapse results only.
bool verify_property1(const Graph& g, const CollapseResult& cr);

}  // namespace nodedom
