#include "nodedom/topology.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <span>
#include <stdexcept>

#include "nodedom/errors.hpp"

namespace nodedom {

namespace {

void intersect_into(std::span<const NodeIndex> a, std::span<const NodeIndex> b,
                    std::vector<NodeIndex>& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      out.push_back(a[i]);
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
}

}  // namespace

FlagComplex flag_complex(const Graph& g, int max_dim, std::size_t budget) {
  if (max_dim < 1 || max_dim > 3) {
    throw std::invalid_argument("flag_complex: max_dim must be 1, 2 or 3");
  }
  FlagComplex fc;
  fc.max_dim = max_dim;

  std::size_t total = 0;
  auto charge = [&](std::size_t added) {
    total += added;
    if (total > budget) {
      throw ResourceError("flag_complex: simplex budget of " + std::to_string(budget) +
                          " exceeded");
    }
  };

  auto& vertices = fc.simplices[0];
  vertices.resize(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) vertices[v] = v;
  charge(g.node_count());

  auto& edges = fc.simplices[1];
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex w : g.neighbors(u)) {
      if (w <= u) continue;
      charge(1);
      edges.push_back(u);
      edges.push_back(w);
    }
  }

  if (max_dim >= 2) {
    auto& triangles = fc.simplices[2];
    std::vector<NodeIndex> common;
    for (std::size_t e = 0; e < edges.size(); e += 2) {
      const NodeIndex u = edges[e], w = edges[e + 1];
      intersect_into(g.neighbors(u), g.neighbors(w), common);
      for (NodeIndex x : common) {
        if (x <= w) continue;  // ascending tuples only
        charge(1);
        triangles.push_back(u);
        triangles.push_back(w);
        triangles.push_back(x);
      }
    }
  }

  if (max_dim >= 3) {
    auto& tetrahedra = fc.simplices[3];
    const auto& triangles = fc.simplices[2];
    std::vector<NodeIndex> common, common3;
    for (std::size_t t = 0; t < triangles.size(); t += 3) {
      const NodeIndex u = triangles[t], w = triangles[t + 1], x = triangles[t + 2];
      intersect_into(g.neighbors(u), g.neighbors(w), common);
      intersect_into(common, g.neighbors(x), common3);
      for (NodeIndex y : common3) {
        if (y <= x) continue;
        charge(1);
        tetrahedra.push_back(u);
        tetrahedra.push_back(w);
        tetrahedra.push_back(x);
        tetrahedra.push_back(y);
      }
    }
  }
  // Edge enumeration above walks u ascending, so tuples are already in
  // lexicographic order within every dimension.
  return fc;
}

namespace {

// Dense GF(2) column vectors over the (k-1)-simplex rows.
class Gf2Rank {
 public:
  explicit Gf2Rank(std::size_t rows) : words_((rows + 63) / 64) {}

  /// Feeds one column; returns true if it extended the basis.
  bool add_column(std::vector<std::uint64_t> column) {
    for (const auto& [pivot, basis] : basis_) {
      if (test(column, pivot)) xor_into(column, basis);
    }
    const std::size_t pivot = lowest_set(column);
    if (pivot == kNone) return false;
    basis_.emplace_back(pivot, std::move(column));
    return true;
  }

  std::size_t rank() const { return basis_.size(); }
  std::size_t words() const { return words_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  static bool test(const std::vector<std::uint64_t>& col, std::size_t bit) {
    return (col[bit / 64] >> (bit % 64)) & 1u;
  }
  static void xor_into(std::vector<std::uint64_t>& col, const std::vector<std::uint64_t>& other) {
    for (std::size_t i = 0; i < col.size(); ++i) col[i] ^= other[i];
  }
  static std::size_t lowest_set(const std::vector<std::uint64_t>& col) {
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(col[i]));
    }
    return kNone;
  }

  std::size_t words_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> basis_;
};

// Index of an ascending tuple within the lex-sorted stride-(k+1) flat list.
std::size_t tuple_index(const std::vector<NodeIndex>& flat, int k,
                        std::span<const NodeIndex> tuple) {
  const std::size_t stride = static_cast<std::size_t>(k + 1);
  const std::size_t count = flat.size() / stride;
  std::size_t lo = 0, hi = count;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto* cand = flat.data() + mid * stride;
    const auto cmp = std::lexicographical_compare_three_way(cand, cand + stride, tuple.begin(),
                                                            tuple.end());
    if (cmp == std::strong_ordering::less) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// rank of the boundary map from k-simplices to (k-1)-simplices over GF(2).
std::size_t boundary_rank(const FlagComplex& fc, int k) {
  if (k < 1 || k > fc.max_dim || fc.count(k) == 0) return 0;
  const auto& faces = fc.simplices[static_cast<std::size_t>(k - 1)];
  const auto& cells = fc.simplices[static_cast<std::size_t>(k)];
  const std::size_t rows = fc.count(k - 1);
  const std::size_t stride = static_cast<std::size_t>(k + 1);

  Gf2Rank rank(rows);
  std::vector<NodeIndex> face(static_cast<std::size_t>(k));
  for (std::size_t c = 0; c * stride < cells.size(); ++c) {
    std::vector<std::uint64_t> column(rank.words(), 0);
    const NodeIndex* cell = cells.data() + c * stride;
    for (std::size_t omit = 0; omit < stride; ++omit) {
      face.clear();
      for (std::size_t i = 0; i < stride; ++i) {
        if (i != omit) face.push_back(cell[i]);
      }
      const std::size_t row = tuple_index(faces, k - 1, face);
      column[row / 64] ^= std::uint64_t{1} << (row % 64);
    }
    rank.add_column(std::move(column));
  }
  return rank.rank();
}

}  // namespace

BettiVector betti(const FlagComplex& fc) {
  BettiVector bv;
  std::array<std::size_t, 5> ranks{};  // ranks[k] = rank of boundary_k
  for (int k = 1; k <= fc.max_dim; ++k) ranks[static_cast<std::size_t>(k)] = boundary_rank(fc, k);
  for (int k = 0; k < fc.max_dim; ++k) {
    const auto ck = static_cast<std::int64_t>(fc.count(k));
    const auto rk = static_cast<std::int64_t>(ranks[static_cast<std::size_t>(k)]);
    const auto rk1 = static_cast<std::int64_t>(ranks[static_cast<std::size_t>(k + 1)]);
    bv.b.push_back(ck - rk - rk1);
  }
  return bv;
}

HomologyCheck verify_property4(const Graph& g, const CollapseResult& cr, int max_dim,
                               std::size_t budget) {
  if (cr.variant != VariantKind::OneHop) {
    throw ContractError(
        "verify_property4 requires a one-hop collapse; the two-hop variant fills in small "
        "holes and does not preserve flag-complex homology");
  }
  if (cr.core_mask.size() != g.node_count()) {
    throw std::invalid_argument("CollapseResult does not match this graph");
  }
  HomologyCheck check;
  check.original = betti(flag_complex(g, max_dim, budget));
  const Graph core = induced_subgraph(g, cr.core);
  check.core = betti(flag_complex(core, max_dim, budget));
  check.preserved = check.original == check.core;
  return check;
}

bool verify_property1(const Graph& g, const CollapseResult& cr) {
  if (cr.variant != VariantKind::OneHop) {
    throw ContractError("verify_property1 requires a one-hop collapse");
  }
  if (cr.core_mask.size() != g.node_count()) {
    throw std::invalid_argument("CollapseResult does not match this graph");
  }
  const Graph core = induced_subgraph(g, cr.core);
  // induced_subgraph numbers nodes by ascending original index, matching the
  // order of cr.core.
  for (NodeIndex local_s = 0; local_s < core.node_count(); ++local_s) {
    const PathStats in_core = bfs_shortest_paths(core, local_s);
    const PathStats in_full = bfs_shortest_paths(g, cr.core[local_s]);
    for (NodeIndex local_t = 0; local_t < core.node_count(); ++local_t) {
      if (in_core.dist[local_t] != in_full.dist[cr.core[local_t]]) return false;
    }
  }
  return true;
}

}  // namespace nodedom
