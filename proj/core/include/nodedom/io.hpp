#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nodedom/collapse.hpp"
#include "nodedom/communities.hpp"
#include "nodedom/evaluation.hpp"
#include "nodedom/graph.hpp"

namespace nodedom {

/// SNAP undirected edge list: one `<id><whitespace><id>` per line, `#` lines
/// ignored. The optional node list (one ID per line) adds isolated vertices.
/// Malformed lines raise ParseError with the line number.
Graph read_snap_graph(const std::filesystem::path& edge_file,
                      const std::optional<std::filesystem::path>& node_file = std::nullopt);

/// SNAP cmty format: one community per line, whitespace-separated node IDs.
/// IDs that do not resolve against g are counted, not dropped silently.
CommunitySet read_communities(const std::filesystem::path& file, const Graph& g,
                              std::string name, bool ground_truth);

/// Relation incidences: one `<node_id><TAB><simplex_id>` per line. Nodes with
/// no incidences get empty lists. Unresolvable node IDs are a ParseError.
DominanceVariant read_relation_lists(const std::filesystem::path& file, const Graph& g);

/// Canonical edge-list form: smaller external ID first per line, lines sorted
/// by ID order. Re-ingesting and re-exporting reproduces the bytes.
std::string canonical_edge_list(const Graph& g);

void write_text_file(const std::filesystem::path& path, const std::string& content);

/// One external ID per line, in canonical ID order.
std::string id_lines(const Graph& g, std::span<const NodeIndex> nodes);

/// removed_id,dominator_id,iteration CSV (with header).
std::string removal_log_csv(const Graph& g, const CollapseResult& cr);

/// cmty-format lines (tab-separated external IDs) for candidate sets.
std::string candidate_sets_cmty(const Graph& g, const std::vector<CandidateSet>& sets);

/// degree/bc/region scatter CSV (with header).
std::string bc_degree_csv(const std::vector<BcDegreeRow>& rows);

}  // namespace nodedom
