#include "nodedom/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "nodedom/errors.hpp"

namespace nodedom {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

bool skippable(const std::vector<std::string>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

}  // namespace

Graph read_snap_graph(const std::filesystem::path& edge_file,
                      const std::optional<std::filesystem::path>& node_file) {
  auto in = open_input(edge_file);
  std::vector<std::pair<std::string, std::string>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (skippable(tokens)) continue;
    if (tokens.size() != 2) {
      throw ParseError("expected `<id> <id>`, got " + std::to_string(tokens.size()) + " tokens",
                       line_no);
    }
    edges.emplace_back(tokens[0], tokens[1]);
  }

  std::vector<std::string> extra;
  if (node_file) {
    auto nodes_in = open_input(*node_file);
    line_no = 0;
    while (std::getline(nodes_in, line)) {
      ++line_no;
      const auto tokens = tokens_of(line);
      if (skippable(tokens)) continue;
      if (tokens.size() != 1) throw ParseError("expected a single node ID", line_no);
      extra.push_back(tokens[0]);
    }
  }
  return Graph::from_edges(edges, extra);
}

CommunitySet read_communities(const std::filesystem::path& file, const Graph& g, std::string name,
                              bool ground_truth) {
  auto in = open_input(file);
  CommunitySet cs;
  cs.name = std::move(name);
  cs.ground_truth = ground_truth;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (skippable(tokens)) continue;
    std::vector<NodeIndex> members;
    for (const auto& tok : tokens) {
      if (auto v = g.find(tok)) {
        members.push_back(*v);
      } else {
        ++cs.unresolved_ids;
      }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) {
      ++cs.dropped_empty;
    } else {
      cs.sets.push_back(std::move(members));
    }
  }
  return cs;
}

DominanceVariant read_relation_lists(const std::filesystem::path& file, const Graph& g) {
  auto in = open_input(file);
  std::vector<std::vector<std::uint32_t>> lists(g.node_count());
  std::unordered_map<std::string, std::uint32_t> simplex_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (skippable(tokens)) continue;
    if (tokens.size() != 2) throw ParseError("expected `<node_id> <simplex_id>`", line_no);
    const auto v = g.find(tokens[0]);
    if (!v) throw ParseError("unknown node ID `" + tokens[0] + "`", line_no);
    const auto [it, inserted] =
        simplex_ids.emplace(tokens[1], static_cast<std::uint32_t>(simplex_ids.size()));
    lists[*v].push_back(it->second);
  }
  return DominanceVariant::relation(std::move(lists));
}

std::string canonical_edge_list(const Graph& g) {
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;  // (rank u, rank v)
  edges.reserve(g.edge_count());
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex w : g.neighbors(u)) {
      if (w <= u) continue;
      const NodeIndex ru = g.id_rank(u), rw = g.id_rank(w);
      edges.emplace_back(std::min(ru, rw), std::max(ru, rw));
    }
  }
  std::sort(edges.begin(), edges.end());
  std::string out;
  const auto by_rank = g.nodes_by_rank();
  for (const auto& [ru, rw] : edges) {
    out += g.external_id(by_rank[ru]);
    out += '\t';
    out += g.external_id(by_rank[rw]);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << content;
}

std::string id_lines(const Graph& g, std::span<const NodeIndex> nodes) {
  std::vector<NodeIndex> ordered(nodes.begin(), nodes.end());
  std::sort(ordered.begin(), ordered.end(),
            [&](NodeIndex a, NodeIndex b) { return g.id_rank(a) < g.id_rank(b); });
  std::string out;
  for (NodeIndex v : ordered) {
    out += g.external_id(v);
    out += '\n';
  }
  return out;
}

std::string removal_log_csv(const Graph& g, const CollapseResult& cr) {
  std::string out = "removed_id,dominator_id,iteration\n";
  for (const auto& entry : cr.removal_log) {
    out += g.external_id(entry.removed);
    out += ',';
    out += g.external_id(entry.dominator);
    out += ',';
    out += std::to_string(entry.iteration);
    out += '\n';
  }
  return out;
}

std::string candidate_sets_cmty(const Graph& g, const std::vector<CandidateSet>& sets) {
  std::string out;
  for (const auto& cs : sets) {
    std::vector<NodeIndex> ordered = cs.members;
    std::sort(ordered.begin(), ordered.end(),
              [&](NodeIndex a, NodeIndex b) { return g.id_rank(a) < g.id_rank(b); });
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      if (i > 0) out += '\t';
      out += g.external_id(ordered[i]);
    }
    out += '\n';
  }
  return out;
}

std::string bc_degree_csv(const std::vector<BcDegreeRow>& rows) {
  std::ostringstream out;
  out << "id,degree,betweenness,region\n";
  for (const auto& row : rows) {
    out << row.id << ',' << row.degree << ',' << row.bc << ','
        << (row.core ? "core" : "periphery") << '\n';
  }
  return out.str();
}

}  // namespace nodedom
