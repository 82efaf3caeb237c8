#include "adabet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace adabet {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

void build_csr(std::size_t n, const std::vector<Arc>& sorted_arcs, std::vector<std::size_t>& offsets,
               std::vector<NodeId>& targets) {
  offsets.assign(n + 1, 0);
  targets.resize(sorted_arcs.size());
  for (const auto& [u, v] : sorted_arcs) ++offsets[u + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  for (std::size_t i = 0; i < sorted_arcs.size(); ++i) targets[i] = sorted_arcs[i].second;
}

}  // namespace

Graph Graph::from_arcs(std::size_t num_nodes, std::span<const Arc> arcs, bool directed,
                       std::vector<std::string> labels, IngestStats* stats) {
  if (!labels.empty() && labels.size() != num_nodes) {
    throw std::invalid_argument("label count does not match node count");
  }
  IngestStats local;
  std::vector<Arc> kept;
  kept.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    if (u >= num_nodes || v >= num_nodes) {
      throw std::out_of_range("arc endpoint out of range");
    }
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    if (!directed && u > v) std::swap(u, v);
    kept.emplace_back(u, v);
  }
  std::sort(kept.begin(), kept.end());
  const auto unique_end = std::unique(kept.begin(), kept.end());
  local.duplicates_dropped = static_cast<std::size_t>(kept.end() - unique_end);
  kept.erase(unique_end, kept.end());

  Graph g;
  g.num_nodes_ = num_nodes;
  g.directed_ = directed;

  std::vector<Arc> forward;
  std::vector<Arc> reverse;
  forward.reserve(directed ? kept.size() : 2 * kept.size());
  reverse.reserve(directed ? kept.size() : 0);
  for (const auto& [u, v] : kept) {
    forward.emplace_back(u, v);
    if (directed) {
      reverse.emplace_back(v, u);
    } else {
      forward.emplace_back(v, u);
    }
  }
  std::sort(forward.begin(), forward.end());
  build_csr(num_nodes, forward, g.forward_offsets_, g.forward_targets_);
  if (directed) {
    std::sort(reverse.begin(), reverse.end());
    build_csr(num_nodes, reverse, g.reverse_offsets_, g.reverse_targets_);
  }

  g.labels_ = std::move(labels);
  g.label_index_.reserve(g.labels_.size());
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    g.label_index_.emplace(g.labels_[i], static_cast<NodeId>(i));
  }
  if (stats != nullptr) *stats = local;
  return g;
}

bool Graph::has_arc(NodeId u, NodeId v) const {
  const auto nbrs = out_neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::string Graph::label(NodeId v) const {
  check(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<NodeId> Graph::find(const std::string& label) const {
  if (labels_.empty()) {
    NodeId id = 0;
    const auto* end = label.data() + label.size();
    const auto [ptr, ec] = std::from_chars(label.data(), end, id);
    if (ec != std::errc{} || ptr != end || id >= num_nodes_) return std::nullopt;
    return id;
  }
  const auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

void Graph::write_edge_list(std::ostream& out) const {
  for (NodeId u = 0; u < num_nodes_; ++u) {
    for (const NodeId v : out_neighbors(u)) {
      if (!directed_ && v < u) continue;
      out << label(u) << '\t' << label(v) << '\n';
    }
  }
}

LoadResult load_edge_list(std::istream& in, bool directed) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<Arc> arcs;

  const auto intern = [&](const std::string& token) {
    const auto [it, inserted] = ids.try_emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;

    std::istringstream fields(line);
    std::string a;
    std::string b;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError(line_no, "expected exactly two node tokens");
    }
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    arcs.emplace_back(u, v);
  }
  if (in.bad()) throw std::runtime_error("read error");
  if (labels.empty()) throw std::runtime_error("edge list contains no nodes");

  LoadResult result;
  const std::size_t n = labels.size();
  result.graph = Graph::from_arcs(n, arcs, directed, std::move(labels), &result.stats);
  return result;
}

LoadResult load_edge_list(const std::filesystem::path& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_edge_list(in, directed);
}

}  // namespace adabet
