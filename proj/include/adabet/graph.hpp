#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace adabet {

using NodeId = std::uint32_t;
using Arc = std::pair<NodeId, NodeId>;

/// Raised by the edge-list reader; carries the 1-based line that failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Counts of input arcs that did not make it into the adjacency structure.
struct IngestStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// Immutable unweighted graph in compressed sparse row form.
///
/// Node ids are dense in [0, n). Out-neighbors and in-neighbors are both
/// stored; for undirected graphs the two views are the same arrays. Every
/// neighbor list is sorted by target id, so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph on `num_nodes` nodes. Self-loops and repeated arcs
  /// are dropped (for undirected graphs (u,v) and (v,u) are the same edge).
  /// `labels` is either empty (labels default to the decimal id) or has one
  /// entry per node.
  static Graph from_arcs(std::size_t num_nodes, std::span<const Arc> arcs, bool directed,
                         std::vector<std::string> labels = {}, IngestStats* stats = nullptr);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  bool directed() const noexcept { return directed_; }

  /// Number of stored forward adjacency entries (2|E| when undirected).
  std::size_t num_arcs() const noexcept { return forward_targets_.size(); }

  /// |E| for undirected graphs, number of arcs for directed ones.
  std::size_t num_edges() const noexcept {
    return directed_ ? forward_targets_.size() : forward_targets_.size() / 2;
  }

  std::span<const NodeId> out_neighbors(NodeId v) const {
    check(v);
    return {forward_targets_.data() + forward_offsets_[v],
            forward_targets_.data() + forward_offsets_[v + 1]};
  }

  std::span<const NodeId> in_neighbors(NodeId v) const {
    check(v);
    const auto& offs = directed_ ? reverse_offsets_ : forward_offsets_;
    const auto& tgts = directed_ ? reverse_targets_ : forward_targets_;
    return {tgts.data() + offs[v], tgts.data() + offs[v + 1]};
  }

  std::size_t out_degree(NodeId v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }

  bool has_arc(NodeId u, NodeId v) const;

  std::string label(NodeId v) const;
  std::optional<NodeId> find(const std::string& label) const;

  /// Writes one "u<TAB>v" line per stored edge using node labels. Undirected
  /// edges are written once. Isolated nodes are not representable.
  void write_edge_list(std::ostream& out) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_nodes_ == b.num_nodes_ && a.directed_ == b.directed_ &&
           a.forward_offsets_ == b.forward_offsets_ && a.forward_targets_ == b.forward_targets_ &&
           a.reverse_offsets_ == b.reverse_offsets_ && a.reverse_targets_ == b.reverse_targets_;
  }

 private:
  void check(NodeId v) const {
    if (v >= num_nodes_) {
      throw std::out_of_range("node id " + std::to_string(v) + " out of range (n=" +
                              std::to_string(num_nodes_) + ")");
    }
  }

  std::size_t num_nodes_ = 0;
  bool directed_ = false;
  std::vector<std::size_t> forward_offsets_{0};
  std::vector<NodeId> forward_targets_;
  // Empty for undirected graphs; in_neighbors() aliases the forward arrays.
  std::vector<std::size_t> reverse_offsets_;
  std::vector<NodeId> reverse_targets_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
};

struct LoadResult {
  Graph graph;
  IngestStats stats;
};

/// Reads a whitespace-separated edge list. Lines starting with '#' or '%'
/// and blank lines are skipped. Node tokens are arbitrary strings; dense ids
/// are assigned in order of first appearance.
LoadResult load_edge_list(std::istream& in, bool directed);
LoadResult load_edge_list(const std::filesystem::path& path, bool directed);

}  // namespace adabet
