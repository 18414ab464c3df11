#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ane {

using NodeId = std::uint32_t;

// Undirected edge, stored with first() <= second().
struct Edge {
  NodeId a;
  NodeId b;

  Edge() = default;
  Edge(NodeId u, NodeId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected unweighted graph: per-node sorted neighbor lists.
// No self-loops, no parallel edges, symmetric by construction.
class Graph {
 public:
  Graph() = default;

  // Edges may appear in any order and orientation; duplicates and
  // self-loops are a caller bug here (the loader drops them first).
  Graph(std::size_t num_nodes, const std::vector<Edge>& edges);

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  bool has_edge(NodeId u, NodeId v) const;

  // Normalized edges, sorted ascending.
  const std::vector<Edge>& edges() const { return edges_; }

  // Position of directed edge u->v in the flattened adjacency, usable as a
  // dense key over the 2*num_edges directed edges. Throws if absent.
  std::size_t directed_edge_index(NodeId u, NodeId v) const;

  std::size_t min_degree() const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.offsets_ == y.offsets_ && x.adjacency_ == y.adjacency_;
  }

 private:
  std::vector<std::size_t> offsets_;   // size num_nodes + 1
  std::vector<NodeId> adjacency_;      // sorted within each node
  std::vector<Edge> edges_;            // sorted, a < b
};

struct EdgeListData {
  Graph graph;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;
};

// Text edge list: one "u v" pair per line, `#` starts a comment. Node count
// is 1 + max id unless a `# nodes=N` header line raises it.
EdgeListData load_edge_list(const std::string& path);

void save_edge_list(const Graph& graph, const std::string& path);

}  // namespace ane
