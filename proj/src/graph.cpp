#include "ane/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ane/errors.hpp"

namespace ane {

Graph::Graph(std::size_t num_nodes, const std::vector<Edge>& edges) {
  edges_ = edges;
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    if (e.a == e.b) throw std::invalid_argument("graph: self-loop");
    if (e.b >= num_nodes) throw std::invalid_argument("graph: node id out of range");
  }
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("graph: duplicate edge");
  }

  std::vector<std::size_t> deg(num_nodes, 0);
  for (const Edge& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  offsets_.assign(num_nodes + 1, 0);
  for (std::size_t u = 0; u < num_nodes; ++u) offsets_[u + 1] = offsets_[u] + deg[u];
  adjacency_.resize(offsets_.back());

  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.a]++] = e.b;
    adjacency_[cursor[e.b]++] = e.a;
  }
  for (std::size_t u = 0; u < num_nodes; ++u) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]));
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::directed_edge_index(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) {
    throw std::invalid_argument("directed_edge_index: edge not present");
  }
  return offsets_[u] + static_cast<std::size_t>(it - nbrs.begin());
}

std::size_t Graph::min_degree() const {
  std::size_t m = adjacency_.size();
  for (std::size_t u = 0; u < num_nodes(); ++u) m = std::min(m, degree(u));
  return num_nodes() == 0 ? 0 : m;
}

EdgeListData load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list: " + path);

  std::vector<Edge> edges;
  std::size_t dropped_self = 0;
  std::size_t header_nodes = 0;
  long long max_id = -1;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      // A `# nodes=N` header may declare more nodes than the edges mention.
      const std::string comment = line.substr(hash + 1);
      const auto key = comment.find("nodes=");
      if (key != std::string::npos) {
        header_nodes = std::strtoull(comment.c_str() + key + 6, nullptr, 10);
      }
      line = line.substr(0, hash);
    }
    std::istringstream ss(line);
    long long u, v;
    if (!(ss >> u)) continue;  // blank or comment-only line
    if (!(ss >> v)) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected \"u v\"");
    }
    std::string rest;
    if (ss >> rest) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": trailing tokens after edge");
    }
    if (u < 0 || v < 0) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": negative node id");
    }
    if (u == v) {
      ++dropped_self;
      continue;
    }
    max_id = std::max(max_id, std::max(u, v));
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }

  if (edges.empty()) throw ParseError(path + ": no edges found");

  std::size_t num_nodes = static_cast<std::size_t>(max_id) + 1;
  if (header_nodes > 0) {
    if (header_nodes < num_nodes) {
      throw ParseError(path + ": header nodes=" + std::to_string(header_nodes) +
                       " is smaller than 1 + max node id");
    }
    num_nodes = header_nodes;
  }

  std::sort(edges.begin(), edges.end());
  const std::size_t before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  EdgeListData out;
  out.dropped_self_loops = dropped_self;
  out.dropped_duplicates = before - edges.size();
  out.graph = Graph(num_nodes, edges);
  return out;
}

void save_edge_list(const Graph& graph, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write edge list: " + path);
  out << "# nodes=" << graph.num_nodes() << "\n";
  for (const Edge& e : graph.edges()) {
    out << e.a << " " << e.b << "\n";
  }
  if (!out) throw IoError("error writing edge list: " + path);
}

}  // namespace ane
