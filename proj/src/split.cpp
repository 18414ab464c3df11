#include "ane/split.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ane/errors.hpp"
#include "ane/rng.hpp"
#include "ane/serialize.hpp"

namespace ane {

namespace {

constexpr const char* kSplitMagic = "ANESPLIT1";
constexpr std::uint32_t kSplitVersion = 1;

std::uint64_t pair_count(std::size_t n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

void put_edges(BinaryWriter& w, const std::vector<Edge>& edges) {
  w.put_u64(edges.size());
  for (const Edge& e : edges) {
    w.put_u32(e.a);
    w.put_u32(e.b);
  }
}

std::vector<Edge> get_edges(BinaryReader& r) {
  const std::uint64_t n = r.get_u64();
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const NodeId a = r.get_u32();
    const NodeId b = r.get_u32();
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

std::vector<Edge> sample_negative_edges(const Graph& graph, std::size_t n,
                                        std::uint64_t seed, std::span<const Edge> exclude) {
  const std::size_t m = graph.num_nodes();
  if (n == 0) return {};
  if (m < 2) throw std::invalid_argument("sample_negative_edges: graph too small");

  std::set<Edge> excluded(exclude.begin(), exclude.end());
  const std::uint64_t candidates = pair_count(m) - graph.num_edges() - excluded.size();
  if (n > candidates) {
    throw std::invalid_argument("sample_negative_edges: requested " + std::to_string(n) +
                                " non-edges but only " + std::to_string(candidates) +
                                " exist");
  }

  Rng rng = Rng::derived(seed, 0x6e656773);  // "negs"
  std::set<Edge> chosen;
  std::vector<Edge> out;
  out.reserve(n);

  const std::uint64_t max_attempts = 1000 * static_cast<std::uint64_t>(n) + 10000;
  std::uint64_t attempts = 0;
  while (out.size() < n && attempts < max_attempts) {
    ++attempts;
    const NodeId u = static_cast<NodeId>(rng.index(m));
    const NodeId v = static_cast<NodeId>(rng.index(m));
    if (u == v) continue;
    const Edge e(u, v);
    if (graph.has_edge(e.a, e.b) || excluded.contains(e) || chosen.contains(e)) continue;
    chosen.insert(e);
    out.push_back(e);
  }

  if (out.size() < n) {
    // Dense graph: enumerate the remaining non-edges and draw without
    // replacement (still uniform, still seeded).
    std::vector<Edge> pool;
    for (NodeId u = 0; u + 1 < m; ++u) {
      for (NodeId v = u + 1; v < m; ++v) {
        const Edge e(u, v);
        if (!graph.has_edge(u, v) && !excluded.contains(e) && !chosen.contains(e)) {
          pool.push_back(e);
        }
      }
    }
    rng.shuffle(pool);
    for (std::size_t i = 0; out.size() < n; ++i) out.push_back(pool[i]);
  }
  return out;
}

LinkSplit split_links(const Graph& graph, double test_frac, double val_frac,
                      std::uint64_t seed) {
  if (test_frac < 0 || val_frac < 0 || test_frac + val_frac >= 1.0) {
    throw std::invalid_argument("split_links: need 0 <= test_frac + val_frac < 1");
  }

  const std::size_t num_edges = graph.num_edges();
  const std::size_t n_test = static_cast<std::size_t>(std::llround(test_frac * num_edges));
  const std::size_t n_val = static_cast<std::size_t>(std::llround(val_frac * num_edges));

  std::vector<Edge> order = graph.edges();
  Rng rng = Rng::derived(seed, 0x73706c69);  // "spli"
  rng.shuffle(order);

  std::vector<std::size_t> deg(graph.num_nodes());
  for (NodeId u = 0; u < graph.num_nodes(); ++u) deg[u] = graph.degree(u);

  LinkSplit split;
  split.seed = seed;
  std::vector<Edge> train;
  train.reserve(num_edges - n_test - n_val);

  for (const Edge& e : order) {
    const bool removable = deg[e.a] > 1 && deg[e.b] > 1;
    if (removable && split.test_pos.size() < n_test) {
      split.test_pos.push_back(e);
    } else if (removable && split.val_pos.size() < n_val) {
      split.val_pos.push_back(e);
    } else {
      train.push_back(e);
      continue;
    }
    --deg[e.a];
    --deg[e.b];
  }

  if (split.test_pos.size() < n_test || split.val_pos.size() < n_val) {
    const std::size_t achieved = split.test_pos.size() + split.val_pos.size();
    std::ostringstream msg;
    msg << "split_links: degree floor allows holding out only " << achieved << " of "
        << (n_test + n_val) << " requested edges (achievable fraction "
        << static_cast<double>(achieved) / static_cast<double>(num_edges) << ")";
    throw std::invalid_argument(msg.str());
  }

  split.train_graph = Graph(graph.num_nodes(), train);
  split.test_neg = sample_negative_edges(graph, split.test_pos.size(),
                                         splitmix64(seed ^ 0x746e6567), {});
  split.val_neg = sample_negative_edges(graph, split.val_pos.size(),
                                        splitmix64(seed ^ 0x766e6567), split.test_neg);
  return split;
}

void save_split(const LinkSplit& split, const std::string& path) {
  BinaryWriter w(kSplitMagic);
  w.put_u32(kSplitVersion);
  w.put_u64(split.seed);
  w.put_u64(split.train_graph.num_nodes());
  put_edges(w, split.train_graph.edges());
  put_edges(w, split.test_pos);
  put_edges(w, split.val_pos);
  put_edges(w, split.test_neg);
  put_edges(w, split.val_neg);
  w.save(path);
}

LinkSplit load_split(const std::string& path) {
  BinaryReader r(path, kSplitMagic);
  const std::uint32_t version = r.get_u32();
  if (version != kSplitVersion) {
    throw ParseError(path + ": unsupported split version " + std::to_string(version));
  }
  LinkSplit split;
  split.seed = r.get_u64();
  const std::uint64_t num_nodes = r.get_u64();
  const std::vector<Edge> train = get_edges(r);
  split.test_pos = get_edges(r);
  split.val_pos = get_edges(r);
  split.test_neg = get_edges(r);
  split.val_neg = get_edges(r);
  split.train_graph = Graph(num_nodes, train);
  return split;
}

}  // namespace ane
