#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ane/graph.hpp"
#include "ane/rng.hpp"

namespace ane {

// p/q-biased second-order walk parameters. p is the return parameter,
// q the in-out parameter; p = q = 1 gives unbiased (first-order) walks.
struct WalkConfig {
  double p = 1.0;
  double q = 1.0;
  std::size_t num_walks_per_node = 10;
  std::size_t walk_length = 80;
  std::size_t window = 10;
  std::uint64_t seed = 0;
  // Second-order alias tables cost O(sum deg(v)^2) memory; turn this off to
  // compute transition weights on the fly for graphs with dense hubs.
  bool precompute_second_order = true;

  void validate() const;
};

// O(1) sampling from a fixed categorical distribution (Vose alias method).
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const { return prob_.size(); }
  std::size_t sample(Rng& rng) const;

  // The exact distribution the table encodes; equals the normalized input
  // weights up to rounding, which the tests check by enumeration.
  std::vector<double> decode_probabilities() const;

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

// Precomputed transition structure for one graph + config.
struct WalkTables {
  // Per node: uniform choice among neighbors (the first step of a walk).
  std::vector<AliasTable> first_step;
  // Per directed edge t->v (indexed by Graph::directed_edge_index): choice
  // among v's neighbors x with unnormalized weight 1/p if x == t, 1 if x is
  // adjacent to t, 1/q otherwise. Empty when computed on the fly.
  std::vector<AliasTable> second_step;
};

// Unnormalized second-order weights over neighbors of v, arriving from t.
std::vector<double> second_order_weights(const Graph& graph, NodeId t, NodeId v,
                                         double p, double q);

WalkTables build_walk_tables(const Graph& graph, const WalkConfig& config);

// num_walks_per_node passes over all nodes in seeded-shuffled order, one
// truncated walk of exactly walk_length nodes per start. Each walk draws
// from a stream derived from (seed, epoch, pass, start node), so the output
// does not depend on thread count. `epoch` salts per-epoch regeneration.
std::vector<std::vector<NodeId>> generate_walks(const Graph& graph,
                                                const WalkTables& tables,
                                                const WalkConfig& config,
                                                std::uint64_t epoch = 0,
                                                unsigned threads = 1);

// (center, context) pairs defining structural neighborhoods.
struct ContextPairs {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<std::uint64_t> center_counts;  // per-node frequency as center
};

ContextPairs extract_context_pairs(const std::vector<std::vector<NodeId>>& walks,
                                   std::size_t window, std::size_t num_nodes);

// Debug/interop dump: one walk per line, space-separated node ids.
void save_walks(const std::vector<std::vector<NodeId>>& walks, const std::string& path);

}  // namespace ane
