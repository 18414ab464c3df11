#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ane/graph.hpp"

namespace ane {

// Link-prediction holdout: train graph plus positive/negative edge sets.
struct LinkSplit {
  Graph train_graph;
  std::vector<Edge> test_pos;
  std::vector<Edge> val_pos;
  std::vector<Edge> test_neg;
  std::vector<Edge> val_neg;
  std::uint64_t seed = 0;

  friend bool operator==(const LinkSplit&, const LinkSplit&) = default;
};

// Uniform random edge holdout. An edge is skipped (left in the train graph)
// if removing it would leave either endpoint isolated, so every node that
// was walkable stays walkable. Negative sets are sampled from non-edges of
// the ORIGINAL graph and sized to match their positive sets.
LinkSplit split_links(const Graph& graph, double test_frac, double val_frac,
                      std::uint64_t seed);

// n distinct non-edges of `graph`, none in `exclude`. Rejection sampling
// with an enumeration fallback for near-complete graphs.
std::vector<Edge> sample_negative_edges(const Graph& graph, std::size_t n,
                                        std::uint64_t seed,
                                        std::span<const Edge> exclude = {});

void save_split(const LinkSplit& split, const std::string& path);
LinkSplit load_split(const std::string& path);

}  // namespace ane
