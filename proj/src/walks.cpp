#include "ane/walks.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <thread>

#include "ane/errors.hpp"

namespace ane {

void WalkConfig::validate() const {
  if (p <= 0 || q <= 0) throw std::invalid_argument("walk config: p and q must be > 0");
  if (walk_length < 2) throw std::invalid_argument("walk config: walk_length must be >= 2");
  if (window < 1) throw std::invalid_argument("walk config: window must be >= 1");
  if (window >= walk_length) {
    throw std::invalid_argument("walk config: window must be < walk_length");
  }
  if (num_walks_per_node < 1) {
    throw std::invalid_argument("walk config: num_walks_per_node must be >= 1");
  }
}

AliasTable::AliasTable(std::span<const double> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("alias table: empty distribution");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("alias table: negative weight");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("alias table: all weights zero");

  prob_.resize(n);
  alias_.assign(n, 0);
  std::vector<double> scaled(n);
  for (std::size_t i = 0; i < n; ++i) scaled[i] = weights[i] * static_cast<double>(n) / total;

  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    const std::uint32_t l = large.back();
    small.pop_back();
    large.pop_back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    (scaled[l] < 1.0 ? small : large).push_back(l);
  }
  for (std::uint32_t i : large) prob_[i] = 1.0;
  for (std::uint32_t i : small) prob_[i] = 1.0;  // numerical leftovers
}

std::size_t AliasTable::sample(Rng& rng) const {
  const std::size_t k = rng.index(prob_.size());
  return rng.uniform() < prob_[k] ? k : alias_[k];
}

std::vector<double> AliasTable::decode_probabilities() const {
  const std::size_t n = prob_.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] += prob_[k] / static_cast<double>(n);
    out[alias_[k]] += (1.0 - prob_[k]) / static_cast<double>(n);
  }
  return out;
}

std::vector<double> second_order_weights(const Graph& graph, NodeId t, NodeId v,
                                         double p, double q) {
  const auto nbrs = graph.neighbors(v);
  std::vector<double> weights(nbrs.size());
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const NodeId x = nbrs[i];
    if (x == t) {
      weights[i] = 1.0 / p;
    } else if (graph.has_edge(t, x)) {
      weights[i] = 1.0;
    } else {
      weights[i] = 1.0 / q;
    }
  }
  return weights;
}

WalkTables build_walk_tables(const Graph& graph, const WalkConfig& config) {
  config.validate();
  if (graph.num_nodes() == 0) throw std::invalid_argument("build_walk_tables: empty graph");
  if (graph.min_degree() == 0) {
    throw std::invalid_argument("build_walk_tables: graph has an isolated node");
  }

  WalkTables tables;
  tables.first_step.reserve(graph.num_nodes());
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    const std::vector<double> uniform(graph.degree(u), 1.0);
    tables.first_step.emplace_back(uniform);
  }

  if (config.precompute_second_order) {
    tables.second_step.resize(2 * graph.num_edges());
    for (NodeId t = 0; t < graph.num_nodes(); ++t) {
      for (const NodeId v : graph.neighbors(t)) {
        const auto weights = second_order_weights(graph, t, v, config.p, config.q);
        tables.second_step[graph.directed_edge_index(t, v)] = AliasTable(weights);
      }
    }
  }
  return tables;
}

namespace {

// Cumulative-weight sampling for the on-the-fly mode.
std::size_t sample_weighted(std::span<const double> weights, Rng& rng) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const double r = rng.uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (r < acc) return i;
  }
  return weights.size() - 1;
}

std::vector<NodeId> walk_from(const Graph& graph, const WalkTables& tables,
                              const WalkConfig& config, NodeId start, Rng& rng) {
  std::vector<NodeId> walk;
  walk.reserve(config.walk_length);
  walk.push_back(start);

  const auto first = graph.neighbors(start);
  walk.push_back(first[tables.first_step[start].sample(rng)]);

  while (walk.size() < config.walk_length) {
    const NodeId t = walk[walk.size() - 2];
    const NodeId v = walk.back();
    const auto nbrs = graph.neighbors(v);
    std::size_t pick;
    if (config.precompute_second_order) {
      pick = tables.second_step[graph.directed_edge_index(t, v)].sample(rng);
    } else {
      const auto weights = second_order_weights(graph, t, v, config.p, config.q);
      pick = sample_weighted(weights, rng);
    }
    walk.push_back(nbrs[pick]);
  }
  return walk;
}

}  // namespace

std::vector<std::vector<NodeId>> generate_walks(const Graph& graph,
                                                const WalkTables& tables,
                                                const WalkConfig& config,
                                                std::uint64_t epoch, unsigned threads) {
  config.validate();
  const std::size_t m = graph.num_nodes();
  std::vector<std::vector<NodeId>> walks(config.num_walks_per_node * m);

  std::vector<NodeId> order(m);
  std::iota(order.begin(), order.end(), 0);

  std::size_t out = 0;
  for (std::size_t pass = 0; pass < config.num_walks_per_node; ++pass) {
    Rng shuffle_rng = Rng::derived(config.seed ^ splitmix64(epoch), 0x70617373, pass);
    shuffle_rng.shuffle(order);

    const std::size_t base = out;
    auto run_chunk = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const NodeId start = order[i];
        Rng walk_rng = Rng::derived(config.seed ^ splitmix64(epoch),
                                    (pass << 32) | 0x77616c6bULL, start);
        walks[base + i] = walk_from(graph, tables, config, start, walk_rng);
      }
    };

    if (threads <= 1 || m < 2 * threads) {
      run_chunk(0, m);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (m + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = std::min<std::size_t>(t * chunk, m);
        const std::size_t hi = std::min<std::size_t>(lo + chunk, m);
        if (lo < hi) pool.emplace_back(run_chunk, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    out += m;
  }
  return walks;
}

ContextPairs extract_context_pairs(const std::vector<std::vector<NodeId>>& walks,
                                   std::size_t window, std::size_t num_nodes) {
  if (window < 1) throw std::invalid_argument("extract_context_pairs: window must be >= 1");
  ContextPairs out;
  out.center_counts.assign(num_nodes, 0);
  for (const auto& walk : walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const std::size_t lo = i > window ? i - window : 0;
      const std::size_t hi = std::min(walk.size(), i + window + 1);
      for (std::size_t j = lo; j < hi; ++j) {
        if (j == i) continue;
        if (walk[i] == walk[j]) continue;  // self-pairs carry no signal
        out.pairs.emplace_back(walk[i], walk[j]);
        ++out.center_counts[walk[i]];
      }
    }
  }
  return out;
}

void save_walks(const std::vector<std::vector<NodeId>>& walks, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write walk file: " + path);
  for (const auto& walk : walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (i) out << ' ';
      out << walk[i];
    }
    out << '\n';
  }
  if (!out) throw IoError("error writing walk file: " + path);
}

}  // namespace ane
