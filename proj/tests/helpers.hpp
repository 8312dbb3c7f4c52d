#pragma once

#include <vector>

#include "netcover/graph.hpp"
#include "netcover/rng.hpp"
#include "netcover/trace.hpp"

namespace testutil {

inline netcover::MarkerTrace trace(std::vector<netcover::NodeId> nodes) {
  return netcover::MarkerTrace(std::move(nodes));
}

inline netcover::MarkerDataset dataset(netcover::NodeId n,
                                       std::vector<std::vector<netcover::NodeId>> traces) {
  netcover::MarkerDataset ds(n);
  for (auto& t : traces) ds.add_trace(netcover::MarkerTrace(std::move(t)));
  return ds;
}

/// Random graph helper independent of generate_er (different draw order), so
/// consistency properties are not tied to the synth module.
inline netcover::Network random_network(netcover::NodeId n, double edge_prob,
                                        netcover::Rng& rng) {
  netcover::Network net(n);
  for (netcover::NodeId u = 0; u < n; ++u)
    for (netcover::NodeId v = 0; v < n; ++v)
      if (u != v && rng.bernoulli(edge_prob)) net.add_edge(u, v);
  return net;
}

/// Random ordered sequence of distinct nodes; length in [1, max_len].
inline netcover::MarkerTrace random_trace(netcover::NodeId n, std::size_t max_len,
                                          netcover::Rng& rng) {
  std::vector<netcover::NodeId> pool;
  pool.reserve(static_cast<std::size_t>(n));
  for (netcover::NodeId v = 0; v < n; ++v) pool.push_back(v);
  rng.shuffle(pool);
  std::size_t len = 1 + static_cast<std::size_t>(
                            rng.below(std::min(max_len, pool.size())));
  pool.resize(len);
  return netcover::MarkerTrace(std::move(pool));
}

}  // namespace testutil
