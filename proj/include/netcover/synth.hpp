#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "netcover/graph.hpp"
#include "netcover/rng.hpp"
#include "netcover/trace.hpp"

namespace netcover {

struct SirParams {
  double p_infect = 0.1;
  double p_recover = 0.1;
  /// Traces shorter than this are dropped from simulated datasets.
  std::size_t min_trace_length = 1;
};

struct NoiseParams {
  /// Each report is independently deleted with this probability.
  double p_loss = 0.0;
};

namespace detail {

inline void check_prob(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(name) + " must be in [0,1]");
}

// Stream salts for seed derivation; fixed so outputs never depend on
// call order or on unrelated configuration values.
inline constexpr std::uint64_t kErStream = 0x45522d6564676573ull;
inline constexpr std::uint64_t kMarkerStream = 0x6d61726b65722d69ull;
inline constexpr std::uint64_t kNoiseStream = 0x6e6f6973652d7472ull;

}  // namespace detail

/// Directed Erdos-Renyi graph: every ordered pair (u,v), u != v, becomes an
/// edge independently with probability edge_prob. Pairs are drawn in a fixed
/// row-major order, so a seed pins the exact edge set.
inline Network generate_er(NodeId node_count, double edge_prob, std::uint64_t seed) {
  if (node_count < 1) throw std::invalid_argument("generate_er: node count must be positive");
  detail::check_prob(edge_prob, "edge_prob");
  Network net(node_count);
  Rng rng(derive_seed(seed, detail::kErStream));
  for (NodeId u = 0; u < node_count; ++u)
    for (NodeId v = 0; v < node_count; ++v) {
      if (u == v) continue;
      if (rng.bernoulli(edge_prob)) net.add_edge(u, v);
    }
  return net;
}

/// One SIR outbreak, reported as the infection order. The seed node is
/// uniform over all nodes. Steps are synchronous; within a step every
/// infected node first draws recovery, then each susceptible node with
/// k still-infected in-neighbors becomes infected with 1-(1-p_infect)^k.
/// Nodes infected in the same step are appended in seeded random order.
inline MarkerTrace simulate_marker(const Network& net, const SirParams& params,
                                   std::uint64_t seed) {
  detail::check_prob(params.p_infect, "p_infect");
  detail::check_prob(params.p_recover, "p_recover");
  const NodeId n = net.node_count();
  Rng rng(seed);

  enum class State : char { kSusceptible, kInfected, kRecovered };
  std::vector<State> state(static_cast<std::size_t>(n), State::kSusceptible);
  std::vector<NodeId> trace;
  const NodeId origin = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
  state[static_cast<std::size_t>(origin)] = State::kInfected;
  trace.push_back(origin);

  std::vector<int> infected_in(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> newly;
  while (true) {
    for (NodeId v = 0; v < n; ++v)
      if (state[static_cast<std::size_t>(v)] == State::kInfected && rng.bernoulli(params.p_recover))
        state[static_cast<std::size_t>(v)] = State::kRecovered;

    std::fill(infected_in.begin(), infected_in.end(), 0);
    bool any_infected = false;
    for (NodeId v = 0; v < n; ++v) {
      if (state[static_cast<std::size_t>(v)] != State::kInfected) continue;
      any_infected = true;
      for (NodeId w : net.out_neighbors(v)) ++infected_in[static_cast<std::size_t>(w)];
    }
    if (!any_infected) break;

    newly.clear();
    bool frontier = false;
    for (NodeId v = 0; v < n; ++v) {
      if (state[static_cast<std::size_t>(v)] != State::kSusceptible) continue;
      int k = infected_in[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      frontier = true;
      double p = 1.0 - std::pow(1.0 - params.p_infect, static_cast<double>(k));
      if (rng.bernoulli(p)) newly.push_back(v);
    }
    rng.shuffle(newly);
    for (NodeId v : newly) {
      state[static_cast<std::size_t>(v)] = State::kInfected;
      trace.push_back(v);
    }
    // With p_recover = 0 the infected set is frozen; once no susceptible
    // node borders it (or p_infect = 0), no step can change anything.
    if (params.p_recover == 0.0 && (!frontier || params.p_infect == 0.0)) break;
  }
  return MarkerTrace(std::move(trace));
}

/// marker_count independent outbreaks; traces shorter than min_trace_length
/// are dropped, so the result may hold fewer than marker_count traces.
/// Marker i draws from a seed split off (seed, i), which makes datasets with
/// the same seed nested across marker counts.
inline MarkerDataset simulate_dataset(const Network& net, const SirParams& params,
                                      int marker_count, std::uint64_t seed) {
  if (marker_count < 0)
    throw std::invalid_argument("simulate_dataset: marker count must be non-negative");
  MarkerDataset ds(net.node_count());
  const std::uint64_t stream = derive_seed(seed, detail::kMarkerStream);
  for (int i = 0; i < marker_count; ++i) {
    MarkerTrace t = simulate_marker(net, params, derive_seed(stream, static_cast<std::uint64_t>(i)));
    if (t.size() >= params.min_trace_length) ds.add_trace(std::move(t));
  }
  return ds;
}

/// Deletes each report independently with p_loss; traces that lose every
/// report are dropped. Report order is preserved.
inline MarkerDataset apply_noise(const MarkerDataset& ds, const NoiseParams& noise,
                                 std::uint64_t seed) {
  detail::check_prob(noise.p_loss, "p_loss");
  MarkerDataset out(ds.node_count());
  const std::uint64_t stream = derive_seed(seed, detail::kNoiseStream);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    Rng rng(derive_seed(stream, static_cast<std::uint64_t>(i)));
    std::vector<NodeId> kept;
    for (NodeId v : ds.trace(i))
      if (!rng.bernoulli(noise.p_loss)) kept.push_back(v);
    if (!kept.empty()) out.add_trace(MarkerTrace(std::move(kept)));
  }
  return out;
}

}  // namespace netcover
