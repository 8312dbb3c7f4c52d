#pragma once

#include <stdexcept>
#include <vector>

#include "netcover/graph.hpp"
#include "netcover/trace.hpp"

namespace netcover {

namespace detail {
inline void check_trace_nodes(const Network& net, const MarkerTrace& trace) {
  for (NodeId v : trace)
    if (v < 0 || v >= net.node_count())
      throw std::invalid_argument("trace node id out of range for network");
}
}  // namespace detail

/// Local consistency: every report after the first has an in-edge from some
/// earlier reporter of the same trace.
inline bool is_locally_consistent(const Network& net, const MarkerTrace& trace) {
  detail::check_trace_nodes(net, trace);
  for (std::size_t j = 1; j < trace.size(); ++j) {
    bool explained = false;
    for (std::size_t k = 0; k < j && !explained; ++k)
      explained = net.has_edge(trace[k], trace[j]);
    if (!explained) return false;
  }
  return true;
}

/// Global consistency: every report is reachable from the originator along a
/// directed path through nodes that have already reported. Checked by a
/// prefix-restricted breadth-first search per report, independently of the
/// local predicate.
inline bool is_globally_consistent(const Network& net, const MarkerTrace& trace) {
  detail::check_trace_nodes(net, trace);
  const std::size_t n = static_cast<std::size_t>(net.node_count());
  std::vector<char> allowed(n, 0);
  allowed[static_cast<std::size_t>(trace[0])] = 1;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> queue;
  for (std::size_t j = 1; j < trace.size(); ++j) {
    allowed[static_cast<std::size_t>(trace[j])] = 1;
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    queue.push_back(trace[0]);
    seen[static_cast<std::size_t>(trace[0])] = 1;
    bool reached = trace[j] == trace[0];
    for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
      for (NodeId w : net.out_neighbors(queue[head])) {
        if (!allowed[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)])
          continue;
        if (w == trace[j]) {
          reached = true;
          break;
        }
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
    if (!reached) return false;
  }
  return true;
}

}  // namespace netcover
