#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace netcover {

using NodeId = std::int32_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Directed graph over nodes 0..N-1. No self-loops, no parallel edges.
/// Cheap to copy at the sizes used here; safe for concurrent reads once built.
class Network {
 public:
  explicit Network(NodeId node_count)
      : n_(node_count), out_(check_count(node_count)), in_degree_(node_count, 0) {}

  static Network from_edges(NodeId node_count, const std::vector<Edge>& edges) {
    Network net(node_count);
    for (const Edge& e : edges) {
      if (!net.add_edge(e.src, e.dst))
        throw std::invalid_argument("Network::from_edges: duplicate edge");
    }
    return net;
  }

  NodeId node_count() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }

  bool has_edge(NodeId src, NodeId dst) const {
    check_node(src);
    check_node(dst);
    return keys_.count(key(src, dst)) != 0;
  }

  /// Returns false if the edge is already present.
  bool add_edge(NodeId src, NodeId dst) {
    check_node(src);
    check_node(dst);
    if (src == dst) throw std::invalid_argument("Network: self-loop " + std::to_string(src));
    if (!keys_.insert(key(src, dst)).second) return false;
    auto& adj = out_[static_cast<std::size_t>(src)];
    adj.insert(std::lower_bound(adj.begin(), adj.end(), dst), dst);
    ++in_degree_[static_cast<std::size_t>(dst)];
    ++edge_count_;
    return true;
  }

  /// Out-neighbors in ascending id order.
  const std::vector<NodeId>& out_neighbors(NodeId v) const {
    check_node(v);
    return out_[static_cast<std::size_t>(v)];
  }

  NodeId out_degree(NodeId v) const {
    return static_cast<NodeId>(out_neighbors(v).size());
  }

  NodeId in_degree(NodeId v) const {
    check_node(v);
    return in_degree_[static_cast<std::size_t>(v)];
  }

  /// All edges sorted by (src, dst).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (NodeId s = 0; s < n_; ++s)
      for (NodeId d : out_[static_cast<std::size_t>(s)]) out.push_back({s, d});
    return out;
  }

  bool operator==(const Network& other) const {
    return n_ == other.n_ && out_ == other.out_;
  }

 private:
  static NodeId check_count(NodeId n) {
    if (n < 1) throw std::invalid_argument("Network: node count must be positive");
    return n;
  }

  void check_node(NodeId v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("Network: node id " + std::to_string(v) + " out of range");
  }

  static std::uint64_t key(NodeId src, NodeId dst) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(src)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(dst));
  }

  NodeId n_;
  std::int64_t edge_count_ = 0;
  std::vector<std::vector<NodeId>> out_;
  std::vector<NodeId> in_degree_;
  std::unordered_set<std::uint64_t> keys_;
};

}  // namespace netcover
