#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "netcover/graph.hpp"

namespace netcover {

/// Ordered sequence of distinct reporting nodes; the first entry is the
/// originator. Never empty.
class MarkerTrace {
 public:
  explicit MarkerTrace(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw std::invalid_argument("MarkerTrace: empty trace");
    std::unordered_set<NodeId> seen;
    for (NodeId v : nodes_) {
      if (v < 0) throw std::invalid_argument("MarkerTrace: negative node id");
      if (!seen.insert(v).second)
        throw std::invalid_argument("MarkerTrace: node " + std::to_string(v) +
                                    " reported twice");
    }
  }

  std::size_t size() const { return nodes_.size(); }
  NodeId operator[](std::size_t i) const { return nodes_[i]; }
  NodeId originator() const { return nodes_.front(); }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }
  bool operator==(const MarkerTrace&) const = default;

 private:
  std::vector<NodeId> nodes_;
};

/// A bag of traces over a fixed node universe 0..N-1. Node ids in every
/// trace are validated against node_count; nodes may appear in no trace.
class MarkerDataset {
 public:
  explicit MarkerDataset(NodeId node_count) : n_(check_count(node_count)) {}

  MarkerDataset(NodeId node_count, std::vector<MarkerTrace> traces)
      : n_(check_count(node_count)), traces_(std::move(traces)) {
    for (const MarkerTrace& t : traces_) check_trace(t);
  }

  NodeId node_count() const { return n_; }
  std::size_t size() const { return traces_.size(); }
  bool empty() const { return traces_.empty(); }
  const MarkerTrace& trace(std::size_t i) const { return traces_.at(i); }
  const std::vector<MarkerTrace>& traces() const { return traces_; }
  auto begin() const { return traces_.begin(); }
  auto end() const { return traces_.end(); }

  void add_trace(MarkerTrace t) {
    check_trace(t);
    traces_.push_back(std::move(t));
  }

  bool operator==(const MarkerDataset&) const = default;

 private:
  static NodeId check_count(NodeId n) {
    if (n < 1) throw std::invalid_argument("MarkerDataset: node count must be positive");
    return n;
  }

  void check_trace(const MarkerTrace& t) const {
    for (NodeId v : t)
      if (v >= n_)
        throw std::invalid_argument("MarkerDataset: node id " + std::to_string(v) +
                                    " out of range for node count " + std::to_string(n_));
  }

  NodeId n_;
  std::vector<MarkerTrace> traces_;
};

}  // namespace netcover
