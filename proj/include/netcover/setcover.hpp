#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "netcover/graph.hpp"
#include "netcover/io.hpp"
#include "netcover/trace.hpp"

namespace netcover {

/// Covering instance for one destination node v: the universe is the set of
/// marker indices whose trace reports v, and family[u] holds the markers in
/// which u reports earlier than v. Sources with empty subsets are omitted;
/// v itself can never be a key.
struct NodeCoverInstance {
  NodeId target = -1;
  std::vector<int> universe;                  // ascending marker indices
  std::map<NodeId, std::vector<int>> family;  // source -> ascending marker indices
};

inline NodeCoverInstance build_instance(NodeId v, const MarkerDataset& ds) {
  if (v < 0 || v >= ds.node_count())
    throw std::invalid_argument("build_instance: node id out of range");
  NodeCoverInstance inst;
  inst.target = v;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const MarkerTrace& t = ds.trace(i);
    std::size_t pos = t.size();
    for (std::size_t k = 0; k < t.size(); ++k)
      if (t[k] == v) {
        pos = k;
        break;
      }
    if (pos == t.size()) continue;
    inst.universe.push_back(static_cast<int>(i));
    for (std::size_t k = 0; k < pos; ++k)
      inst.family[t[k]].push_back(static_cast<int>(i));
  }
  return inst;
}

struct CoverSelection {
  NodeId source = -1;
  int newly_covered = 0;
  bool operator==(const CoverSelection&) const = default;
};

/// Greedy covering: repeatedly take the subset covering the most still
/// uncovered elements, lowest source id on ties. Stops when the universe is
/// exhausted or no subset covers anything new; leftover elements (markers in
/// which the target reports first) stay uncovered.
inline std::vector<CoverSelection> greedy_cover(const NodeCoverInstance& inst) {
  std::unordered_set<int> uncovered(inst.universe.begin(), inst.universe.end());
  std::vector<CoverSelection> picks;
  while (!uncovered.empty()) {
    NodeId best = -1;
    int best_count = 0;
    for (const auto& [source, subset] : inst.family) {
      int count = 0;
      for (int m : subset) count += static_cast<int>(uncovered.count(m));
      if (count > best_count) {
        best = source;
        best_count = count;
      }
    }
    if (best_count == 0) break;
    for (int m : inst.family.at(best)) uncovered.erase(m);
    picks.push_back({best, best_count});
  }
  return picks;
}

/// One selected edge with the number of universe elements it covered when
/// picked. Plans hold entries in global rank order (see rank_edges), which
/// is also the plan file order, so files round-trip exactly.
struct PlanEntry {
  Edge edge;
  int newly_covered = 0;
  bool operator==(const PlanEntry&) const = default;
};

struct CoverPlan {
  NodeId node_count = 0;
  std::vector<PlanEntry> entries;
  bool operator==(const CoverPlan&) const = default;
};

struct CoverResult {
  Network network;
  CoverPlan plan;
};

/// Global edge ranking: newly_covered descending, then (src, dst) ascending.
inline std::vector<PlanEntry> rank_edges(const CoverPlan& plan);

/// Reconstruction by per-node greedy covering: the returned network is the
/// union over destinations v of the sources picked for v's instance.
inline CoverResult reconstruct_cover(const MarkerDataset& ds) {
  CoverResult result{Network(ds.node_count()), CoverPlan{ds.node_count(), {}}};
  for (NodeId v = 0; v < ds.node_count(); ++v) {
    NodeCoverInstance inst = build_instance(v, ds);
    for (const CoverSelection& sel : greedy_cover(inst)) {
      result.network.add_edge(sel.source, v);
      result.plan.entries.push_back({{sel.source, v}, sel.newly_covered});
    }
  }
  result.plan.entries = rank_edges(result.plan);
  return result;
}

/// Baseline: an edge for every adjacent report pair of every trace.
inline Network naive1(const MarkerDataset& ds) {
  Network net(ds.node_count());
  for (const MarkerTrace& t : ds)
    for (std::size_t j = 1; j < t.size(); ++j) net.add_edge(t[j - 1], t[j]);
  return net;
}

/// Baseline: an edge for the first report pair of every trace.
inline Network naive2(const MarkerDataset& ds) {
  Network net(ds.node_count());
  for (const MarkerTrace& t : ds)
    if (t.size() >= 2) net.add_edge(t[0], t[1]);
  return net;
}

inline std::vector<PlanEntry> rank_edges(const CoverPlan& plan) {
  std::vector<PlanEntry> ranked = plan.entries;
  std::sort(ranked.begin(), ranked.end(), [](const PlanEntry& a, const PlanEntry& b) {
    if (a.newly_covered != b.newly_covered) return a.newly_covered > b.newly_covered;
    return a.edge < b.edge;
  });
  return ranked;
}

// --- cover plan text format ----------------------------------------------
// Header "N <node_count>", then one "src dst newly_covered" line per
// selection in global rank order.

inline std::string cover_plan_to_string(const CoverPlan& plan) {
  std::string out = "N " + std::to_string(plan.node_count) + "\n";
  for (const PlanEntry& e : rank_edges(plan))
    out += std::to_string(e.edge.src) + " " + std::to_string(e.edge.dst) + " " +
           std::to_string(e.newly_covered) + "\n";
  return out;
}

inline CoverPlan cover_plan_from_string(std::string_view text,
                                        std::string_view source = "<string>") {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  CoverPlan plan;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (!detail::significant(tokens)) continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "N")
        detail::fail(source, line_no, "expected header 'N <node_count>'");
      std::int64_t v = detail::parse_int(tokens[1], source, line_no);
      if (v < 1 || v > std::numeric_limits<NodeId>::max())
        detail::fail(source, line_no, "node count out of range");
      plan.node_count = static_cast<NodeId>(v);
      have_header = true;
      continue;
    }
    if (tokens.size() != 3)
      detail::fail(source, line_no, "expected 'src dst newly_covered'");
    std::int64_t s = detail::parse_int(tokens[0], source, line_no);
    std::int64_t d = detail::parse_int(tokens[1], source, line_no);
    std::int64_t c = detail::parse_int(tokens[2], source, line_no);
    if (s < 0 || s >= plan.node_count || d < 0 || d >= plan.node_count)
      detail::fail(source, line_no, "node id out of range");
    if (s == d) detail::fail(source, line_no, "self-loop");
    if (c < 1) detail::fail(source, line_no, "newly_covered must be positive");
    plan.entries.push_back({{static_cast<NodeId>(s), static_cast<NodeId>(d)},
                            static_cast<int>(c)});
  }
  if (!have_header) detail::fail(source, line_no, "missing header 'N <node_count>'");
  return plan;
}

inline void save_cover_plan(const CoverPlan& plan, const std::filesystem::path& path) {
  write_file_atomic(path, cover_plan_to_string(plan));
}

inline CoverPlan load_cover_plan(const std::filesystem::path& path) {
  return cover_plan_from_string(read_file_text(path), path.string());
}

}  // namespace netcover
