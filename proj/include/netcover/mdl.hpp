#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netcover/graph.hpp"
#include "netcover/io.hpp"
#include "netcover/setcover.hpp"
#include "netcover/trace.hpp"

namespace netcover {

namespace detail {
// Left-to-right sum; totals must be bit-identical however they are produced.
inline double sum_ordered(const std::vector<double>& values) {
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}
}  // namespace detail

/// Cost in nats of one trace under the network's code. The j-th report (1-based)
/// costs ln(j) + ln(d_p), where the parent p is the prior reporter with an edge
/// to the current node of minimal out-degree, or the supernode (out-degree N,
/// reaching every node) when no prior reporter explains it. A real parent has
/// out-degree at most N-1, so it always beats the supernode.
inline double trace_description_length(const Network& net, const MarkerTrace& trace) {
  const NodeId n = net.node_count();
  double total = 0.0;
  for (std::size_t j = 0; j < trace.size(); ++j) {
    NodeId target = trace[j];
    if (target < 0 || target >= n)
      throw std::invalid_argument("trace node id out of range for network");
    NodeId best_degree = n;
    for (std::size_t k = 0; k < j; ++k)
      if (net.has_edge(trace[k], target)) best_degree = std::min(best_degree, net.out_degree(trace[k]));
    total += std::log(static_cast<double>(j + 1)) + std::log(static_cast<double>(best_degree));
  }
  return total;
}

struct DlBreakdown {
  double total_nats = 0.0;
  std::vector<double> per_trace;
};

/// Description length of the whole dataset under net's code. total_nats is
/// exactly the ordered sum of per_trace.
inline DlBreakdown description_length(const Network& net, const MarkerDataset& ds) {
  if (net.node_count() != ds.node_count())
    throw std::invalid_argument("description_length: node count mismatch");
  DlBreakdown out;
  out.per_trace.reserve(ds.size());
  for (const MarkerTrace& t : ds) out.per_trace.push_back(trace_description_length(net, t));
  out.total_nats = detail::sum_ordered(out.per_trace);
  return out;
}

struct DlCurvePoint {
  int edge_count = 0;
  double dl_nats = 0.0;
  bool operator==(const DlCurvePoint&) const = default;
};

struct MdlResult {
  Network network;
  std::vector<DlCurvePoint> curve;   // curve[k] is the DL after k ranked edges
  std::vector<PlanEntry> ranked;     // full ranked cover plan
  std::size_t chosen_edges = 0;      // argmin of the curve, fewest edges on ties
};

/// Walks the ranked cover edges, tracking the dataset DL after each prefix,
/// and keeps the prefix of minimal DL. Adding an edge changes the cost only
/// of traces containing its source, so just those are recoded per step;
/// totals are re-summed over all traces in order, making every curve point
/// bit-identical to a full description_length pass over the same prefix.
inline MdlResult reconstruct_mdl_detailed(const MarkerDataset& ds) {
  CoverResult cover = reconstruct_cover(ds);
  std::vector<PlanEntry> ranked = rank_edges(cover.plan);

  const NodeId n = ds.node_count();
  std::vector<std::vector<int>> traces_with(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (NodeId v : ds.trace(i)) traces_with[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));

  Network net(n);
  std::vector<double> per_trace;
  per_trace.reserve(ds.size());
  for (const MarkerTrace& t : ds) per_trace.push_back(trace_description_length(net, t));

  std::vector<DlCurvePoint> curve;
  curve.reserve(ranked.size() + 1);
  curve.push_back({0, detail::sum_ordered(per_trace)});

  for (std::size_t k = 0; k < ranked.size(); ++k) {
    const Edge e = ranked[k].edge;
    net.add_edge(e.src, e.dst);
    for (int i : traces_with[static_cast<std::size_t>(e.src)])
      per_trace[static_cast<std::size_t>(i)] =
          trace_description_length(net, ds.trace(static_cast<std::size_t>(i)));
    curve.push_back({static_cast<int>(k + 1), detail::sum_ordered(per_trace)});
  }

  std::size_t chosen = 0;
  for (std::size_t k = 1; k < curve.size(); ++k)
    if (curve[k].dl_nats < curve[chosen].dl_nats) chosen = k;

  Network best(n);
  for (std::size_t k = 0; k < chosen; ++k) best.add_edge(ranked[k].edge.src, ranked[k].edge.dst);
  return {std::move(best), std::move(curve), std::move(ranked), chosen};
}

/// Reconstruction with early stopping at the description-length minimum.
inline std::pair<Network, std::vector<DlCurvePoint>> reconstruct_mdl(const MarkerDataset& ds) {
  MdlResult r = reconstruct_mdl_detailed(ds);
  return {std::move(r.network), std::move(r.curve)};
}

// --- DL curve CSV ---------------------------------------------------------
// Header "edges,dl_nats", one row per curve point in edge order. Values are
// printed with 17 significant digits so doubles survive the round trip.

inline std::string dl_curve_to_string(const std::vector<DlCurvePoint>& curve) {
  std::string out = "edges,dl_nats\n";
  for (const DlCurvePoint& p : curve)
    out += std::to_string(p.edge_count) + "," + fmt_double(p.dl_nats, 17) + "\n";
  return out;
}

inline std::vector<DlCurvePoint> dl_curve_from_string(std::string_view text,
                                                      std::string_view source = "<string>") {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<DlCurvePoint> curve;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      if (line != "edges,dl_nats") detail::fail(source, line_no, "expected header 'edges,dl_nats'");
      have_header = true;
      continue;
    }
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) detail::fail(source, line_no, "expected 'edges,dl_nats' row");
    std::int64_t edges = detail::parse_int(std::string_view(line).substr(0, comma), source, line_no);
    double dl = detail::parse_double(std::string_view(line).substr(comma + 1), source, line_no);
    if (edges < 0 || edges > std::numeric_limits<int>::max())
      detail::fail(source, line_no, "edge count out of range");
    curve.push_back({static_cast<int>(edges), dl});
  }
  if (!have_header) detail::fail(source, line_no, "expected header 'edges,dl_nats'");
  return curve;
}

inline void save_dl_curve(const std::vector<DlCurvePoint>& curve,
                          const std::filesystem::path& path) {
  write_file_atomic(path, dl_curve_to_string(curve));
}

inline std::vector<DlCurvePoint> load_dl_curve(const std::filesystem::path& path) {
  return dl_curve_from_string(read_file_text(path), path.string());
}

}  // namespace netcover
