#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "netcover/graph.hpp"
#include "netcover/io.hpp"
#include "netcover/trace.hpp"

namespace netcover {

/// Data-only lower/upper bounds on reconstruction quality. Heuristics are
/// absent when the dataset cannot support them (no trace of length >= 2).
struct BoundsReport {
  std::int64_t tp_lower = 0;
  std::optional<double> tpr_lower;
  std::optional<double> h1;
  std::optional<double> h2;
  std::optional<double> h_min;
  std::optional<double> fp_upper;
  std::optional<double> fpr_upper;
  std::optional<double> jd_upper;
};

struct EvalReport {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  double tpr = 0.0;
  double fpr = 0.0;
  double jd = 0.0;
  std::optional<BoundsReport> bounds;
};

namespace detail {
inline std::uint64_t pair_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
}
}  // namespace detail

/// Compares a reconstruction against the true network: true/false positive
/// counts, rates, and the Jaccard distance between the edge sets.
inline EvalReport evaluate(const Network& truth, const Network& recon) {
  if (truth.node_count() != recon.node_count())
    throw std::invalid_argument("evaluate: node count mismatch");
  EvalReport report;
  for (const Edge& e : recon.edges()) {
    if (truth.has_edge(e.src, e.dst))
      ++report.tp;
    else
      ++report.fp;
  }
  const std::int64_t n = truth.node_count();
  const std::int64_t truth_edges = truth.edge_count();
  const std::int64_t recon_edges = recon.edge_count();
  const std::int64_t non_edges = n * (n - 1) - truth_edges;
  report.tpr = truth_edges > 0 ? static_cast<double>(report.tp) / static_cast<double>(truth_edges) : 0.0;
  report.fpr = non_edges > 0 ? static_cast<double>(report.fp) / static_cast<double>(non_edges) : 0.0;
  const std::int64_t union_size = truth_edges + recon_edges - report.tp;
  report.jd = union_size > 0
                  ? static_cast<double>(union_size - report.tp) / static_cast<double>(union_size)
                  : 0.0;
  return report;
}

/// Number of distinct first report pairs; each is a guaranteed true positive
/// of the covering reconstruction on noise-free data.
inline std::int64_t tp_lower(const MarkerDataset& ds) {
  std::unordered_set<std::uint64_t> pairs;
  for (const MarkerTrace& t : ds)
    if (t.size() >= 2) pairs.insert(detail::pair_key(t[0], t[1]));
  return static_cast<std::int64_t>(pairs.size());
}

/// Harmonic-style approximation factor 1 + ln(max |B|) over all precedence
/// subsets B (markers in which a given source reports before a given target).
inline std::optional<double> heuristic_h1(const MarkerDataset& ds) {
  std::unordered_map<std::uint64_t, std::int64_t> counts;
  for (const MarkerTrace& t : ds)
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b) ++counts[detail::pair_key(t[a], t[b])];
  std::int64_t max_count = 0;
  for (const auto& [key, c] : counts) max_count = std::max(max_count, c);
  if (max_count == 0) return std::nullopt;
  return 1.0 + std::log(static_cast<double>(max_count));
}

/// Approximation factor from maximal subset membership: the longest trace
/// length minus one. Absent when no trace has length >= 2.
inline std::optional<double> heuristic_h2(const MarkerDataset& ds) {
  std::size_t max_len = 0;
  for (const MarkerTrace& t : ds) max_len = std::max(max_len, t.size());
  if (max_len < 2) return std::nullopt;
  return static_cast<double>(max_len - 1);
}

/// Bounds computable from the traces plus the true edge count alone:
///   fp_upper  = |E_T| * min(h1, h2) - tp_lower
///   fpr_upper = fp_upper / ((N^2 - N) - |E_T|)
///   jd_upper  = 1 - tp_lower / (|E_T| + fp_upper)
inline BoundsReport bounds(const MarkerDataset& ds, std::int64_t truth_edge_count) {
  if (truth_edge_count < 1)
    throw std::invalid_argument("bounds: truth edge count must be positive");
  BoundsReport b;
  b.tp_lower = tp_lower(ds);
  b.tpr_lower = static_cast<double>(b.tp_lower) / static_cast<double>(truth_edge_count);
  b.h1 = heuristic_h1(ds);
  b.h2 = heuristic_h2(ds);
  if (b.h1 && b.h2) {
    b.h_min = std::min(*b.h1, *b.h2);
    double fp_up = static_cast<double>(truth_edge_count) * *b.h_min -
                   static_cast<double>(b.tp_lower);
    b.fp_upper = fp_up;
    const std::int64_t n = ds.node_count();
    const std::int64_t non_edges = n * (n - 1) - truth_edge_count;
    if (non_edges > 0) b.fpr_upper = fp_up / static_cast<double>(non_edges);
    double denom = static_cast<double>(truth_edge_count) + fp_up;
    if (denom > 0) b.jd_upper = 1.0 - static_cast<double>(b.tp_lower) / denom;
  }
  return b;
}

/// evaluate plus the trace-derived bounds, when the truth has edges.
inline EvalReport evaluate(const Network& truth, const Network& recon,
                           const MarkerDataset& ds) {
  EvalReport report = evaluate(truth, recon);
  if (truth.edge_count() > 0) report.bounds = bounds(ds, truth.edge_count());
  return report;
}

// --- report serialization --------------------------------------------------

/// "key value" lines, one metric per line; bound keys only when present.
inline std::string eval_report_to_kv(const EvalReport& r) {
  std::string out;
  out += "tp " + std::to_string(r.tp) + "\n";
  out += "fp " + std::to_string(r.fp) + "\n";
  out += "tpr " + fmt_double(r.tpr) + "\n";
  out += "fpr " + fmt_double(r.fpr) + "\n";
  out += "jd " + fmt_double(r.jd) + "\n";
  if (r.bounds) {
    const BoundsReport& b = *r.bounds;
    out += "tp_lower " + std::to_string(b.tp_lower) + "\n";
    if (b.tpr_lower) out += "tpr_lower " + fmt_double(*b.tpr_lower) + "\n";
    if (b.h1) out += "h1 " + fmt_double(*b.h1) + "\n";
    if (b.h2) out += "h2 " + fmt_double(*b.h2) + "\n";
    if (b.h_min) out += "h_min " + fmt_double(*b.h_min) + "\n";
    if (b.fp_upper) out += "fp_upper " + fmt_double(*b.fp_upper) + "\n";
    if (b.fpr_upper) out += "fpr_upper " + fmt_double(*b.fpr_upper) + "\n";
    if (b.jd_upper) out += "jd_upper " + fmt_double(*b.jd_upper) + "\n";
  }
  return out;
}

inline std::string eval_report_csv_header() {
  return "tp,fp,tpr,fpr,jd,tp_lower,h1,h2,fp_upper,fpr_upper,jd_upper";
}

/// One CSV row matching eval_report_csv_header(); absent bounds leave empty cells.
inline std::string eval_report_to_csv_row(const EvalReport& r) {
  auto cell = [](const std::optional<double>& v) { return v ? fmt_double(*v) : std::string(); };
  std::string out;
  out += std::to_string(r.tp) + "," + std::to_string(r.fp) + ",";
  out += fmt_double(r.tpr) + "," + fmt_double(r.fpr) + "," + fmt_double(r.jd) + ",";
  if (r.bounds) {
    const BoundsReport& b = *r.bounds;
    out += std::to_string(b.tp_lower) + ",";
    out += cell(b.h1) + "," + cell(b.h2) + ",";
    out += cell(b.fp_upper) + "," + cell(b.fpr_upper) + "," + cell(b.jd_upper);
  } else {
    out += ",,,,,";
  }
  return out;
}

}  // namespace netcover
