#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netcover/analysis.hpp"
#include "netcover/graph.hpp"
#include "netcover/mdl.hpp"
#include "netcover/setcover.hpp"
#include "netcover/synth.hpp"
#include "netcover/trace.hpp"

namespace netcover {

enum class Method { kCover, kMdl, kNaive1, kNaive2 };

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::kCover: return "cover";
    case Method::kMdl: return "mdl";
    case Method::kNaive1: return "naive1";
    case Method::kNaive2: return "naive2";
  }
  throw std::logic_error("unknown method");
}

inline std::optional<Method> parse_method(std::string_view name) {
  if (name == "cover") return Method::kCover;
  if (name == "mdl") return Method::kMdl;
  if (name == "naive1") return Method::kNaive1;
  if (name == "naive2") return Method::kNaive2;
  return std::nullopt;
}

inline Network reconstruct_with(Method m, const MarkerDataset& ds) {
  switch (m) {
    case Method::kCover: return reconstruct_cover(ds).network;
    case Method::kMdl: return reconstruct_mdl_detailed(ds).network;
    case Method::kNaive1: return naive1(ds);
    case Method::kNaive2: return naive2(ds);
  }
  throw std::logic_error("unknown method");
}

/// One synthetic benchmark grid. marker_counts must be strictly increasing;
/// p_loss_levels must each lie in [0,1].
struct SweepOptions {
  NodeId node_count = 100;
  double avg_degree = 2.0;
  SirParams sir{};
  int seed_count = 10;
  std::uint64_t base_seed = 1;
  std::vector<int> marker_counts;
  std::vector<double> p_loss_levels;
};

namespace detail {

inline constexpr std::uint64_t kExpNetStream = 0x6578702d6e657400ull;
inline constexpr std::uint64_t kExpSimStream = 0x6578702d73696d00ull;
inline constexpr std::uint64_t kExpNoiseStream = 0x6578702d6e6f6900ull;

inline void check_sweep(const SweepOptions& opt) {
  if (opt.node_count < 1) throw std::invalid_argument("node count must be positive");
  if (opt.seed_count < 1) throw std::invalid_argument("seed count must be positive");
  if (opt.avg_degree < 0 || opt.avg_degree > opt.node_count)
    throw std::invalid_argument("avg degree must be in [0, node count]");
  for (std::size_t i = 0; i < opt.marker_counts.size(); ++i) {
    if (opt.marker_counts[i] < 0) throw std::invalid_argument("marker counts must be non-negative");
    if (i > 0 && opt.marker_counts[i] <= opt.marker_counts[i - 1])
      throw std::invalid_argument("marker counts must be strictly increasing");
  }
  for (double p : opt.p_loss_levels) check_prob(p, "p_loss");
}

// Cell seeds mix in the replicate index and, for noise, the raw bits of
// p_loss, never positions in the request lists; adding a marker count or a
// noise level leaves every other cell's data untouched.
inline Network cell_network(const SweepOptions& opt, int rep) {
  return generate_er(opt.node_count, opt.avg_degree / static_cast<double>(opt.node_count),
                     derive_seed(derive_seed(opt.base_seed, kExpNetStream),
                                 static_cast<std::uint64_t>(rep)));
}

inline MarkerDataset cell_dataset(const SweepOptions& opt, const Network& net, int rep,
                                  int markers, double p_loss) {
  MarkerDataset ds = simulate_dataset(
      net, opt.sir, markers,
      derive_seed(derive_seed(opt.base_seed, kExpSimStream), static_cast<std::uint64_t>(rep)));
  if (p_loss == 0.0) return ds;
  const std::uint64_t noise_seed =
      derive_seed(derive_seed(derive_seed(opt.base_seed, kExpNoiseStream),
                              static_cast<std::uint64_t>(rep)),
                  std::bit_cast<std::uint64_t>(p_loss));
  return apply_noise(ds, NoiseParams{p_loss}, noise_seed);
}

}  // namespace detail

/// Reconstruction quality versus dataset size, noise-free, for the covering
/// method and both baselines, with the data-derived bounds alongside.
inline void run_fig1(const SweepOptions& opt, std::ostream& out) {
  detail::check_sweep(opt);
  out << "method,markers,seed,tpr,fpr,jd,tpr_lower,fpr_upper,jd_upper\n";
  auto cell = [](const std::optional<double>& v) { return v ? fmt_double(*v) : std::string(); };
  for (int markers : opt.marker_counts) {
    for (int rep = 0; rep < opt.seed_count; ++rep) {
      Network truth = detail::cell_network(opt, rep);
      MarkerDataset ds = detail::cell_dataset(opt, truth, rep, markers, 0.0);
      for (Method m : {Method::kCover, Method::kNaive1, Method::kNaive2}) {
        EvalReport ev = evaluate(truth, reconstruct_with(m, ds), ds);
        out << method_name(m) << ',' << markers << ',' << rep << ',' << fmt_double(ev.tpr)
            << ',' << fmt_double(ev.fpr) << ',' << fmt_double(ev.jd) << ',';
        if (ev.bounds)
          out << cell(ev.bounds->tpr_lower) << ',' << cell(ev.bounds->fpr_upper) << ','
              << cell(ev.bounds->jd_upper);
        else
          out << ",,";
        out << '\n';
      }
    }
  }
}

/// Metric trajectories along the ranked edge list under noise, with the
/// description length and the chosen stopping point per replicate.
inline void run_fig2(const SweepOptions& opt, std::ostream& out) {
  detail::check_sweep(opt);
  if (opt.marker_counts.size() != 1)
    throw std::invalid_argument("fig2 uses exactly one marker count");
  out << "p_loss,seed,edges,dl_nats,tpr,fpr,jd,mdl_stop\n";
  const int markers = opt.marker_counts[0];
  for (double p_loss : opt.p_loss_levels) {
    for (int rep = 0; rep < opt.seed_count; ++rep) {
      Network truth = detail::cell_network(opt, rep);
      MarkerDataset ds = detail::cell_dataset(opt, truth, rep, markers, p_loss);
      MdlResult mdl = reconstruct_mdl_detailed(ds);
      const std::int64_t n = truth.node_count();
      const std::int64_t truth_edges = truth.edge_count();
      const std::int64_t non_edges = n * (n - 1) - truth_edges;
      std::int64_t tp = 0;
      std::int64_t fp = 0;
      for (std::size_t k = 0; k < mdl.curve.size(); ++k) {
        if (k > 0) {
          const Edge e = mdl.ranked[k - 1].edge;
          if (truth.has_edge(e.src, e.dst))
            ++tp;
          else
            ++fp;
        }
        const std::int64_t recon_edges = static_cast<std::int64_t>(k);
        const std::int64_t union_size = truth_edges + recon_edges - tp;
        double tpr = truth_edges > 0 ? static_cast<double>(tp) / static_cast<double>(truth_edges) : 0.0;
        double fpr = non_edges > 0 ? static_cast<double>(fp) / static_cast<double>(non_edges) : 0.0;
        double jd = union_size > 0
                        ? static_cast<double>(union_size - tp) / static_cast<double>(union_size)
                        : 0.0;
        out << fmt_double(p_loss) << ',' << rep << ',' << mdl.curve[k].edge_count << ','
            << fmt_double(mdl.curve[k].dl_nats, 17) << ',' << fmt_double(tpr) << ','
            << fmt_double(fpr) << ',' << fmt_double(jd) << ','
            << (k == mdl.chosen_edges ? 1 : 0) << '\n';
      }
    }
  }
}

/// Covering versus MDL stopping across noise levels and dataset sizes.
inline void run_fig3(const SweepOptions& opt, std::ostream& out) {
  detail::check_sweep(opt);
  out << "method,p_loss,markers,seed,tpr,fpr,jd\n";
  for (double p_loss : opt.p_loss_levels) {
    for (int markers : opt.marker_counts) {
      for (int rep = 0; rep < opt.seed_count; ++rep) {
        Network truth = detail::cell_network(opt, rep);
        MarkerDataset ds = detail::cell_dataset(opt, truth, rep, markers, p_loss);
        for (Method m : {Method::kCover, Method::kMdl}) {
          EvalReport ev = evaluate(truth, reconstruct_with(m, ds));
          out << method_name(m) << ',' << fmt_double(p_loss) << ',' << markers << ',' << rep
              << ',' << fmt_double(ev.tpr) << ',' << fmt_double(ev.fpr) << ','
              << fmt_double(ev.jd) << '\n';
        }
      }
    }
  }
}

}  // namespace netcover
