#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netcover/netcover.hpp"

namespace {

using namespace netcover;

struct GenerateArgs {
  NodeId nodes = 0;
  double avg_degree = 2.0;
  std::optional<double> edge_prob;
  std::uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  double p = args.edge_prob ? *args.edge_prob
                            : args.avg_degree / static_cast<double>(args.nodes);
  Network net = generate_er(args.nodes, p, args.seed);
  save_network(net, args.out);
  return 0;
}

struct SimulateArgs {
  std::string network;
  int markers = 1000;
  SirParams sir{};
  double p_loss = 0.0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_simulate(const SimulateArgs& args) {
  Network net = load_network(args.network);
  MarkerDataset ds = simulate_dataset(net, args.sir, args.markers, args.seed);
  if (args.p_loss > 0.0)
    ds = apply_noise(ds, NoiseParams{args.p_loss}, derive_seed(args.seed, 0x636c692d6e6f6973ull));
  save_traces(ds, args.out);
  return 0;
}

struct ReconstructArgs {
  std::string traces;
  std::string method = "cover";
  std::string out;
  std::string plan_out;
  std::string curve_out;
};

int run_reconstruct(const ReconstructArgs& args) {
  Method method = *parse_method(args.method);
  if (!args.plan_out.empty() && method != Method::kCover && method != Method::kMdl)
    throw std::invalid_argument("--emit-plan requires --method cover or mdl");
  if (!args.curve_out.empty() && method != Method::kMdl)
    throw std::invalid_argument("--emit-dl-curve requires --method mdl");
  MarkerDataset ds = load_traces(args.traces);

  if (method == Method::kMdl) {
    MdlResult r = reconstruct_mdl_detailed(ds);
    save_network(r.network, args.out);
    if (!args.plan_out.empty())
      save_cover_plan(CoverPlan{ds.node_count(), r.ranked}, args.plan_out);
    if (!args.curve_out.empty()) save_dl_curve(r.curve, args.curve_out);
    return 0;
  }
  if (method == Method::kCover) {
    CoverResult r = reconstruct_cover(ds);
    save_network(r.network, args.out);
    if (!args.plan_out.empty()) save_cover_plan(r.plan, args.plan_out);
    return 0;
  }
  save_network(reconstruct_with(method, ds), args.out);
  return 0;
}

struct EvaluateArgs {
  std::string truth;
  std::string recon;
  std::string traces;
  std::string out;
  bool csv = false;
};

int run_evaluate(const EvaluateArgs& args) {
  Network truth = load_network(args.truth);
  Network recon = load_network(args.recon);
  EvalReport report;
  if (args.traces.empty()) {
    report = evaluate(truth, recon);
  } else {
    MarkerDataset ds = load_traces(args.traces);
    if (ds.node_count() != truth.node_count())
      throw std::invalid_argument("traces node count does not match the truth network");
    report = evaluate(truth, recon, ds);
  }
  std::string text = args.csv
                         ? eval_report_csv_header() + "\n" + eval_report_to_csv_row(report) + "\n"
                         : eval_report_to_kv(report);
  if (args.out.empty())
    std::cout << text;
  else
    write_file_atomic(args.out, text);
  return 0;
}

struct ExperimentArgs {
  std::string preset;
  SweepOptions sweep{};
  std::string out;
};

int run_experiment(const ExperimentArgs& args) {
  std::ostringstream out;
  if (args.preset == "fig1")
    run_fig1(args.sweep, out);
  else if (args.preset == "fig2")
    run_fig2(args.sweep, out);
  else
    run_fig3(args.sweep, out);
  write_file_atomic(args.out, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal network reconstruction from ordered report traces"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Generate a random directed network");
  generate->add_option("--nodes", gen.nodes, "Node count")->required()->check(CLI::PositiveNumber);
  CLI::Option* avg_opt =
      generate->add_option("--avg-degree", gen.avg_degree, "Expected out-degree (edge prob = k/N)")
          ->check(CLI::NonNegativeNumber);
  generate->add_option("--edge-prob", gen.edge_prob, "Edge probability, overrides --avg-degree")
      ->check(CLI::Range(0.0, 1.0))
      ->excludes(avg_opt);
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("-o,--out", gen.out, "Output network file")->required();

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Simulate marker traces on a network");
  simulate->add_option("--network", sim.network, "Input network file")->required();
  simulate->add_option("--markers", sim.markers, "Marker count")->check(CLI::NonNegativeNumber);
  simulate->add_option("--p-infect", sim.sir.p_infect, "Per-edge infection probability")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--p-recover", sim.sir.p_recover, "Per-step recovery probability")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--p-loss", sim.p_loss, "Report loss probability")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--min-length", sim.sir.min_trace_length, "Drop traces shorter than this");
  simulate->add_option("--seed", sim.seed, "Random seed");
  simulate->add_option("-o,--out", sim.out, "Output trace file")->required();

  ReconstructArgs rec;
  CLI::App* reconstruct = app.add_subcommand("reconstruct", "Reconstruct a network from traces");
  reconstruct->add_option("--traces", rec.traces, "Input trace file")->required();
  reconstruct->add_option("--method", rec.method, "cover, mdl, naive1 or naive2")
      ->check(CLI::IsMember({"cover", "mdl", "naive1", "naive2"}));
  reconstruct->add_option("--emit-plan", rec.plan_out, "Also write the ranked cover plan");
  reconstruct->add_option("--emit-dl-curve", rec.curve_out, "Also write the dl curve CSV");
  reconstruct->add_option("-o,--out", rec.out, "Output network file")->required();

  EvaluateArgs ev;
  CLI::App* evaluate_cmd = app.add_subcommand("evaluate", "Compare a reconstruction to the truth");
  evaluate_cmd->add_option("--truth", ev.truth, "True network file")->required();
  evaluate_cmd->add_option("--recon", ev.recon, "Reconstructed network file")->required();
  evaluate_cmd->add_option("--traces", ev.traces, "Trace file enabling the bound columns");
  evaluate_cmd->add_option("-o,--out", ev.out, "Output file (stdout when omitted)");
  evaluate_cmd->add_flag("--csv", ev.csv, "Emit a CSV header plus one row");

  ExperimentArgs exp;
  CLI::App* experiment = app.add_subcommand("experiment", "Run a benchmark sweep preset");
  experiment->add_option("preset", exp.preset, "fig1, fig2 or fig3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  experiment->add_option("--nodes", exp.sweep.node_count, "Node count")->check(CLI::PositiveNumber);
  experiment->add_option("--avg-degree", exp.sweep.avg_degree, "Expected out-degree");
  experiment->add_option("--p-infect", exp.sweep.sir.p_infect, "Per-edge infection probability")
      ->check(CLI::Range(0.0, 1.0));
  experiment->add_option("--p-recover", exp.sweep.sir.p_recover, "Per-step recovery probability")
      ->check(CLI::Range(0.0, 1.0));
  experiment->add_option("--seeds", exp.sweep.seed_count, "Replicates per grid cell")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp.sweep.base_seed, "Base random seed");
  experiment->add_option("--markers", exp.sweep.marker_counts, "Marker counts, ascending")
      ->delimiter(',');
  experiment->add_option("--p-loss", exp.sweep.p_loss_levels, "Report loss levels")
      ->delimiter(',');
  experiment->add_option("-o,--out", exp.out, "Output CSV file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return run_generate(gen);
    if (simulate->parsed()) return run_simulate(sim);
    if (reconstruct->parsed()) return run_reconstruct(rec);
    if (evaluate_cmd->parsed()) return run_evaluate(ev);
    if (experiment->parsed()) {
      if (exp.sweep.marker_counts.empty()) {
        if (exp.preset == "fig1") exp.sweep.marker_counts = {100, 250, 500, 750, 1000};
        if (exp.preset == "fig2") exp.sweep.marker_counts = {1000};
        if (exp.preset == "fig3") exp.sweep.marker_counts = {250, 500, 1000};
      }
      if (exp.sweep.p_loss_levels.empty()) {
        if (exp.preset == "fig1") exp.sweep.p_loss_levels = {0.0};
        if (exp.preset == "fig2") exp.sweep.p_loss_levels = {0.1};
        if (exp.preset == "fig3") exp.sweep.p_loss_levels = {0.0, 0.05, 0.1};
      }
      return run_experiment(exp);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
