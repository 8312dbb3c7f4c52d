#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "netcover/netcover.hpp"

using namespace netcover;
namespace fs = std::filesystem;

namespace {

const std::string kCli = NETCOVER_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("netcover_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  fs::path operator/(const std::string& name) const { return path / name; }
};

int run(const std::string& args) {
  int status = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) { return read_file_text(p); }

}  // namespace

TEST_CASE("generate writes a deterministic network file") {
  TempDir dir;
  auto net_a = dir / "a.txt";
  auto net_b = dir / "b.txt";
  REQUIRE(run("generate --nodes 40 --avg-degree 2 --seed 5 -o " + net_a.string()) == 0);
  REQUIRE(run("generate --nodes 40 --avg-degree 2 --seed 5 -o " + net_b.string()) == 0);
  REQUIRE(slurp(net_a) == slurp(net_b));

  Network net = load_network(net_a);
  REQUIRE(net.node_count() == 40);
  REQUIRE(net == generate_er(40, 2.0 / 40.0, 5));

  auto net_c = dir / "c.txt";
  REQUIRE(run("generate --nodes 40 --edge-prob 0.05 --seed 5 -o " + net_c.string()) == 0);
  REQUIRE(load_network(net_c) == generate_er(40, 0.05, 5));
}

TEST_CASE("generate rejects bad arguments") {
  TempDir dir;
  auto out = (dir / "net.txt").string();
  REQUIRE(run("generate --nodes 0 -o " + out) != 0);
  REQUIRE(run("generate --nodes 10 --edge-prob 1.5 -o " + out) != 0);
  REQUIRE(run("generate --nodes 10 --avg-degree 2 --edge-prob 0.1 -o " + out) != 0);
  REQUIRE(run("generate --nodes 10") != 0);
}

TEST_CASE("simulate produces loadable traces that match the library") {
  TempDir dir;
  auto net_path = dir / "net.txt";
  auto tr_path = dir / "traces.txt";
  REQUIRE(run("generate --nodes 50 --seed 2 -o " + net_path.string()) == 0);
  REQUIRE(run("simulate --network " + net_path.string() + " --markers 120 --seed 9 -o " +
              tr_path.string()) == 0);

  Network net = load_network(net_path);
  MarkerDataset ds = load_traces(tr_path);
  REQUIRE(ds.node_count() == 50);
  REQUIRE(ds.size() <= 120);
  REQUIRE(ds == simulate_dataset(net, SirParams{}, 120, 9));

  auto tr_again = dir / "traces2.txt";
  REQUIRE(run("simulate --network " + net_path.string() + " --markers 120 --seed 9 -o " +
              tr_again.string()) == 0);
  REQUIRE(slurp(tr_path) == slurp(tr_again));
}

TEST_CASE("simulate with total loss leaves a header-only file") {
  TempDir dir;
  auto net_path = dir / "net.txt";
  auto tr_path = dir / "traces.txt";
  REQUIRE(run("generate --nodes 20 --seed 3 -o " + net_path.string()) == 0);
  REQUIRE(run("simulate --network " + net_path.string() +
              " --markers 30 --p-loss 1.0 --seed 4 -o " + tr_path.string()) == 0);
  REQUIRE(slurp(tr_path) == "N 20\n");
  REQUIRE(load_traces(tr_path).size() == 0);
}

TEST_CASE("reconstruct methods agree with the library and stay consistent") {
  TempDir dir;
  auto net_path = dir / "net.txt";
  auto tr_path = dir / "traces.txt";
  REQUIRE(run("generate --nodes 50 --seed 6 -o " + net_path.string()) == 0);
  REQUIRE(run("simulate --network " + net_path.string() + " --markers 200 --seed 7 -o " +
              tr_path.string()) == 0);
  MarkerDataset ds = load_traces(tr_path);

  auto cover_path = dir / "cover.txt";
  auto plan_path = dir / "plan.txt";
  REQUIRE(run("reconstruct --traces " + tr_path.string() + " --method cover -o " +
              cover_path.string() + " --emit-plan " + plan_path.string()) == 0);
  Network cover = load_network(cover_path);
  REQUIRE(cover == reconstruct_cover(ds).network);
  for (const MarkerTrace& t : ds) REQUIRE(is_locally_consistent(cover, t));
  REQUIRE(load_cover_plan(plan_path) == reconstruct_cover(ds).plan);

  auto n2_path = dir / "naive2.txt";
  REQUIRE(run("reconstruct --traces " + tr_path.string() + " --method naive2 -o " +
              n2_path.string()) == 0);
  REQUIRE(load_network(n2_path).edge_count() == tp_lower(ds));

  auto mdl_path = dir / "mdl.txt";
  auto curve_path = dir / "curve.csv";
  REQUIRE(run("reconstruct --traces " + tr_path.string() + " --method mdl -o " +
              mdl_path.string() + " --emit-dl-curve " + curve_path.string()) == 0);
  MdlResult mdl = reconstruct_mdl_detailed(ds);
  REQUIRE(load_network(mdl_path) == mdl.network);
  auto curve = load_dl_curve(curve_path);
  REQUIRE(curve == mdl.curve);
  REQUIRE(curve.size() == mdl.ranked.size() + 1);
}

TEST_CASE("reconstruct argument validation") {
  TempDir dir;
  auto out = (dir / "out.txt").string();
  auto tr = dir / "tr.txt";
  save_traces(MarkerDataset(3), tr);
  REQUIRE(run("reconstruct --traces " + tr.string() + " --method bogus -o " + out) != 0);
  REQUIRE(run("reconstruct --traces " + tr.string() + " --method naive1 --emit-plan " +
              (dir / "p.txt").string() + " -o " + out) != 0);
  REQUIRE(run("reconstruct --traces " + tr.string() + " --method cover --emit-dl-curve " +
              (dir / "c.csv").string() + " -o " + out) != 0);
  REQUIRE(run("reconstruct --traces " + (dir / "missing.txt").string() + " -o " + out) != 0);
}

TEST_CASE("evaluate emits matching kv and csv reports") {
  TempDir dir;
  auto net_path = dir / "net.txt";
  auto tr_path = dir / "traces.txt";
  auto recon_path = dir / "recon.txt";
  REQUIRE(run("generate --nodes 40 --seed 8 -o " + net_path.string()) == 0);
  REQUIRE(run("simulate --network " + net_path.string() + " --markers 150 --seed 9 -o " +
              tr_path.string()) == 0);
  REQUIRE(run("reconstruct --traces " + tr_path.string() + " -o " + recon_path.string()) == 0);

  auto kv_path = dir / "report.txt";
  REQUIRE(run("evaluate --truth " + net_path.string() + " --recon " + recon_path.string() +
              " --traces " + tr_path.string() + " -o " + kv_path.string()) == 0);
  EvalReport expect = evaluate(load_network(net_path), load_network(recon_path),
                               load_traces(tr_path));
  REQUIRE(slurp(kv_path) == eval_report_to_kv(expect));

  auto csv_path = dir / "report.csv";
  REQUIRE(run("evaluate --truth " + net_path.string() + " --recon " + recon_path.string() +
              " --traces " + tr_path.string() + " --csv -o " + csv_path.string()) == 0);
  REQUIRE(slurp(csv_path) ==
          eval_report_csv_header() + "\n" + eval_report_to_csv_row(expect) + "\n");

  REQUIRE(run("evaluate --truth " + net_path.string() + " --recon " +
              (dir / "missing.txt").string()) != 0);
}

TEST_CASE("experiment presets write stable csv grids") {
  TempDir dir;
  auto a = dir / "fig1a.csv";
  auto b = dir / "fig1b.csv";
  std::string common = " --nodes 30 --seeds 2 --markers 40,80 --seed 3 -o ";
  REQUIRE(run("experiment fig1" + common + a.string()) == 0);
  REQUIRE(run("experiment fig1" + common + b.string()) == 0);
  std::string text = slurp(a);
  REQUIRE(text == slurp(b));
  REQUIRE(text.rfind("method,markers,seed,tpr,fpr,jd,tpr_lower,fpr_upper,jd_upper\n", 0) == 0);
  // header + 2 counts x 2 seeds x 3 methods
  REQUIRE(std::count(text.begin(), text.end(), '\n') == 13);

  auto fig2 = dir / "fig2.csv";
  REQUIRE(run("experiment fig2 --nodes 25 --seeds 1 --markers 60 --p-loss 0.1 --seed 3 -o " +
              fig2.string()) == 0);
  std::string fig2_text = slurp(fig2);
  REQUIRE(fig2_text.rfind("p_loss,seed,edges,dl_nats,tpr,fpr,jd,mdl_stop\n", 0) == 0);

  auto fig3 = dir / "fig3.csv";
  REQUIRE(run("experiment fig3 --nodes 25 --seeds 1 --markers 30,60 --p-loss 0,0.1 --seed 3 -o " +
              fig3.string()) == 0);
  std::string fig3_text = slurp(fig3);
  REQUIRE(fig3_text.rfind("method,p_loss,markers,seed,tpr,fpr,jd\n", 0) == 0);
  REQUIRE(std::count(fig3_text.begin(), fig3_text.end(), '\n') == 9);

  REQUIRE(run("experiment fig1 --markers 80,40 -o " + (dir / "bad.csv").string()) != 0);
  REQUIRE(run("experiment wat -o " + (dir / "bad.csv").string()) != 0);
}

TEST_CASE("experiment grid cells are stable when the grid grows") {
  TempDir dir;
  auto small = dir / "small.csv";
  auto big = dir / "big.csv";
  REQUIRE(run("experiment fig3 --nodes 25 --seeds 2 --markers 40 --p-loss 0.1 --seed 5 -o " +
              small.string()) == 0);
  REQUIRE(run("experiment fig3 --nodes 25 --seeds 2 --markers 40,80 --p-loss 0.05,0.1 --seed 5 -o " +
              big.string()) == 0);
  std::istringstream small_in(slurp(small));
  std::string line;
  std::getline(small_in, line);  // header
  std::string big_text = slurp(big);
  while (std::getline(small_in, line))
    REQUIRE(big_text.find(line + "\n") != std::string::npos);
}
