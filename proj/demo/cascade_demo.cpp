// End-to-end tour: synthesize a network, observe outbreak traces, then
// recover the wiring by set covering and compare with the MDL stopping rule.

#include <iostream>

#include "netcover/netcover.hpp"

int main() {
  using namespace netcover;

  const NodeId nodes = 60;
  Network truth = generate_er(nodes, 2.0 / nodes, 7);
  MarkerDataset clean = simulate_dataset(truth, SirParams{0.1, 0.1, 1}, 600, 11);
  MarkerDataset noisy = apply_noise(clean, NoiseParams{0.1}, 13);

  std::cout << "truth: " << truth.edge_count() << " edges, " << clean.size()
            << " clean traces, " << noisy.size() << " noisy traces\n\n";

  auto describe = [&](const char* label, const Network& recon) {
    EvalReport ev = evaluate(truth, recon);
    std::cout << label << ": " << recon.edge_count() << " edges, tpr " << fmt_double(ev.tpr, 3)
              << ", fpr " << fmt_double(ev.fpr, 3) << ", jd " << fmt_double(ev.jd, 3) << "\n";
  };

  describe("cover  on clean data", reconstruct_cover(clean).network);
  describe("naive1 on clean data", naive1(clean));
  describe("naive2 on clean data", naive2(clean));

  std::cout << "\n";
  describe("cover  on noisy data", reconstruct_cover(noisy).network);
  MdlResult mdl = reconstruct_mdl_detailed(noisy);
  describe("mdl    on noisy data", mdl.network);
  std::cout << "\nmdl kept " << mdl.chosen_edges << " of " << mdl.ranked.size()
            << " ranked edges; dl " << fmt_double(mdl.curve.front().dl_nats, 6) << " -> "
            << fmt_double(mdl.curve[mdl.chosen_edges].dl_nats, 6) << " nats\n";

  BoundsReport b = bounds(noisy, truth.edge_count());
  if (b.jd_upper)
    std::cout << "data-derived worst case: jd <= " << fmt_double(*b.jd_upper, 3) << "\n";
  return 0;
}
