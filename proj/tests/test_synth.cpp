#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "netcover/consistency.hpp"
#include "netcover/graph.hpp"
#include "netcover/synth.hpp"

using namespace netcover;

TEST_CASE("er generator respects probability extremes") {
  Network none = generate_er(10, 0.0, 3);
  REQUIRE(none.edge_count() == 0);

  Network full = generate_er(10, 1.0, 3);
  REQUIRE(full.edge_count() == 90);

  REQUIRE_THROWS_AS(generate_er(0, 0.5, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(generate_er(5, 1.5, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(generate_er(5, -0.1, 1), std::invalid_argument);
}

TEST_CASE("er generator is deterministic per seed") {
  Network a = generate_er(50, 0.05, 42);
  Network b = generate_er(50, 0.05, 42);
  Network c = generate_er(50, 0.05, 43);
  REQUIRE(a == b);
  REQUIRE_FALSE(a == c);
}

TEST_CASE("a seed with no out-edges yields a single-report trace") {
  Network net = Network::from_edges(2, {{0, 1}});
  // Node 1 has no out-edges; whenever it seeds, the outbreak stops at once.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    MarkerTrace t = simulate_marker(net, SirParams{1.0, 0.0, 1}, seed);
    if (t.originator() == 1) {
      REQUIRE(t.size() == 1);
      return;
    }
  }
  FAIL("no trial seeded node 1");
}

TEST_CASE("certain transmission walks the whole chain when recovery is off") {
  Network chain = Network::from_edges(3, {{0, 1}, {1, 2}});
  SirParams params{1.0, 0.0, 1};
  bool seen_full_chain = false;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    MarkerTrace t = simulate_marker(chain, params, seed);
    if (t.originator() == 0) {
      REQUIRE(t.nodes() == std::vector<NodeId>{0, 1, 2});
      seen_full_chain = true;
    } else if (t.originator() == 1) {
      REQUIRE(t.nodes() == std::vector<NodeId>{1, 2});
    } else {
      REQUIRE(t.nodes() == std::vector<NodeId>{2});
    }
  }
  REQUIRE(seen_full_chain);
}

TEST_CASE("recovery is drawn before transmission within a step") {
  // With certain recovery the seed is removed before it can ever transmit,
  // so every outbreak dies immediately.
  Network chain = Network::from_edges(3, {{0, 1}, {1, 2}});
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    MarkerTrace t = simulate_marker(chain, SirParams{1.0, 1.0, 1}, seed);
    REQUIRE(t.size() == 1);
  }
}

TEST_CASE("simulated traces are globally consistent with the generating network") {
  Rng seeds(99);
  for (int iter = 0; iter < 20; ++iter) {
    Network net = generate_er(30, 0.1, seeds.next_u64());
    MarkerDataset ds = simulate_dataset(net, SirParams{0.3, 0.2, 1}, 40, seeds.next_u64());
    for (const MarkerTrace& t : ds) {
      REQUIRE(is_globally_consistent(net, t));
      REQUIRE(is_locally_consistent(net, t));
    }
  }
}

TEST_CASE("dataset simulation basics") {
  Network net = generate_er(20, 0.1, 5);
  MarkerDataset empty = simulate_dataset(net, SirParams{}, 0, 9);
  REQUIRE(empty.size() == 0);
  REQUIRE(empty.node_count() == 20);

  MarkerDataset a = simulate_dataset(net, SirParams{}, 50, 9);
  MarkerDataset b = simulate_dataset(net, SirParams{}, 50, 9);
  REQUIRE(a == b);
  REQUIRE(a.size() <= 50);

  REQUIRE_THROWS_AS(simulate_dataset(net, SirParams{}, -1, 9), std::invalid_argument);
  REQUIRE_THROWS_AS(simulate_dataset(net, SirParams{2.0, 0.1, 1}, 5, 9), std::invalid_argument);
}

TEST_CASE("datasets with the same seed nest across marker counts") {
  Network net = generate_er(25, 0.08, 77);
  SirParams params{0.2, 0.3, 1};
  MarkerDataset small = simulate_dataset(net, params, 30, 123);
  MarkerDataset big = simulate_dataset(net, params, 90, 123);
  REQUIRE(small.size() <= big.size());
  for (std::size_t i = 0; i < small.size(); ++i) REQUIRE(small.trace(i) == big.trace(i));
}

TEST_CASE("minimum trace length filters short outbreaks") {
  // Star plus an isolated node: seeds at leaves or the isolated node produce
  // length-1 traces, which the filter must drop.
  Network star = Network::from_edges(5, {{0, 1}, {0, 2}, {0, 3}});
  MarkerDataset ds = simulate_dataset(star, SirParams{1.0, 0.0, 2}, 80, 31);
  REQUIRE(ds.size() > 0);
  REQUIRE(ds.size() < 80);
  for (const MarkerTrace& t : ds) {
    REQUIRE(t.size() >= 2);
    REQUIRE(t.originator() == 0);
  }
}

TEST_CASE("noise keeps report order and drops empty traces") {
  MarkerDataset ds = testutil::dataset(6, {{0, 1, 2, 3}, {4, 5}, {2}});

  MarkerDataset clean = apply_noise(ds, NoiseParams{0.0}, 1);
  REQUIRE(clean == ds);

  MarkerDataset gone = apply_noise(ds, NoiseParams{1.0}, 1);
  REQUIRE(gone.size() == 0);
  REQUIRE(gone.node_count() == 6);

  REQUIRE_THROWS_AS(apply_noise(ds, NoiseParams{-0.5}, 1), std::invalid_argument);

  // Every noisy trace is an ordered subsequence of its original.
  MarkerDataset base = testutil::dataset(8, {{0, 1, 2, 3, 4, 5, 6, 7}});
  bool dropped_inner_only = false;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    MarkerDataset noisy = apply_noise(base, NoiseParams{0.4}, seed);
    if (noisy.size() == 0) continue;
    const MarkerTrace& t = noisy.trace(0);
    std::size_t cursor = 0;
    for (NodeId v : base.trace(0))
      if (cursor < t.size() && t[cursor] == v) ++cursor;
    REQUIRE(cursor == t.size());
    dropped_inner_only = dropped_inner_only || t.size() < 8;
  }
  REQUIRE(dropped_inner_only);
}

TEST_CASE("losing an interior report leaves the shortcut pair adjacent") {
  MarkerDataset base = testutil::dataset(3, {{0, 1, 2}});
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    MarkerDataset noisy = apply_noise(base, NoiseParams{0.4}, seed);
    if (noisy.size() == 1 && noisy.trace(0).nodes() == std::vector<NodeId>{0, 2}) return;
  }
  FAIL("no seed dropped exactly the interior report");
}

TEST_CASE("noise application is deterministic per seed") {
  Network net = generate_er(30, 0.08, 2);
  MarkerDataset ds = simulate_dataset(net, SirParams{}, 60, 4);
  REQUIRE(apply_noise(ds, NoiseParams{0.3}, 17) == apply_noise(ds, NoiseParams{0.3}, 17));
}
