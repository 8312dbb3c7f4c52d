#pragma once

// Umbrella header: causal network reconstruction from ordered report traces
// by per-node greedy covering, with description-length early stopping,
// synthetic SIR data, naive baselines, and quality bounds.

#include "netcover/analysis.hpp"
#include "netcover/consistency.hpp"
#include "netcover/experiment.hpp"
#include "netcover/graph.hpp"
#include "netcover/io.hpp"
#include "netcover/mdl.hpp"
#include "netcover/rng.hpp"
#include "netcover/setcover.hpp"
#include "netcover/synth.hpp"
#include "netcover/trace.hpp"
